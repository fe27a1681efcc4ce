#pragma once

#include <optional>
#include <vector>

#include "capelli/rat.hpp"

namespace capelli {

using RatMatrix = std::vector<std::vector<Rat>>;

// Solves the square system a*x = b by Gauss-Jordan elimination over Q.
// Returns nullopt when a is singular.
std::optional<std::vector<Rat>> solve_linear(RatMatrix a, std::vector<Rat> b);

}  // namespace capelli
