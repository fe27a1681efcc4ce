#pragma once

#include <string>

#include "capelli/rat.hpp"

namespace capelli::detail {

// Appends c*mono to a running sum. Unicode output uses juxtaposition and U+2212,
// ASCII output uses '*' and '-'. Compact output omits spaces around signs.
void append_term(std::string& out, const Rat& c, const std::string& mono, bool unicode,
                 bool spaced);

// Appends (body)*mono where body is an opaque coefficient expression.
void append_raw_term(std::string& out, const std::string& body, const std::string& mono,
                     bool unicode, bool spaced);

std::string power(const std::string& var, int e);

}  // namespace capelli::detail
