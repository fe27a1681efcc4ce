#pragma once

#include <string>

#include "capelli/bipoly.hpp"

namespace capelli {

enum class Basis { Monomial, Falling };

struct RenderOptions {
  Basis basis = Basis::Monomial;
  bool unicode = true;
  // name of the formal parameter of RatFunc coefficients
  std::string param = "κ";
};

RenderOptions pretty_options(Basis basis = Basis::Monomial, const std::string& param = "κ");
RenderOptions ascii_options(Basis basis = Basis::Monomial, const std::string& param = "kappa");

// Graded-lex order, highest total degree first and within a degree highest x power first.
std::string render(const BiPoly<Rat>& f, const RenderOptions& opts = {});
std::string render(const BiPoly<RatFunc>& f, const RenderOptions& opts = {});
std::string render(const UniPoly& p, const std::string& var, bool unicode);

}  // namespace capelli
