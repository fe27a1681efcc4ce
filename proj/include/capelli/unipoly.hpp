#pragma once

#include <string>
#include <vector>

#include "capelli/rat.hpp"

namespace capelli {

// Dense univariate polynomial over Q, lowest degree first.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(const Rat& c);  // NOLINT: constants convert implicitly
  UniPoly(long c) : UniPoly(Rat(c)) {}  // NOLINT

  static UniPoly var();
  // a*x + b
  static UniPoly linear(const Rat& a, const Rat& b);
  // x(x-1)...(x-m+1), or its shifted version (x+c)(x+c-1)...(x+c-m+1)
  static UniPoly falling(unsigned m, const Rat& shift = 0);
  static UniPoly monomial(unsigned deg, const Rat& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lead() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rat& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
  // Exact quotient; throws Internal if the remainder is nonzero.
  UniPoly exact_div(const UniPoly& b) const;
  UniPoly monic() const;

  Rat eval(const Rat& a) const;
  UniPoly derivative() const;
  // p(a*x + b)
  UniPoly compose_linear(const Rat& a, const Rat& b) const;
  // Multiplicity of a as a root; the zero polynomial is rejected.
  int root_multiplicity(const Rat& a) const;
  // p / (x - a), assuming p(a) == 0.
  UniPoly deflate(const Rat& a) const;

  std::string str(const std::string& var = "x", bool unicode = false) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace capelli
