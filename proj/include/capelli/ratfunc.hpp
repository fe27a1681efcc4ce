#pragma once

#include <string>

#include "capelli/unipoly.hpp"

namespace capelli {

// num/den in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}          // NOLINT
  RatFunc(long c) : num_(Rat(c)), den_(1) {}           // NOLINT
  RatFunc(const UniPoly& p) : num_(p), den_(1) {}      // NOLINT
  RatFunc(const UniPoly& num, const UniPoly& den);

  static RatFunc var() { return RatFunc(UniPoly::var()); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  Rat constant_value() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Throws PoleError carrying the pole order when den(a) == 0.
  Rat eval(const Rat& a) const;
  // Order of vanishing at a; negative for a pole. Zero input is an error.
  int valuation(const Rat& a) const;
  // lim (x-a) f; pole orders above one are rejected.
  Rat residue(const Rat& a) const;
  // lim (f - residue/(x-a)).
  Rat regular_value(const Rat& a) const;
  RatFunc derivative() const;
  // f(a*x + b)
  RatFunc compose_linear(const Rat& a, const Rat& b) const;

  std::string str(const std::string& var = "x", bool unicode = false) const;

 private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace capelli
