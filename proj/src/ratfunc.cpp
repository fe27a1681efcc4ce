#include "capelli/ratfunc.hpp"

#include <algorithm>

#include "capelli/error.hpp"

namespace capelli {

RatFunc::RatFunc(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) fail(ErrorCode::Domain, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  Rat l = den_.lead();
  if (l != 1) {
    Rat inv = 1 / l;
    num_ *= inv;
    den_ *= inv;
  }
}

Rat RatFunc::constant_value() const {
  ensure(is_constant(), "rational function is not constant");
  return num_.coeff(0);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) fail(ErrorCode::Domain, "rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

Rat RatFunc::eval(const Rat& a) const {
  Rat d = den_.eval(a);
  if (sgn(d) == 0) {
    int order = den_.root_multiplicity(a);
    throw PoleError(order, "pole of order " + std::to_string(order) + " at " + to_string(a));
  }
  return num_.eval(a) / d;
}

int RatFunc::valuation(const Rat& a) const {
  require(!is_zero(), "valuation of the zero function");
  return num_.root_multiplicity(a) - den_.root_multiplicity(a);
}

Rat RatFunc::residue(const Rat& a) const {
  if (is_zero()) return 0;
  int m = den_.root_multiplicity(a);
  if (m == 0) return 0;
  if (m > 1) throw PoleError(m, "pole of order " + std::to_string(m) + " at " + to_string(a));
  return num_.eval(a) / den_.deflate(a).eval(a);
}

Rat RatFunc::regular_value(const Rat& a) const {
  if (is_zero()) return 0;
  int m = den_.root_multiplicity(a);
  if (m == 0) return eval(a);
  if (m > 1) throw PoleError(m, "pole of order " + std::to_string(m) + " at " + to_string(a));
  UniPoly d1 = den_.deflate(a);
  Rat res = num_.eval(a) / d1.eval(a);
  // f - res/(x-a) = (num - res*d1) / ((x-a) d1), and the numerator vanishes at a
  UniPoly top = num_ - d1 * res;
  return top.deflate(a).eval(a) / d1.eval(a);
}

RatFunc RatFunc::derivative() const {
  if (is_polynomial()) return RatFunc(num_.derivative() * (1 / den_.lead()));
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::compose_linear(const Rat& a, const Rat& b) const {
  return RatFunc(num_.compose_linear(a, b), den_.compose_linear(a, b));
}

std::string RatFunc::str(const std::string& var, bool unicode) const {
  std::string n = num_.str(var, unicode);
  if (is_polynomial()) return n;
  auto wrap = [](const UniPoly& p, const std::string& s) {
    auto terms = std::count_if(p.coeffs().begin(), p.coeffs().end(),
                               [](const Rat& c) { return sgn(c) != 0; });
    return terms <= 1 ? s : "(" + s + ")";
  };
  return wrap(num_, n) + "/" + wrap(den_, den_.str(var, unicode));
}

}  // namespace capelli
