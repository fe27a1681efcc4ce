#include "capelli/unipoly.hpp"

#include <utility>

#include "capelli/error.hpp"
#include "format.hpp"

namespace capelli {

namespace {
const Rat kZero = 0;
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rat& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

UniPoly UniPoly::var() { return UniPoly(std::vector<Rat>{0, 1}); }

UniPoly UniPoly::linear(const Rat& a, const Rat& b) { return UniPoly(std::vector<Rat>{b, a}); }

UniPoly UniPoly::falling(unsigned m, const Rat& shift) {
  UniPoly r(1);
  for (unsigned i = 0; i < m; ++i) r *= linear(1, shift - i);
  return r;
}

UniPoly UniPoly::monomial(unsigned deg, const Rat& c) {
  std::vector<Rat> v(deg + 1);
  v[deg] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Rat& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Rat& UniPoly::lead() const { return c_.empty() ? kZero : c_.back(); }

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) fail(ErrorCode::Domain, "polynomial division by zero");
  std::vector<Rat> rem = a.c_;
  int db = b.degree();
  int da = a.degree();
  std::vector<Rat> quo(da >= db ? da - db + 1 : 0);
  Rat inv = 1 / b.lead();
  for (int i = da; i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    Rat f = rem[i] * inv;
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  q = UniPoly(std::move(quo));
  r = UniPoly(std::move(rem));
}

UniPoly UniPoly::exact_div(const UniPoly& b) const {
  UniPoly q, r;
  divmod(*this, b, q, r);
  ensure(r.is_zero(), "inexact polynomial division");
  return q;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / lead());
}

Rat UniPoly::eval(const Rat& a) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::compose_linear(const Rat& a, const Rat& b) const {
  UniPoly lin = linear(a, b);
  UniPoly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + UniPoly(*it);
  return r;
}

UniPoly UniPoly::deflate(const Rat& a) const {
  // synthetic division by (x - a)
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> q(c_.size() - 1);
  Rat carry = 0;
  for (size_t i = c_.size(); i-- > 1;) {
    carry = carry * a + c_[i];
    q[i - 1] = carry;
  }
  ensure(carry * a + c_[0] == 0, "deflation at a non-root");
  return UniPoly(std::move(q));
}

int UniPoly::root_multiplicity(const Rat& a) const {
  require(!is_zero(), "root multiplicity of the zero polynomial");
  int m = 0;
  UniPoly p = *this;
  while (sgn(p.eval(a)) == 0) {
    p = p.deflate(a);
    ++m;
  }
  return m;
}

std::string UniPoly::str(const std::string& var, bool unicode) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (sgn(c_[i]) == 0) continue;
    detail::append_term(out, c_[i], detail::power(var, i), unicode, false);
  }
  return out;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly q, r;
    UniPoly::divmod(x, y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace capelli
