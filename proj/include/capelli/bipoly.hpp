#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "capelli/error.hpp"
#include "capelli/ratfunc.hpp"

namespace capelli {

// Sparse polynomial in x, y over a field F (Rat or RatFunc), monomial basis.
template <class F>
class BiPoly {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, F>;

  BiPoly() = default;
  static BiPoly constant(const F& c) { return monomial(0, 0, c); }
  static BiPoly monomial(int i, int j, const F& c = F(1)) {
    BiPoly r;
    r.add_term(i, j, c);
    return r;
  }
  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }
  // c * x^(m falling) * y^(n falling)
  static BiPoly falling(int m, int n, const F& c = F(1));

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int total_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
    return d;
  }
  F coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? F(0) : it->second;
  }
  void add_term(int i, int j, const F& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = t_.try_emplace(Key{i, j}, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) t_.erase(it);
    }
  }

  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
    return *this;
  }
  BiPoly& operator*=(const F& c) {
    if (is_zero_coeff(c)) {
      t_.clear();
      return *this;
    }
    for (auto& [k, v] : t_) v *= c;
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const F& c) { return a *= c; }
  friend BiPoly operator*(const F& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& [k, v] : r.t_) v = -v;
    return r;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  BiPoly swapped() const {
    BiPoly r;
    for (const auto& [k, c] : t_) r.t_.emplace(Key{k.second, k.first}, c);
    return r;
  }
  bool is_symmetric() const { return swapped() == *this; }

  std::pair<BiPoly, BiPoly> partials() const {
    BiPoly dx, dy;
    for (const auto& [k, c] : t_) {
      if (k.first > 0) dx.add_term(k.first - 1, k.second, c * F(k.first));
      if (k.second > 0) dy.add_term(k.first, k.second - 1, c * F(k.second));
    }
    return {dx, dy};
  }

  F eval(const F& a, const F& b) const {
    int mx = 0, my = 0;
    for (const auto& [k, c] : t_) {
      mx = std::max(mx, k.first);
      my = std::max(my, k.second);
    }
    std::vector<F> pa(mx + 1, F(1)), pb(my + 1, F(1));
    for (int i = 1; i <= mx; ++i) pa[i] = pa[i - 1] * a;
    for (int j = 1; j <= my; ++j) pb[j] = pb[j - 1] * b;
    F r(0);
    for (const auto& [k, c] : t_) r += c * pa[k.first] * pb[k.second];
    return r;
  }

  // Applies fn to every coefficient, dropping zeros.
  template <class G, class Fn>
  BiPoly<G> map(Fn fn) const {
    BiPoly<G> r;
    for (const auto& [k, c] : t_) r.add_term(k.first, k.second, fn(c));
    return r;
  }

 private:
  static bool is_zero_coeff(const F& c) { return capelli::is_zero(c); }
  Map t_;
};

template <class F>
BiPoly<F> BiPoly<F>::falling(int m, int n, const F& c) {
  BiPoly r;
  if (is_zero_coeff(c)) return r;
  UniPoly px = UniPoly::falling(m), py = UniPoly::falling(n);
  for (int i = 0; i <= px.degree(); ++i) {
    if (sgn(px.coeff(i)) == 0) continue;
    for (int j = 0; j <= py.degree(); ++j) {
      if (sgn(py.coeff(j)) == 0) continue;
      r.add_term(i, j, c * F(Rat(px.coeff(i) * py.coeff(j))));
    }
  }
  return r;
}

template <class F>
struct FallingTerm {
  F coeff;
  int m = 0;
  int n = 0;
};

// Monomial expansion of x^(m falling).
inline UniPoly falling_expand(unsigned m) { return UniPoly::falling(m); }

template <class F>
BiPoly<F> from_falling(const std::vector<FallingTerm<F>>& terms) {
  BiPoly<F> r;
  for (const auto& t : terms) r += BiPoly<F>::falling(t.m, t.n, t.coeff);
  return r;
}

// Full expansion in the basis x^(m falling) y^(n falling), by peeling off the
// term of highest total degree; the basis is triangular so this terminates.
template <class F>
std::map<std::pair<int, int>, F> to_falling(const BiPoly<F>& f) {
  std::map<std::pair<int, int>, F> out;
  BiPoly<F> rest = f;
  while (!rest.is_zero()) {
    auto top = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
      int d = it->first.first + it->first.second;
      int dt = top->first.first + top->first.second;
      if (d > dt) top = it;
    }
    auto [m, n] = top->first;
    F c = top->second;
    out.emplace(std::pair<int, int>{m, n}, c);
    rest -= BiPoly<F>::falling(m, n, c);
  }
  return out;
}

template <class F>
F to_falling_coeff(const BiPoly<F>& f, int m, int n) {
  auto all = to_falling(f);
  auto it = all.find({m, n});
  return it == all.end() ? F(0) : it->second;
}

// (f_x - f_y) / (4(x - y)) for symmetric f, by exact division in x over F[y].
template <class F>
BiPoly<F> square_op(const BiPoly<F>& f) {
  require(f.is_symmetric(), "square operator needs a symmetric polynomial");
  auto [fx, fy] = f.partials();
  BiPoly<F> g = fx - fy;
  if (g.is_zero()) return g;
  int dx = 0;
  for (const auto& [k, c] : g.terms()) dx = std::max(dx, k.first);
  std::vector<std::map<int, F>> rows(dx + 1);
  for (const auto& [k, c] : g.terms()) rows[k.first][k.second] = c;
  BiPoly<F> q;
  std::map<int, F> carry;
  for (int i = dx; i >= 0; --i) {
    std::map<int, F> next = rows[i];
    for (const auto& [e, c] : carry) {
      auto [it, inserted] = next.try_emplace(e + 1, c);
      if (!inserted) it->second += c;
    }
    std::erase_if(next, [](const auto& kv) { return capelli::is_zero(kv.second); });
    if (i == 0) {
      ensure(next.empty(), "square operator: nonzero remainder");
    } else {
      for (const auto& [e, c] : next) q.add_term(i - 1, e, c);
    }
    carry = std::move(next);
  }
  return q * F(Rat(1, 4));
}

}  // namespace capelli
