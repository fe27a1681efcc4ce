#include "capelli/render.hpp"

#include <algorithm>
#include <vector>

#include "format.hpp"

namespace capelli {

namespace {

std::string mono(int i, int j, const RenderOptions& o) {
  if (o.basis == Basis::Monomial) {
    std::string a = detail::power("x", i), b = detail::power("y", j);
    if (a.empty() || b.empty()) return a + b;
    return o.unicode ? a + b : a + "*" + b;
  }
  auto ff = [&](const char* v, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return v;
    return o.unicode ? std::string(v) + "_(" + std::to_string(e) + ")"
                     : "ff(" + std::string(v) + "," + std::to_string(e) + ")";
  };
  std::string a = ff("x", i), b = ff("y", j);
  if (a.empty() || b.empty()) return a + b;
  return o.unicode ? a + b : a + "*" + b;
}

template <class F>
std::vector<std::pair<std::pair<int, int>, F>> ordered(const std::map<std::pair<int, int>, F>& m) {
  std::vector<std::pair<std::pair<int, int>, F>> v(m.begin(), m.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  return v;
}

void append(std::string& out, const Rat& c, const std::string& m, const RenderOptions& o) {
  detail::append_term(out, c, m, o.unicode, true);
}

void append(std::string& out, const RatFunc& c, const std::string& m, const RenderOptions& o) {
  if (c.is_constant()) {
    detail::append_term(out, c.constant_value(), m, o.unicode, true);
  } else {
    detail::append_raw_term(out, c.str(o.param, o.unicode), m, o.unicode, true);
  }
}

template <class F>
std::string render_impl(const BiPoly<F>& f, const RenderOptions& o) {
  auto terms = o.basis == Basis::Monomial ? f.terms() : to_falling(f);
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : ordered(terms)) append(out, c, mono(k.first, k.second, o), o);
  return out;
}

}  // namespace

RenderOptions pretty_options(Basis basis, const std::string& param) { return {basis, true, param}; }
RenderOptions ascii_options(Basis basis, const std::string& param) { return {basis, false, param}; }

std::string render(const BiPoly<Rat>& f, const RenderOptions& opts) { return render_impl(f, opts); }
std::string render(const BiPoly<RatFunc>& f, const RenderOptions& opts) { return render_impl(f, opts); }
std::string render(const UniPoly& p, const std::string& var, bool unicode) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i)
    if (sgn(p.coeff(i)) != 0) detail::append_term(out, p.coeff(i), detail::power(var, i), unicode, true);
  return out;
}

}  // namespace capelli
