#include "capelli/eigenpoly.hpp"

#include "capelli/linalg.hpp"

namespace capelli {

const char* route_name(Route r) {
  switch (r) {
    case Route::A: return "a";
    case Route::B: return "b";
    case Route::C: return "c";
    case Route::D: return "d";
    case Route::Oracle: return "oracle";
  }
  return "?";
}

Route parse_route(const std::string& s) {
  if (s == "a") return Route::A;
  if (s == "b") return Route::B;
  if (s == "c") return Route::C;
  if (s == "d") return Route::D;
  if (s == "oracle") return Route::Oracle;
  fail(ErrorCode::InvalidArgument, "unknown route '" + s + "'");
}

namespace {

void expect_class(const Pair2& l, int k, Cls want, const char* route) {
  Cls c = classify(l, k);
  if (c != want)
    fail(ErrorCode::Domain, "λ=" + l.str() + " is " + std::to_string(k) + "-" + cls_name(c) +
                                "; route " + route + " requires " + cls_name(want));
}

Pair2 partner(const Pair2& l, int k) {
  auto d = dagger(l, k);
  ensure(d.has_value(), "missing dagger partner for " + l.str());
  return *d;
}

}  // namespace

EigenPoly eig_regular(const Pair2& l, int k) {
  expect_class(l, k, Cls::Regular, "a");
  Rat h = h_poly(l).eval(k);
  ensure(sgn(h) != 0, "H vanishes at a regular partition");
  return {l, k, reg_part(l, k) * Rat(1 / h), Route::A};
}

EigenPoly eig_singular(const Pair2& l, int k) {
  expect_class(l, k, Cls::Singular, "b");
  Pair2 ld = partner(l, k);
  Rat hd = h_poly(ld).derivative().eval(k);
  Rat scale = Rat(4 * (l.diff() - k - 1)) / hd;
  return {l, k, reg_part(ld, k) * scale, Route::B};
}

EigenPoly eig_qreg_limit(const Pair2& l, int k) {
  expect_class(l, k, Cls::Quasiregular, "c");
  Pair2 ld = partner(l, k);
  KPoly sum = ks_poly(l) * RatFunc(UniPoly(1), h_poly(l)) + ks_poly(ld) * RatFunc(UniPoly(1), h_poly(ld));
  try {
    return {l, k, specialize(sum, k), Route::C};
  } catch (const PoleError& e) {
    fail(ErrorCode::Internal, std::string("poles did not cancel: ") + e.what());
  }
}

Rat m_coeff(const Pair2& l, const Pair2& m, int k) {
  int e = ell(l, k);
  require(m.size() <= k - e, "μ=" + m.str() + " is outside I(k-ℓ)");
  if (m.size() == 0) {
    Rat sum = 0;
    for (int j = l.l1 - k; j <= l.l1 + e - k; ++j) sum += make_rat(e + 1, j);
    Rat f1 = Rat(factorial(e + 1));
    Rat sign = (e + 1) % 2 == 0 ? 1 : -1;
    return sign / (Rat(factorial(k - e)) * f1 * f1) * (1 - sum);
  }
  Rat sign = (e + m.l1 + m.l2) % 2 == 0 ? 1 : -1;
  Rat num = sign * Rat(binomial(m.l1, m.l2) * factorial(e + m.l1));
  Rat den = Rat(factorial(k - e - m.size()) * factorial(e) * factorial(e + m.l2 + 1) *
                factorial(e + m.size())) *
            m.l1;
  return num / den;
}

EigenPoly eig_qreg_explicit(const Pair2& l, int k) {
  expect_class(l, k, Cls::Quasiregular, "d");
  int e = ell(l, k);
  Pair2 ld = partner(l, k);
  QPoly inner = reg_part(ld, k) * Rat(Rat(1) / Rat(factorial(2 * k + 2 - l.diff())));
  for (const Pair2& m : enumerate(k - e)) inner += reg_part(nu(l, m, k), k) * m_coeff(l, m, k);
  Rat pre = Rat(factorial(e + 1)) / Rat(factorial(l.l1 - k - 1) * factorial(l.l1 + e - k));
  return {l, k, inner * pre, Route::D};
}

std::vector<Pair2> symmetric_basis_index(int d) { return enumerate(d, Filter::All); }

QPoly symmetric_falling(const Pair2& ab) {
  QPoly f = QPoly::falling(ab.l1, ab.l2);
  if (ab.l1 != ab.l2) f += QPoly::falling(ab.l2, ab.l1);
  return f;
}

QPoly interpolate_symmetric(int d, const Rat& shift, const std::vector<InterpCondition>& conds) {
  auto index = symmetric_basis_index(d);
  require(conds.size() == index.size(), "interpolation needs one condition per basis element");
  std::vector<QPoly> basis, squares;
  for (const auto& ab : index) {
    basis.push_back(symmetric_falling(ab));
    squares.push_back(square_op(basis.back()));
  }
  RatMatrix a(conds.size(), std::vector<Rat>(index.size()));
  std::vector<Rat> b(conds.size());
  for (size_t r = 0; r < conds.size(); ++r) {
    Rat x = conds[r].mu.l1 - shift - 1, y = conds[r].mu.l2;
    for (size_t c = 0; c < index.size(); ++c)
      a[r][c] = conds[r].square ? squares[c].eval(x, y) : basis[c].eval(x, y);
    b[r] = conds[r].value;
  }
  auto sol = solve_linear(std::move(a), std::move(b));
  ensure(sol.has_value(), "interpolation system is singular");
  QPoly f;
  for (size_t c = 0; c < index.size(); ++c) f += basis[c] * (*sol)[c];
  return f;
}

EigenPoly eig_oracle(const Pair2& l, int k) {
  int d = l.size();
  std::vector<InterpCondition> conds;
  for (const Pair2& m : enumerate(d))
    conds.push_back({m, classify(m, k) == Cls::Singular, m == l ? Rat(1) : Rat(0)});
  return {l, k, interpolate_symmetric(d, k, conds), Route::Oracle};
}

EigenPoly eig(const Pair2& l, int k, Route r) {
  switch (r) {
    case Route::A: return eig_regular(l, k);
    case Route::B: return eig_singular(l, k);
    case Route::C: return eig_qreg_limit(l, k);
    case Route::D: return eig_qreg_explicit(l, k);
    case Route::Oracle: return eig_oracle(l, k);
  }
  fail(ErrorCode::InvalidArgument, "unknown route");
}

std::vector<Route> applicable_routes(const Pair2& l, int k) {
  switch (classify(l, k)) {
    case Cls::Regular: return {Route::A};
    case Cls::Singular: return {Route::B};
    case Cls::Quasiregular: return {Route::C, Route::D};
  }
  return {};
}

EigenPoly eig_default(const Pair2& l, int k) { return eig(l, k, applicable_routes(l, k).front()); }

std::pair<Rat, Rat> restriction_pair(const Pair2& l, const Pair2& m, int k) {
  if (classify(m, k) == Cls::Singular)
    fail(ErrorCode::Domain, "μ=" + m.str() + " is " + std::to_string(k) + "-singular and indexes no block");
  QPoly f = eig_default(l, k).body;
  Rat x = m.l1 - k - 1, y = m.l2;
  return {f.eval(x, y), square_op(f).eval(x, y)};
}

bool r_basis_unitriangular(int k, int d) {
  for (const Pair2& m : enumerate(d)) {
    auto coords = to_falling(reg_part(m, k));
    for (const auto& [ab, c] : coords) {
      Pair2 idx{std::max(ab.first, ab.second), std::min(ab.first, ab.second)};
      if (m < idx) return false;
      if (idx == m && c != 1) return false;
    }
    if (!coords.count({m.l1, m.l2})) return false;
  }
  return true;
}

}  // namespace capelli
