#include "capelli/render.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace capelli;
using capelli::test::R;

namespace {

const QPoly X = QPoly::x();
const QPoly Y = QPoly::y();

QPoly c(const Rat& v) { return QPoly::constant(v); }

}  // namespace

TEST_CASE("falling_expand") {
  UniPoly x = UniPoly::var();
  CHECK(falling_expand(0) == UniPoly(1));
  CHECK(falling_expand(2) == x * x - x);
  CHECK(falling_expand(3) == x * x * x - UniPoly(3) * x * x + UniPoly(2) * x);
}

TEST_CASE("from_falling") {
  CHECK(from_falling<Rat>({{1, 1, 1}}) == X * Y);
  CHECK(from_falling<Rat>({{1, 2, 0}}) == X * X - X);
  CHECK(from_falling<Rat>({{1, 2, 1}, {1, 1, 2}}) == X * X * Y + X * Y * Y - c(2) * X * Y);
}

TEST_CASE("to_falling_coeff") {
  CHECK(to_falling_coeff(X * Y, 1, 1) == 1);
  CHECK(to_falling_coeff(X * X, 1, 0) == 1);
  CHECK(to_falling_coeff(X * X, 2, 0) == 1);
  KPoly p = KPoly::x() + KPoly::y() + KPoly::constant(RatFunc::var() + RatFunc(1));
  CHECK(to_falling_coeff(p, 0, 0) == RatFunc::var() + RatFunc(1));
}

TEST_CASE("eval2") {
  CHECK((X * Y).eval(2, 3) == 6);
  QPoly f = X + Y + c(3);  // x + y + k + 1 at k = 2
  CHECK(f.eval(-3, 0) == 0);
  CHECK(from_falling<Rat>({{1, 2, 0}}).eval(3, 99) == 6);
  KPoly g = KPoly::x() + KPoly::y() + KPoly::constant(RatFunc::var() + RatFunc(1));
  RatFunc k = RatFunc::var();
  CHECK(g.eval(-k - RatFunc(1), RatFunc(0)).is_zero());
}

TEST_CASE("is_symmetric") {
  CHECK((X * Y).is_symmetric());
  CHECK_FALSE((X * X * Y).is_symmetric());
  CHECK((KPoly::x() + KPoly::y() + KPoly::constant(RatFunc::var() + RatFunc(1))).is_symmetric());
}

TEST_CASE("square_op") {
  CHECK(square_op(X * Y) == c(R("-1/4")));
  CHECK(square_op((X + Y) * (X + Y)).is_zero());
  CHECK(square_op(X * X + Y * Y) == c(R("1/2")));
  CHECK_THROWS_AS(square_op(X * X * Y), Error);
}

TEST_CASE("partials") {
  auto [px, py] = (X * Y).partials();
  CHECK(px == Y);
  CHECK(py == X);
  auto [qx, qy] = (X * X).partials();
  CHECK(qx == c(2) * X);
  CHECK(qy.is_zero());
  auto [fx, fy] = from_falling<Rat>({{1, 2, 0}}).partials();
  CHECK(fx == c(2) * X - c(1));
  CHECK(fy.is_zero());
}

TEST_CASE("map_coeffs") {
  RatFunc k = RatFunc::var();
  KPoly f = KPoly::monomial(1, 1, (2 * k + RatFunc(2)) / k);
  CHECK(f.map<Rat>([](const RatFunc& v) { return v.residue(0); }) == c(2) * X * Y);
  KPoly g = KPoly::monomial(1, 0, k + RatFunc(1));
  CHECK(specialize(g, 1) == c(2) * X);
  KPoly h = KPoly::constant(k + RatFunc(1)).map<RatFunc>([](const RatFunc& v) { return v.compose_linear(R("-1/2"), 0); });
  CHECK(h == KPoly::constant(RatFunc(R("-1/2")) * RatFunc::var() + RatFunc(1)));
  // coefficients that map to zero are dropped
  KPoly z = KPoly::monomial(2, 0, k);
  CHECK(specialize(z, 0).is_zero());
}

TEST_CASE("falling round trip on random polynomials") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    QPoly f = test::random_qpoly(rng, 10, 8);
    std::vector<FallingTerm<Rat>> terms;
    for (const auto& [mn, v] : to_falling(f)) terms.push_back({v, mn.first, mn.second});
    CHECK(from_falling(terms) == f);
  }
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      Rat v = make_rat(m - 2 * n, n + 1);
      if (v == 0) continue;
      CHECK(to_falling_coeff(from_falling<Rat>({{v, m, n}}), m, n) == v);
    }
}

TEST_CASE("4(x-y) square_op(f) equals f_x - f_y for symmetric f") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    QPoly g = test::random_qpoly(rng, 8, 6);
    QPoly f = g + g.swapped();
    auto [fx, fy] = f.partials();
    CHECK(c(4) * (X - Y) * square_op(f) == fx - fy);
  }
}

TEST_CASE("evaluation commutes with ring operations") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    QPoly f = test::random_qpoly(rng, 5, 5), g = test::random_qpoly(rng, 5, 5);
    Rat a = test::random_rat(rng), b = test::random_rat(rng);
    CHECK((f * g).eval(a, b) == f.eval(a, b) * g.eval(a, b));
    CHECK((f + g).eval(a, b) == f.eval(a, b) + g.eval(a, b));
  }
}

TEST_CASE("rendering is graded lex with explicit signs") {
  QPoly f = c(R("1/2")) * X * X + X * Y + c(R("1/2")) * Y * Y + c(R("1/2")) * X + c(R("1/2")) * Y;
  CHECK(render(f) == "(1/2)x^2 + xy + (1/2)y^2 + (1/2)x + (1/2)y");
  CHECK(render(f, ascii_options()) == "(1/2)*x^2 + x*y + (1/2)*y^2 + (1/2)*x + (1/2)*y");
  CHECK(render(c(-4) * X * Y) == "−4xy");
  CHECK(render(c(-4) * X * Y, ascii_options()) == "-4*x*y");
  CHECK(render(X + Y - c(R("5/2"))) == "x + y − 5/2");
  CHECK(render(QPoly()) == "0");
  CHECK(render(X * X - X, pretty_options(Basis::Falling)) == "x_(2)");
  CHECK(render(X * X - X, ascii_options(Basis::Falling)) == "ff(x,2)");
  KPoly p = KPoly::x() + KPoly::y() + KPoly::constant(RatFunc::var() + RatFunc(1));
  CHECK(render(p) == "x + y + (κ+1)");
  CHECK(render(p, ascii_options()) == "x + y + (kappa+1)");
}
