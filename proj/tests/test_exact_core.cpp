#include "doctest.h"
#include "support.hpp"

using namespace capelli;
using capelli::test::R;

namespace {

const RatFunc k = RatFunc::var();

RatFunc two_k_plus_two_over_k() { return (2 * k + RatFunc(2)) / k; }

}  // namespace

TEST_CASE("rationals parse, print and stay canonical") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat("-10/5")) == "-2");
  CHECK(to_string(parse_rat("+7")) == "7");
  CHECK_THROWS_AS(parse_rat("3/-4"), Error);
  CHECK(make_rat(4, -6) == R("-2/3"));
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
  CHECK_THROWS_AS(parse_rat("x"), Error);
  CHECK(is_integer(R("8/4")));
  CHECK_FALSE(is_integer(R("1/3")));
}

TEST_CASE("factorials and Pochhammer symbols") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(6, 2) == 15);
  CHECK(rising(2, 3) == 24);
  CHECK(falling(3, 2) == 6);
  CHECK(rising(-1, 2) == 0);
  CHECK(rising(R("1/2"), 0) == 1);
  CHECK(falling(R("5/2"), 2) == R("15/4"));
}

TEST_CASE("univariate polynomials") {
  UniPoly x = UniPoly::var();
  UniPoly p = x * x - UniPoly(1);
  CHECK(p.degree() == 2);
  CHECK(p.eval(3) == 8);
  CHECK(UniPoly::falling(3) == x * (x - UniPoly(1)) * (x - UniPoly(2)));
  CHECK(UniPoly::falling(0) == UniPoly(1));
  CHECK(UniPoly(std::vector<Rat>{1, 0, 0}).degree() == 0);
  CHECK(UniPoly().is_zero());
  CHECK(UniPoly().degree() == -1);
  // power rule
  UniPoly q = UniPoly::monomial(5, 3) + UniPoly::monomial(2, R("1/2"));
  CHECK(q.derivative() == UniPoly::monomial(4, 15) + UniPoly::monomial(1, 1));
}

TEST_CASE("rf_normalize") {
  UniPoly x = UniPoly::var();
  RatFunc a(x * x - UniPoly(1), x - UniPoly(1));
  CHECK(a == RatFunc(x + UniPoly(1)));
  CHECK(a.den() == UniPoly(1));
  RatFunc zero(UniPoly(), x * x * x + UniPoly(5));
  CHECK(zero.is_zero());
  CHECK(zero.den() == UniPoly(1));
  RatFunc b(UniPoly(std::vector<Rat>{2, 2}), x);
  CHECK(b.num() == UniPoly(std::vector<Rat>{2, 2}));
  CHECK(b.den() == x);
  // denominators become monic
  RatFunc c(UniPoly(1), UniPoly(std::vector<Rat>{0, 2}));
  CHECK(c.den() == x);
  CHECK(c.num() == UniPoly(R("1/2")));
  CHECK_THROWS_AS(RatFunc(x, UniPoly()), Error);
}

TEST_CASE("rf_eval") {
  CHECK((k + RatFunc(1)).eval(1) == 2);
  CHECK(two_k_plus_two_over_k().eval(1) == 4);
  try {
    two_k_plus_two_over_k().eval(0);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(e.order() == 1);
    CHECK(e.code() == ErrorCode::Pole);
  }
  RatFunc dbl = RatFunc(1) / ((k - RatFunc(1)) * (k - RatFunc(1)));
  try {
    dbl.eval(1);
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    CHECK(e.order() == 2);
  }
}

TEST_CASE("rf_valuation") {
  CHECK(two_k_plus_two_over_k().valuation(0) == -1);
  CHECK(((k - RatFunc(1)) * (k - RatFunc(1))).valuation(1) == 2);
  CHECK((k + RatFunc(1)).valuation(0) == 0);
  CHECK_THROWS_AS(RatFunc(0).valuation(0), Error);
}

TEST_CASE("rf_residue and rf_regular_value") {
  CHECK(two_k_plus_two_over_k().residue(0) == 2);
  CHECK((k + RatFunc(1)).residue(0) == 0);
  CHECK_THROWS_AS((RatFunc(1) / ((k - RatFunc(1)) * (k - RatFunc(1)))).residue(1), Error);
  CHECK(two_k_plus_two_over_k().regular_value(0) == 2);
  CHECK((k + RatFunc(1)).regular_value(0) == 1);
  CHECK((2 * k / (k - RatFunc(1))).regular_value(1) == 2);
  CHECK_THROWS_AS((RatFunc(1) / ((k - RatFunc(1)) * (k - RatFunc(1)))).regular_value(1), Error);
}

TEST_CASE("rf_derivative") {
  CHECK((-k).derivative() == RatFunc(-1));
  CHECK((RatFunc(1) / k).derivative() == RatFunc(-1) / (k * k));
  CHECK(two_k_plus_two_over_k().derivative() == RatFunc(-2) / (k * k));
}

TEST_CASE("compose_linear substitutes kappa = -s/2") {
  RatFunc f = k + RatFunc(1);
  RatFunc s = RatFunc::var();
  CHECK(f.compose_linear(R("-1/2"), 0) == RatFunc(R("-1/2")) * s + RatFunc(1));
}

TEST_CASE("evaluation is a field homomorphism off the poles") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly df = test::random_uni(rng, 2), dg = test::random_uni(rng, 2);
    if (df.is_zero() || dg.is_zero()) continue;
    RatFunc f(test::random_uni(rng, 3), df), g(test::random_uni(rng, 3), dg);
    if (f.is_zero() || g.is_zero()) continue;
    Rat a = test::random_rat(rng, 20);
    if (f.valuation(a) < 0 || g.valuation(a) < 0 || g.valuation(a) > 0) continue;
    CHECK((f + g).eval(a) == f.eval(a) + g.eval(a));
    CHECK((f * g).eval(a) == f.eval(a) * g.eval(a));
    CHECK((f / g).eval(a) == f.eval(a) / g.eval(a));
    CHECK((f - g).eval(a) == f.eval(a) - g.eval(a));
  }
}

TEST_CASE("valuation is additive and residues vanish at regular points") {
  std::mt19937 rng(7);
  UniPoly x = UniPoly::var();
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = test::random_rat(rng, 4);
    UniPoly lin = x - UniPoly(a);
    std::uniform_int_distribution<int> ord(-2, 2);
    auto with_order = [&](int o) {
      RatFunc base(test::random_uni(rng, 2) + UniPoly(1), UniPoly(1));
      if (base.is_zero() || base.valuation(a) != 0) base = RatFunc(1);
      RatFunc p = RatFunc(1);
      for (int i = 0; i < std::abs(o); ++i) p = p * RatFunc(lin);
      return o >= 0 ? base * p : base / p;
    };
    int of = ord(rng), og = ord(rng);
    RatFunc f = with_order(of), g = with_order(og);
    CHECK(f.valuation(a) == of);
    CHECK((f * g).valuation(a) == f.valuation(a) + g.valuation(a));
    if (of >= 0) {
      CHECK(f.residue(a) == 0);
      CHECK(f.regular_value(a) == f.eval(a));
    }
  }
}

TEST_CASE("rational function strings") {
  CHECK(two_k_plus_two_over_k().str("κ", true) == "(2κ+2)/κ");
  CHECK(RatFunc(R("-1/2")).str() == "-1/2");
}
