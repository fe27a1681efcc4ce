#include "capelli/deligne.hpp"
#include "capelli/eigenpoly.hpp"
#include "capelli/verify.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace capelli;
using capelli::test::R;

namespace {

Pair2 P(int a, int b) { return Pair2::make(a, b); }

const QPoly X = QPoly::x();
const QPoly Y = QPoly::y();

QPoly c(const Rat& v) { return QPoly::constant(v); }

// c_nu as a function of s
RatFunc cs(const Pair2& l) { return RatFunc(c_cat_poly(l)); }

}  // namespace

TEST_CASE("min_poly examples") {
  UniPoly x = UniPoly::var();
  CHECK(min_poly(2, 5) == x * (x - UniPoly(10)));
  CHECK(min_poly(2, 0) == x * x);
  for (Rat t : {R("7"), R("-4"), R("1/2")}) CHECK(min_poly(1, t) == x - UniPoly(t - 1));
  CHECK(min_poly(0, 3) == x);
  CHECK(min_poly_product(4, -2) == x * x * (x + UniPoly(4)));
  CHECK(min_poly_product(4, -4) == x * (x + UniPoly(8)) * (x + UniPoly(8)));
  CHECK(min_poly(4, -4) == min_poly_product(4, -4));
}

TEST_CASE("min_poly matches the root-product oracle and is minimal") {
  for (const auto& e : test::frozen()["min_poly"]) {
    int d = e["d"];
    Rat t = R(e["t"]);
    CAPTURE(d);
    CAPTURE(to_string(t));
    CHECK(min_poly(d, t) == test::uni_of(e["coeffs"]));
  }
  for (int d = 0; d <= 8; ++d)
    for (Rat t : default_t_list()) CHECK(min_poly_is_minimal(d, t));
}

TEST_CASE("special dimensions") {
  CHECK(is_special_dimension(0));
  CHECK(is_special_dimension(-4));
  CHECK_FALSE(is_special_dimension(-3));
  CHECK_FALSE(is_special_dimension(2));
  CHECK_FALSE(is_special_dimension(R("-2/3")));
  CHECK(kbar(-6) == 3);
}

TEST_CASE("blocks") {
  CHECK(blocks(2, 7) == std::vector<Block>{{P(1, 1), 7, 1}, {P(2, 0), 7, 1}});
  CHECK(blocks(2, 0) == std::vector<Block>{{P(1, 1), 0, 2}});
  for (Rat t : {R("0"), R("5"), R("-1/2")}) CHECK(blocks(0, t) == std::vector<Block>{{P(0, 0), t, 1}});
  CHECK_FALSE(block_of(P(2, 0), 0).has_value());
  CHECK(block_of(P(2, 0), 1)->mult == 1);
  for (int k = 0; k <= 3; ++k)
    for (int d = 0; d <= 8; ++d)
      for (const Block& b : blocks(d, -2 * k)) {
        CHECK(b.lambda.size() == d);
        CHECK(classify(b.lambda, k) != Cls::Singular);
        CHECK((b.mult == 2) == (classify(b.lambda, k) == Cls::Quasiregular));
      }
}

TEST_CASE("dual numbers and block evaluation") {
  DualScalar a{2, 3}, b{5, 7};
  CHECK(a * b == DualScalar{10, 29});
  CHECK(a + b == DualScalar{7, 10});
  Block q{P(1, 1), 0, 2};
  CHECK(block_eval(OpPoly::C(), q, 0) == DualScalar{0, 1});
  CHECK(block_eval(OpPoly::E() * OpPoly::E(), {P(2, 0), 7, 1}, 7) == DualScalar{4, 0});
  CHECK(block_eval(OpPoly::C() * OpPoly::C(), q, 0) == DualScalar{0, 0});
  CHECK(block_casimir({P(3, 0), 1, 1}) == DualScalar{c_cat(P(3, 0), 1), 0});
  OpPoly pole = OpPoly::constant(RatFunc(1) / RatFunc::var());
  CHECK_THROWS_AS(block_eval(pole, q, 0), Error);
}

TEST_CASE("l_op") {
  CHECK(l_op(P(0, 0)) == OpPoly::constant(RatFunc(1)));
  CHECK(l_op(P(1, 0)) == OpPoly::E());
  OpPoly E = OpPoly::E(), C = OpPoly::C();
  OpPoly one = OpPoly::constant(RatFunc(1));
  OpPoly want = (RatFunc(1) / (RatFunc(2) * (cs(P(2, 0)) - cs(P(1, 1))))) *
                (E * (E - one) * (C - OpPoly::constant(cs(P(1, 1)))));
  CHECK(l_op(P(2, 0)) == want);
}

TEST_CASE("d_op") {
  CHECK(d_op(P(1, 0), 7) == OpPoly::E());
  CHECK(d_op(P(2, 0), 0) == (cs(P(1, 1)) - cs(P(2, 0))) * l_op(P(1, 1)));
  CHECK(d_op(P(1, 1), 0) == l_op(P(1, 1)) + l_op(P(2, 0)));
  for (Rat t : default_t_list())
    for (const Pair2& l : enumerate(6)) {
      OpPoly D = d_op(l, t);
      for (const auto& [key, v] : D.terms())
        if (!v.is_zero()) CHECK(v.valuation(t) >= 0);
    }
}

TEST_CASE("d_op on blocks at s = t") {
  for (Rat t : default_t_list())
    for (const Pair2& l : enumerate(6)) {
      OpPoly D = d_op(l, t);
      std::optional<Pair2> partner;
      if (is_special_dimension(t) && classify(l, kbar(t)) == Cls::Singular) partner = dagger(l, kbar(t));
      for (int d = 0; d <= l.size(); ++d)
        for (const Block& b : blocks(d, t)) {
          CAPTURE(l.str());
          CAPTURE(b.lambda.str());
          CAPTURE(to_string(t));
          DualScalar v = block_eval(D, b, t);
          if (b.lambda == l)
            CHECK(v == DualScalar{1, 0});
          else if (partner && b.lambda == *partner)
            CHECK(v == DualScalar{0, 1});
          else
            CHECK(v == DualScalar{0, 0});
        }
    }
}

TEST_CASE("categorical eigenvalue polynomials") {
  CHECK(cat_eig_formula(P(1, 0), 7) == X + Y - c(R("5/2")));
  CHECK(cat_eig_formula(P(1, 0), R("1/3")) == X + Y + c(R("5/6")));
  CHECK(cat_eig_formula(P(2, 0), 0) == c(-4) * X * Y);
  QPoly anchor = c(R("1/2")) * ((X + Y) * (X + Y) + X + Y);
  CHECK(cat_eig_formula(P(1, 1), 0) == anchor);
  CHECK(cat_eig_from_blocks(P(1, 1), 0) == anchor);
  CHECK(cat_eig_from_blocks(P(1, 0), 7) == X + Y - c(R("5/2")));
  for (Rat t : {R("2"), R("-3/4")}) CHECK(cat_eig_from_blocks(P(0, 0), t) == c(1));
}

TEST_CASE("categorical routes agree and match the oracle at generic t") {
  for (const auto& e : test::frozen()["deligne_generic"]) {
    Pair2 l = test::pair_of(e["lambda"]);
    Rat t = R(e["t"]);
    CAPTURE(l.str());
    CAPTURE(to_string(t));
    QPoly want = test::qpoly_of(e["terms"]);
    CHECK(cat_eig_formula(l, t) == want);
    CHECK(cat_eig_from_blocks(l, t) == want);
  }
  for (Rat t : {R("-6"), R("-5"), R("-2"), R("1"), R("3"), R("1/2")})
    for (const Pair2& l : enumerate(5)) CHECK(cat_eig_from_blocks(l, t) == cat_eig_formula(l, t));
}

TEST_CASE("special dimensions recover the super eigenvalue polynomials") {
  for (int k = 0; k <= 3; ++k)
    for (const Pair2& l : enumerate(6)) {
      CAPTURE(l.str());
      CAPTURE(k);
      CHECK(cat_eig_formula(l, -2 * k) == eig_default(l, k).body);
    }
}

TEST_CASE("scalar limit behind the singular case") {
  for (const auto& e : test::frozen()["bprime_limit"]) {
    Pair2 l = test::pair_of(e["lambda"]);
    int k = e["k"];
    ScalarLimit s = bprime_limit(l, k);
    CHECK(s.limit == R(e["value"]));
    CHECK(s.expected == s.limit);
  }
  for (int k = 0; k <= 3; ++k)
    for (const Pair2& l : enumerate(8))
      if (classify(l, k) == Cls::Singular) {
        ScalarLimit s = bprime_limit(l, k);
        CHECK(s.limit == s.expected);
      }
  CHECK_THROWS_AS(bprime_limit(P(1, 0), 0), Error);
}
