#include "capelli/hypergeom.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace capelli;
using capelli::test::R;

TEST_CASE("terminating series") {
  for (Rat b : {R("3"), R("1/2"), R("-7/3")})
    for (Rat c : {R("2"), R("5/4")}) CHECK(pfq_terminating({{-1, b}, {c}, 1}) == 1 - b / c);
  CHECK(pfq_terminating({{0, R("3/5"), 7}, {R("1/3"), 2}, R("9/2")}) == 1);
  CHECK(pfq_terminating({{-2}, {}, 1}) == 0);  // (1 - 1)^2
  CHECK(pfq_terminating({{-3}, {}, -1}) == 8);
  CHECK(termination_index({{-4, -2, R("1/2")}, {1}, 1}) == 2);
  CHECK_THROWS_AS(termination_index({{R("1/2")}, {1}, 1}), Error);
  CHECK_THROWS_AS(pfq_terminating({{-3}, {-1}, 1}), Error);
  // the zero of the denominator lies past the last term
  CHECK(pfq_terminating({{-1}, {-1}, 1}) == 2);
}

TEST_CASE("series are invariant under parameter permutations") {
  HypParams p{{-3, R("2/3"), R("7/2")}, {R("5/3"), R("1/4")}, R("3/7")};
  Rat v = pfq_terminating(p);
  HypParams q{{R("7/2"), -3, R("2/3")}, {R("1/4"), R("5/3")}, R("3/7")};
  CHECK(pfq_terminating(q) == v);
  std::sort(p.num.begin(), p.num.end());
  do
    CHECK(pfq_terminating(p) == v);
  while (std::next_permutation(p.num.begin(), p.num.end()));
}

TEST_CASE("Dougall anchor") {
  DougallResult r = dougall_check(2, 1, 1, 1);
  CHECK(r.lhs == R("15/16"));
  CHECK(r.rhs == R("15/16"));
  CHECK(r.equal);
  CHECK(pfq_terminating(dougall_params(2, 1, 1, 1)) == R("15/16"));
  CHECK(dougall_check(3, 2, 1, 2).equal);
}

TEST_CASE("Dougall degenerate cases") {
  DougallResult r = dougall_check(1, 0, 2, 3);
  CHECK(r.lhs == 1);
  CHECK(r.rhs == 1);
  for (long c = 0; c <= 4; ++c)
    for (long d = 0; d <= 4; ++d) {
      // b = 0 leaves (a+b+c+1)^(d)/(a+c+1)^(d) = 1
      CHECK(dougall_rhs(R("7/3"), 0, c, d) == 1);
      // d = 0 leaves (a+1)^(b)/(a+1)^(b) = 1
      CHECK(dougall_rhs(R("7/3"), c, d, 0) == 1);
    }
  CHECK_THROWS_AS(dougall_check(0, 1, 1, 1), Error);
}

TEST_CASE("Dougall sweep") {
  for (long a = 1; a <= 5; ++a)
    for (long b = 0; b <= 4; ++b)
      for (long c = 0; c <= 4; ++c)
        for (long d = 0; d <= 4; ++d) CHECK(dougall_check(a, b, c, d).equal);
}

TEST_CASE("Dougall matches the gamma-function oracle") {
  for (const auto& e : test::frozen()["dougall"]) {
    Rat a = R(e["a"]);
    long b = e["b"], c = e["c"], d = e["d"];
    CAPTURE(e.dump());
    DougallResult r = dougall_check(a, b, c, d);
    CHECK(r.rhs == R(e["value"]));
    CHECK(r.lhs == r.rhs);
  }
}
