#include "capelli/partitions.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace capelli;
using capelli::test::R;

namespace {

Pair2 P(int a, int b) { return Pair2::make(a, b); }

}  // namespace

TEST_CASE("partition syntax") {
  CHECK(Pair2::parse("3,1") == P(3, 1));
  CHECK(Pair2::parse("0,0") == P(0, 0));
  for (const char* bad : {" 2,0", "1,2", "-1,0", "3", "a,b", "1,0,0", "", ",", "2,-1", "1.5,0"})
    CHECK_THROWS_AS(Pair2::parse(bad), Error);
  CHECK_THROWS_AS(Pair2::make(0, 1), Error);
  CHECK(P(3, 1).str() == "(3,1)");
}

TEST_CASE("classify") {
  CHECK(classify(P(1, 0), 1) == Cls::Regular);
  CHECK(classify(P(2, 1), 1) == Cls::Quasiregular);
  CHECK(classify(P(3, 0), 1) == Cls::Singular);
  CHECK(classify(P(2, 0), 1) == Cls::Regular);
  CHECK(classify(P(5, 0), 1) == Cls::Regular);
  CHECK(std::string(cls_name(Cls::Quasiregular)) == "quasiregular");
}

TEST_CASE("classification is a trichotomy") {
  for (int k = 0; k <= 10; ++k)
    for (int a = 0; a <= 50; ++a)
      for (int b = 0; b <= a; ++b) {
        int d = a - b;
        bool reg = a <= k || d == k + 1 || d >= 2 * k + 3;
        bool qreg = a >= k + 1 && d <= k;
        bool sing = k + 2 <= d && d <= 2 * k + 2;
        CHECK(int(reg) + int(qreg) + int(sing) == 1);
        Cls want = reg ? Cls::Regular : qreg ? Cls::Quasiregular : Cls::Singular;
        CHECK(classify(P(a, b), k) == want);
      }
}

TEST_CASE("dagger") {
  CHECK(dagger(P(3, 0), 1) == P(2, 1));
  CHECK(dagger(P(2, 0), 1) == P(2, 0));
  CHECK_FALSE(dagger(P(1, 0), 1).has_value());
}

TEST_CASE("dagger swaps quasiregular and singular partitions of equal size") {
  for (int k = 0; k <= 6; ++k)
    for (const Pair2& l : enumerate(20)) {
      Cls c = classify(l, k);
      if (c == Cls::Regular) continue;
      auto d = dagger(l, k);
      REQUIRE(d.has_value());
      CHECK(d->size() == l.size());
      CHECK(classify(*d, k) == (c == Cls::Singular ? Cls::Quasiregular : Cls::Singular));
      CHECK(dagger(*d, k) == l);
      if (c == Cls::Quasiregular) CHECK(c_super(l, k) == c_super(*d, k));
    }
}

TEST_CASE("h_poly") {
  UniPoly kappa = UniPoly::var();
  CHECK(h_poly(P(1, 0)) == UniPoly(1));
  CHECK(h_poly(P(1, 1)) == -kappa);
  CHECK(h_poly(P(2, 0)) == UniPoly(2));
  for (const Pair2& l : enumerate(10)) CHECK(h_poly(l).degree() == l.l2);
}

TEST_CASE("Casimir eigenvalues") {
  CHECK(c_super(P(0, 0), 4) == 0);
  CHECK(c_super(P(3, 0), 1) == -3);
  CHECK(c_super(P(2, 1), 1) == -3);
  CHECK(c_cat(P(0, 0), R("5/7")) == 0);
  CHECK(c_cat(P(2, 0), 0) == 0);
  CHECK(c_cat(P(3, 0), -2) == -3);
  for (int k = 0; k <= 6; ++k)
    for (const Pair2& l : enumerate(14)) {
      CHECK(c_cat(l, -2 * k) == c_super(l, k));
      CHECK(c_cat_poly(l).eval(-2 * k) == c_super(l, k));
    }
}

TEST_CASE("ell") {
  CHECK(ell(P(1, 1), 0) == 0);
  CHECK(ell(P(2, 1), 1) == 0);
  CHECK(ell(P(2, 2), 1) == 1);
  CHECK_THROWS_AS(ell(P(1, 0), 1), Error);
}

TEST_CASE("nu") {
  CHECK(nu(P(1, 1), P(0, 0), 0) == P(1, 1));
  CHECK_THROWS_AS(nu(P(2, 2), P(1, 0), 1), Error);
  CHECK(nu(P(3, 2), P(1, 0), 1) == P(2, 2));
  // never singular, but not always quasiregular
  CHECK(nu(P(2, 1), P(1, 0), 1) == P(1, 1));
  CHECK(classify(P(1, 1), 1) == Cls::Regular);
  CHECK_THROWS_AS(nu(P(3, 0), P(0, 0), 1), Error);
}

TEST_CASE("nu never produces a singular partition") {
  for (int k = 0; k <= 6; ++k)
    for (const Pair2& l : enumerate(16)) {
      if (classify(l, k) != Cls::Quasiregular) continue;
      for (const Pair2& m : enumerate(k - ell(l, k))) {
        Pair2 v;
        try {
          v = nu(l, m, k);
        } catch (const Error&) {
          continue;
        }
        CHECK(classify(v, k) != Cls::Singular);
      }
    }
}

TEST_CASE("enumerate") {
  CHECK(enumerate(2) == std::vector<Pair2>{P(0, 0), P(1, 0), P(1, 1), P(2, 0)});
  CHECK(enumerate(3, Filter::NonSingular, 1) == std::vector<Pair2>{P(2, 1)});
  CHECK(enumerate(0) == std::vector<Pair2>{P(0, 0)});
  CHECK(enumerate(3, Filter::SizeExactly) == std::vector<Pair2>{P(2, 1), P(3, 0)});
  for (int d = 0; d <= 30; ++d) {
    auto all = enumerate(d);
    CHECK(all.size() == size_t((d + 2) * (d + 2) / 4));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
}
