#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "capelli/unipoly.hpp"

namespace capelli {

struct Pair2 {
  int l1 = 0;
  int l2 = 0;

  // Validating constructor: l1 >= l2 >= 0.
  static Pair2 make(int a, int b);
  static bool valid(int a, int b) { return a >= b && b >= 0; }
  static Pair2 parse(const std::string& text);  // "a,b"

  int size() const { return l1 + l2; }
  int diff() const { return l1 - l2; }
  std::string str() const;

  friend bool operator==(const Pair2&, const Pair2&) = default;
  // graded order: by size, then ascending l1
  friend std::strong_ordering operator<=>(const Pair2& a, const Pair2& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.l1 <=> b.l1;
  }
};

enum class Cls { Regular, Quasiregular, Singular };

const char* cls_name(Cls c);

Cls classify(const Pair2& l, int k);
std::optional<Pair2> dagger(const Pair2& l, int k);

// H(kappa) = (l1-l2)! l2! (l1-1-kappa)^(l2 falling)
UniPoly h_poly(const Pair2& l);
Rat c_super(const Pair2& l, int k);
Rat c_cat(const Pair2& l, const Rat& t);
// c_cat as a polynomial in the dimension parameter
UniPoly c_cat_poly(const Pair2& l);
int ell(const Pair2& l, int k);
Pair2 nu(const Pair2& l, const Pair2& m, int k);

enum class Filter { All, SizeExactly, NonSingular };

// Graded enumeration. All: |l| <= d. SizeExactly: |l| == d. NonSingular: |l| == d and
// not k-singular.
std::vector<Pair2> enumerate(int d, Filter f = Filter::All, int k = 0);

}  // namespace capelli
