#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "capelli/knop_sahi.hpp"

namespace capelli {

// value + eps * nil with eps^2 = 0
struct DualScalar {
  Rat value;
  Rat nil;

  friend DualScalar operator+(const DualScalar& a, const DualScalar& b) {
    return {a.value + b.value, a.nil + b.nil};
  }
  friend DualScalar operator*(const DualScalar& a, const DualScalar& b) {
    return {a.value * b.value, a.value * b.nil + a.nil * b.value};
  }
  friend bool operator==(const DualScalar& a, const DualScalar& b) {
    return a.value == b.value && a.nil == b.nil;
  }
};

// Polynomial in the commuting generators C (Casimir) and E (Euler) with
// coefficients in Q(s). Keys are (C exponent, E exponent).
class OpPoly {
 public:
  using Map = std::map<std::pair<int, int>, RatFunc>;

  OpPoly() = default;
  static OpPoly constant(const RatFunc& c);
  static OpPoly C();
  static OpPoly E();

  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  RatFunc coeff(int c, int e) const;
  void add_term(int c, int e, const RatFunc& v);

  OpPoly& operator+=(const OpPoly& o);
  friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
  friend OpPoly operator-(const OpPoly& a, const OpPoly& b);
  friend OpPoly operator*(const OpPoly& a, const OpPoly& b);
  friend OpPoly operator*(const RatFunc& c, const OpPoly& a);
  friend bool operator==(const OpPoly& a, const OpPoly& b) { return a.t_ == b.t_; }

 private:
  Map t_;
};

struct Block {
  Pair2 lambda;
  Rat t;
  int mult = 1;
  friend bool operator==(const Block&, const Block&) = default;
};

// t in {0, -2, -4, ...}
bool is_special_dimension(const Rat& t);
// -t/2 for a special dimension
int kbar(const Rat& t);

// prod (x - a(a+t-2)) over 0 <= a <= d with a = d mod 2
UniPoly min_poly_product(int d, const Rat& t);
// the product with each distinct root kept min(2, count) times
UniPoly min_poly(int d, const Rat& t);
// p(c + eps) for the dual Casimir value
DualScalar eval_dual(const UniPoly& p, const DualScalar& c);
// Dual Casimir on a block: c + eps when mult = 2.
DualScalar block_casimir(const Block& b);
// min_poly kills C on every size-d block and no proper monic divisor does.
bool min_poly_is_minimal(int d, const Rat& t);

std::vector<Block> blocks(int d, const Rat& t);
std::optional<Block> block_of(const Pair2& l, const Rat& t);
DualScalar block_eval(const OpPoly& p, const Block& b, const Rat& s_value);

// L_{s,t,l} with d = |l|
OpPoly l_op(const Pair2& l);
// D_{s,t,l}, checked pole-free at s = t
OpPoly d_op(const Pair2& l, const Rat& t);

QPoly cat_eig_from_blocks(const Pair2& l, const Rat& t);
QPoly cat_eig_formula(const Pair2& l, const Rat& t);

struct ScalarLimit {
  Rat limit;     // lim_{s -> -2k} (c_dagger(s) - c_l(s)) / H_dagger(-s/2)
  Rat expected;  // 4(l1 - l2 - k - 1) / H'_dagger(k)
};
ScalarLimit bprime_limit(const Pair2& l, int k);

}  // namespace capelli
