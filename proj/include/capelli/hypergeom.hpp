#pragma once

#include <vector>

#include "capelli/rat.hpp"

namespace capelli {

struct HypParams {
  std::vector<Rat> num;
  std::vector<Rat> den;
  Rat z = 1;
};

// Index of the last possibly nonzero term: the least |a| over numerator parameters a
// that are non-positive integers. Throws when no such parameter exists.
long termination_index(const HypParams& p);

// Exact terminating series; rejects a denominator parameter that vanishes in range.
Rat pfq_terminating(const HypParams& p);

HypParams dougall_params(const Rat& a, long b, long c, long d);
// (a+1)^(b) (a+b+c+1)^(d) / ((a+c+1)^(d) (a+d+1)^(b)), rising factorials
Rat dougall_rhs(const Rat& a, long b, long c, long d);

struct DougallResult {
  Rat lhs;
  Rat rhs;
  bool equal = false;
};
DougallResult dougall_check(const Rat& a, long b, long c, long d);

}  // namespace capelli
