#include "capelli/hypergeom.hpp"

#include <optional>

#include "capelli/error.hpp"

namespace capelli {

namespace {
bool nonpositive_integer(const Rat& a) { return is_integer(a) && sgn(a) <= 0; }
}  // namespace

long termination_index(const HypParams& p) {
  std::optional<long> n;
  for (const Rat& a : p.num) {
    if (!nonpositive_integer(a)) continue;
    long v = -a.get_num().get_si();
    if (!n || v < *n) n = v;
  }
  if (!n) fail(ErrorCode::Domain, "series does not terminate: no non-positive integer numerator parameter");
  return *n;
}

Rat pfq_terminating(const HypParams& p) {
  long n = termination_index(p);
  for (const Rat& b : p.den) {
    if (nonpositive_integer(b) && -b.get_num().get_si() < n)
      fail(ErrorCode::Domain, "denominator parameter " + to_string(b) + " vanishes within the series");
  }
  Rat sum = 0, term = 1;
  for (long m = 0; m <= n; ++m) {
    sum += term;
    if (m == n) break;
    for (const Rat& a : p.num) term *= a + m;
    for (const Rat& b : p.den) term /= b + m;
    term *= p.z;
    term /= m + 1;
  }
  return sum;
}

HypParams dougall_params(const Rat& a, long b, long c, long d) {
  return HypParams{{a / 2 + 1, a, Rat(-b), Rat(-c), Rat(-d)},
                   {a / 2, a + b + 1, a + c + 1, a + d + 1},
                   1};
}

Rat dougall_rhs(const Rat& a, long b, long c, long d) {
  Rat den = rising(a + c + 1, d) * rising(a + d + 1, b);
  if (sgn(den) == 0) fail(ErrorCode::Domain, "Dougall right-hand side has a zero denominator");
  return rising(a + 1, b) * rising(a + b + c + 1, d) / den;
}

DougallResult dougall_check(const Rat& a, long b, long c, long d) {
  require(b >= 0 && c >= 0 && d >= 0, "Dougall parameters b, c, d must be non-negative");
  require(sgn(a) != 0, "Dougall parameter a must be nonzero");
  require(a + b + c + d + 1 > 0, "Dougall needs a+b+c+d+1 > 0");
  DougallResult r;
  r.lhs = pfq_terminating(dougall_params(a, b, c, d));
  r.rhs = dougall_rhs(a, b, c, d);
  r.equal = r.lhs == r.rhs;
  return r;
}

}  // namespace capelli
