#pragma once

#include <utility>
#include <vector>

#include "capelli/bipoly.hpp"
#include "capelli/partitions.hpp"

namespace capelli {

using QPoly = BiPoly<Rat>;
using KPoly = BiPoly<RatFunc>;

// P_l over Q(kappa). Results are memoized behind a reader/writer lock.
KPoly ks_poly(const Pair2& l);

// Integers 0 <= k0 <= k_max where some coefficient of P_l has a pole; throws on a
// pole of order above one.
std::vector<int> ks_pole_set(const Pair2& l, int k_max);

// Coefficient-wise transforms at kappa = k.
QPoly specialize(const KPoly& f, const Rat& k);
QPoly residue_part(const KPoly& f, const Rat& k);
QPoly regular_part(const KPoly& f, const Rat& k);
KPoly kappa_derivative(const KPoly& f);

QPoly sing_part(const Pair2& l, int k);
QPoly reg_part(const Pair2& l, int k);

struct RCoeff {
  Rat value;
  Rat from_h;       // -H_l(k) / H'_dagger(k)
  Rat closed_form;  // signed falling-factorial quotient
};
// Requires l k-singular; both formulas must agree.
RCoeff r_coeff_both(const Pair2& l, int k);
Rat r_coeff(const Pair2& l, int k);

struct QRoutes {
  QPoly by_derivative;
  QPoly by_limit;
};
QRoutes q_poly_routes(const Pair2& l, int k);
QPoly q_poly(const Pair2& l, int k);

// f at (m1-k-1, m2), or the square operator there when m is k-singular.
Rat gen_eval(const QPoly& f, const Pair2& m, int k);

std::pair<Rat, Rat> tcheck_values(const Pair2& l, int k);

}  // namespace capelli
