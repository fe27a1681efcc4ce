#pragma once

#include <string>
#include <utility>
#include <vector>

#include "capelli/knop_sahi.hpp"

namespace capelli {

enum class Route { A, B, C, D, Oracle };

const char* route_name(Route r);
Route parse_route(const std::string& s);

struct EigenPoly {
  Pair2 lambda;
  int k = 0;
  QPoly body;
  Route route = Route::Oracle;
};

EigenPoly eig_regular(const Pair2& l, int k);
EigenPoly eig_singular(const Pair2& l, int k);
EigenPoly eig_qreg_limit(const Pair2& l, int k);
Rat m_coeff(const Pair2& l, const Pair2& m, int k);
EigenPoly eig_qreg_explicit(const Pair2& l, int k);
EigenPoly eig_oracle(const Pair2& l, int k);

// Runs one route; inapplicable routes raise a Domain error naming the class.
EigenPoly eig(const Pair2& l, int k, Route r);
// The closed-form routes that apply to the class of l.
std::vector<Route> applicable_routes(const Pair2& l, int k);
// The class-appropriate closed form (A, B or C).
EigenPoly eig_default(const Pair2& l, int k);

// (f_l(m1-k-1, m2), square f_l there) for m regular or quasiregular.
std::pair<Rat, Rat> restriction_pair(const Pair2& l, const Pair2& m, int k);

// One interpolation condition: value (or square-operator value when square is set)
// at the point (m1 - shift - 1, m2).
struct InterpCondition {
  Pair2 mu;
  bool square = false;
  Rat value;
};

// Unique symmetric polynomial of degree <= d meeting the conditions, solved in the
// symmetric falling-factorial basis. Throws Internal if the system is singular.
QPoly interpolate_symmetric(int d, const Rat& shift, const std::vector<InterpCondition>& conds);

// Indices (a, b), a >= b, a + b <= d, of the symmetric falling basis in graded order.
std::vector<Pair2> symmetric_basis_index(int d);
QPoly symmetric_falling(const Pair2& ab);

// The R basis up to size d is unitriangular against the symmetric falling basis.
bool r_basis_unitriangular(int k, int d);

}  // namespace capelli
