#pragma once

#include <vector>

#include "capelli/check.hpp"
#include "capelli/ratfunc.hpp"

namespace capelli {

// d/dx ( x^(N-i) x^(N-j) / x^(N) ), falling factorials, as a function of x.
RatFunc lhs_theorem_e(int i, int j, int N);
// The double-sum side over q and p.
RatFunc rhs_theorem_e(int i, int j, int N);
IdentityReport theorem_e_check(int i, int j, int N);
// All triples with i + j <= N <= n_max, ordered by N, then i, then j.
std::vector<IdentityReport> verify_theorem_e(int n_max);

// sum_{t=1}^N (-1)^(t+1)/t N^(t) x^(N-t), falling factorials
UniPoly logderiv_rhs(int N);
IdentityReport logderiv_check(int N);

struct Sample {
  Rat x;
  Rat y;
};

// x^(d) / ((x-N+1)...(x-N+j)) with d = N - i
RatFunc psi_left(int i, int j, int N);
RatFunc psi_right(int i, int j, int N);
Rat psi1(int i, int j, int N, const Rat& x, const Rat& y);
Rat psi2(int i, int j, int N, const Rat& x, const Rat& y);

// Per-variable degree bound for psi1 - psi2 after clearing the y denominators.
int psi_degree_bound(int i, int j, int N);
// (D+1) x (D+1) tensor grid with non-integer coordinates.
std::vector<Sample> tensor_grid(int D, const Rat& x0, const Rat& y0);
IdentityReport psi_chain_check(int i, int j, int N, const std::vector<Sample>& samples);
IdentityReport psi_chain_check(int i, int j, int N);

Rat f_sum(int s, int j, int ell, const Rat& x, const Rat& y);
Rat f_closed(int s, int j, int ell, const Rat& x, const Rat& y);
IdentityReport f_closed_form_check(int j, int ell, const std::vector<Rat>& xs, const std::vector<Rat>& ys);
IdentityReport f_closed_form_check(int j, int ell);

Rat e1(int q, int s, int j, const Rat& x, const Rat& y);
// sum over q of E1(q, s); q starts at 1 when s = 0
Rat h_sum(int j, int s, const Rat& x, const Rat& y);
// E1(0, s) times the terminating 5F4, s >= 1
Rat h_hypergeometric(int j, int s, const Rat& x, const Rat& y);
// 1/s for s >= 1, the harmonic difference for s = 0
Rat h_closed(int j, int s, const Rat& x, const Rat& y);
IdentityReport h_function_check(int j, int s, const Rat& x, const Rat& y);
IdentityReport h_function_check(int j, int s);

}  // namespace capelli
