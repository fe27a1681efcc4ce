#include "capelli/identities.hpp"

#include <string>

#include "capelli/error.hpp"
#include "capelli/hypergeom.hpp"

namespace capelli {

namespace {

std::string param(long v) { return std::to_string(v); }

Rat sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

// 1/v, raising a pole error that names the vanishing factor
Rat inv(const Rat& v, const std::string& factor) {
  if (sgn(v) == 0) throw PoleError(1, "sample point hits a pole: factor " + factor + " vanishes");
  return 1 / v;
}

// 1 / (a (a-1) ... (a-n+1))
Rat inv_falling(const Rat& a, int n, const std::string& label) {
  Rat r = 1;
  for (int i = 0; i < n; ++i) r *= inv(a - i, label + "-" + std::to_string(i));
  return r;
}

std::string point(const Rat& x, const Rat& y) { return "(" + to_string(x) + "," + to_string(y) + ")"; }

}  // namespace

RatFunc lhs_theorem_e(int i, int j, int N) {
  require(i >= 0 && j >= 0 && i + j <= N, "identity E needs i + j <= N");
  RatFunc q(UniPoly::falling(N - i) * UniPoly::falling(N - j), UniPoly::falling(N));
  return q.derivative();
}

RatFunc rhs_theorem_e(int i, int j, int N) {
  require(i >= 0 && j >= 0 && i + j <= N, "identity E needs i + j <= N");
  RatFunc sum;
  for (int q = 0; q <= j; ++q) {
    for (int p = i + j - q; p <= std::min(N - q, N - 1); ++p) {
      Rat c = sign_of(N + p + q + 1) * falling(Rat(N - p), q) * falling(Rat(i), q) *
              falling(Rat(j), q) * falling(Rat(N - i - j), N - p - q);
      if (sgn(c) == 0) continue;  // also guards the negative falling index when q > i
      c /= Rat(factorial(q)) * (N - p);
      UniPoly num = UniPoly::falling(p - i) * UniPoly::falling(p - j) * UniPoly::linear(1, q - p) * c;
      UniPoly den = UniPoly::falling(p + 1) * UniPoly::falling(q, q - N);
      sum += RatFunc(num, den);
    }
  }
  return sum;
}

IdentityReport theorem_e_check(int i, int j, int N) {
  RatFunc l = lhs_theorem_e(i, j, N), r = rhs_theorem_e(i, j, N);
  return {"identity_e", {{"i", param(i)}, {"j", param(j)}, {"N", param(N)}}, l == r, l.str("x"), r.str("x")};
}

std::vector<IdentityReport> verify_theorem_e(int n_max) {
  std::vector<IdentityReport> out;
  for (int N = 0; N <= n_max; ++N)
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j) out.push_back(theorem_e_check(i, j, N));
  return out;
}

UniPoly logderiv_rhs(int N) {
  UniPoly r;
  for (int t = 1; t <= N; ++t)
    r += UniPoly::falling(N - t) * (sign_of(t + 1) * falling(Rat(N), t) / t);
  return r;
}

IdentityReport logderiv_check(int N) {
  require(N >= 0, "negative N");
  RatFunc l = lhs_theorem_e(0, 0, N);
  RatFunc r(logderiv_rhs(N));
  return {"logderiv", {{"N", param(N)}}, l == r, l.str("x"), r.str("x")};
}

RatFunc psi_left(int i, int j, int N) {
  require(i >= 0 && j >= 0 && i + j <= N, "psi functions need i + j <= N");
  UniPoly den(1);
  for (int t = 1; t <= j; ++t) den *= UniPoly::linear(1, t - N);
  return RatFunc(UniPoly::falling(N - i), den);
}

RatFunc psi_right(int i, int j, int N) { return rhs_theorem_e(i, j, N); }

Rat psi1(int i, int j, int N, const Rat& x, const Rat& y) {
  require(i >= 0 && j >= 0 && i + j <= N, "psi functions need i + j <= N");
  const int d = N - i;
  Rat sum = 0;
  for (int q = 0; q <= j; ++q) {
    for (int r = std::max(1, q); r <= d - j + q; ++r) {
      Rat e = sign_of(r + q + 1) * falling(Rat(r), q) * falling(x - y - d, q) * falling(Rat(j), q) *
              falling(Rat(d - j), r - q);
      if (sgn(e) == 0) continue;
      e *= falling(x, d - r) * (y + r + q) / (Rat(factorial(q)) * r);
      e *= inv_falling(y + r + j, j + r, "(y+" + std::to_string(r + j) + ")");
      e *= falling(y + r - 1, r - q) * inv(y + q, "(y+" + std::to_string(q) + ")");
      sum += e;
    }
  }
  return sum;
}

Rat psi2(int i, int j, int N, const Rat& x, const Rat& y) {
  require(i >= 0 && j >= 0 && i + j <= N, "psi functions need i + j <= N");
  const int d = N - i;
  Rat inv_prod = 1, harmonic = 0;
  for (int t = 1; t <= j; ++t) {
    Rat v = inv(y + t, "(y+" + std::to_string(t) + ")");
    inv_prod *= v;
    harmonic += v;
  }
  Rat fd = falling(x, d);
  Rat dfd = UniPoly::falling(d).derivative().eval(x);
  return -fd * inv_prod * harmonic + dfd * inv_prod;
}

int psi_degree_bound(int i, int j, int N) {
  // degree in x is at most d and in y at most d + 1 once multiplied by prod (y+m), m <= d + j
  return N - i + j + 2;
}

std::vector<Sample> tensor_grid(int D, const Rat& x0, const Rat& y0) {
  std::vector<Sample> out;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; b <= D; ++b) out.push_back({x0 + a, y0 + b});
  return out;
}

IdentityReport psi_chain_check(int i, int j, int N, const std::vector<Sample>& samples) {
  IdentityReport rep{"psi_chain",
                     {{"i", param(i)}, {"j", param(j)}, {"N", param(N)}, {"samples", param(samples.size())}},
                     true,
                     "psi1",
                     "psi2"};
  RatFunc left_deriv = psi_left(i, j, N).derivative();
  RatFunc right = psi_right(i, j, N);
  auto mismatch = [&](const std::string& what, const Sample& s, const Rat& a, const Rat& b) {
    rep.pass = false;
    rep.params.push_back({"witness", what + " at " + point(s.x, s.y)});
    rep.lhs = to_string(a);
    rep.rhs = to_string(b);
  };
  for (const Sample& s : samples) {
    Rat a = psi1(i, j, N, s.x, s.y), b = psi2(i, j, N, s.x, s.y);
    if (a != b) return mismatch("psi1=psi2", s, a, b), rep;
    Rat shifted = s.x - N;
    Rat r = right.eval(s.x), p1 = psi1(i, j, N, s.x, shifted);
    if (r != p1) return mismatch("psiR=psi1(x,x-N)", s, r, p1), rep;
    Rat l = left_deriv.eval(s.x), p2 = psi2(i, j, N, s.x, shifted);
    if (l != p2) return mismatch("dpsiL=psi2(x,x-N)", s, l, p2), rep;
  }
  return rep;
}

IdentityReport psi_chain_check(int i, int j, int N) {
  int D = psi_degree_bound(i, j, N);
  IdentityReport rep = psi_chain_check(i, j, N, tensor_grid(D, Rat(N + 1) + Rat(1, 3), Rat(2, 7)));
  rep.params.insert(rep.params.begin() + 3, {"degree_bound", param(D)});
  return rep;
}

Rat f_sum(int s, int j, int ell, const Rat& x, const Rat& y) {
  require(j >= 0 && ell >= 0 && s >= 0 && s <= ell, "F(s) needs 0 <= s <= ell");
  Rat sum = 0;
  for (int q = s == 0 ? 1 : 0; q <= j; ++q) {
    Rat t = (y + 2 * q + s) * Rat(binomial(j, q) * binomial(ell, s) * factorial(q + s - 1)) /
            Rat(factorial(j + ell));
    t *= falling(y + j, j - q) * inv_falling(y + q + s + j, j + 1, "(y+" + std::to_string(q + s + j) + ")");
    t *= falling(x - y, q) * falling(x + j + ell, j + ell - q - s);
    sum += t;
  }
  return sum;
}

Rat f_closed(int s, int j, int ell, const Rat& x, const Rat& y) {
  require(j >= 0 && ell >= 0 && s >= 0 && s <= ell, "F(s) needs 0 <= s <= ell");
  if (s >= 1)
    return falling(x + j + ell, ell - s) * falling(x + j, j) /
           (Rat(factorial(ell - s)) * s * falling(Rat(j + ell), j));
  Rat h = 0;
  for (int t = 1; t <= j; ++t)
    h += inv(y + t, "(y+" + std::to_string(t) + ")") - inv(x + t, "(x+" + std::to_string(t) + ")");
  return falling(x + j + ell, j + ell) / Rat(factorial(j + ell)) * h;
}

IdentityReport f_closed_form_check(int j, int ell, const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  IdentityReport rep{"f_closed_form",
                     {{"j", param(j)}, {"ell", param(ell)}, {"samples", param(xs.size() * ys.size())}},
                     true,
                     "F(s) sum",
                     "F(s) closed form"};
  for (int s = 0; s <= ell; ++s)
    for (const Rat& x : xs)
      for (const Rat& y : ys) {
        Rat a = f_sum(s, j, ell, x, y), b = f_closed(s, j, ell, x, y);
        if (a != b) {
          rep.pass = false;
          rep.params.push_back({"witness", "s=" + param(s) + " at " + point(x, y)});
          rep.lhs = to_string(a);
          rep.rhs = to_string(b);
          return rep;
        }
      }
  return rep;
}

namespace {
// Grid for F and H: x - y - j stays positive and no coordinate is an integer.
void fh_grid(int D, int j, std::vector<Rat>& xs, std::vector<Rat>& ys) {
  xs.clear();
  ys.clear();
  for (int a = 0; a <= D; ++a) {
    xs.push_back(Rat(D + j + 2 + a) + Rat(1, 3));
    ys.push_back(Rat(a) + Rat(1, 2));
  }
}
}  // namespace

IdentityReport f_closed_form_check(int j, int ell) {
  int D = 2 * j + ell + 1;
  std::vector<Rat> xs, ys;
  fh_grid(D, j, xs, ys);
  IdentityReport rep = f_closed_form_check(j, ell, xs, ys);
  rep.params.insert(rep.params.begin() + 2, {"degree_bound", param(D)});
  return rep;
}

Rat e1(int q, int s, int j, const Rat& x, const Rat& y) {
  require(q >= 0 && q <= j && s >= 0 && q + s >= 1, "E1 needs 0 <= q <= j and q + s >= 1");
  Rat t = (y + 2 * q + s) * Rat(binomial(j, q) * factorial(q + s - 1)) / Rat(factorial(s));
  t *= falling(y + j, j - q) * inv_falling(y + q + s + j, j + 1, "(y+" + std::to_string(q + s + j) + ")");
  t *= falling(x - y, q) * falling(x + j + s, s) * inv_falling(x + q + s, q + s, "(x+" + std::to_string(q + s) + ")");
  return t;
}

Rat h_sum(int j, int s, const Rat& x, const Rat& y) {
  Rat sum = 0;
  for (int q = s == 0 ? 1 : 0; q <= j; ++q) sum += e1(q, s, j, x, y);
  return sum;
}

Rat h_hypergeometric(int j, int s, const Rat& x, const Rat& y) {
  require(s >= 1, "the hypergeometric form needs s >= 1");
  HypParams p{{y / 2 + make_rat(s, 2) + 1, y + s, Rat(-j), Rat(s), y - x},
              {y / 2 + make_rat(s, 2), y + s + j + 1, y + 1, x + s + 1},
              1};
  return e1(0, s, j, x, y) * pfq_terminating(p);
}

Rat h_closed(int j, int s, const Rat& x, const Rat& y) {
  if (s >= 1) return make_rat(1, s);
  Rat h = 0;
  for (int t = 1; t <= j; ++t)
    h += inv(y + t, "(y+" + std::to_string(t) + ")") - inv(x + t, "(x+" + std::to_string(t) + ")");
  return h;
}

IdentityReport h_function_check(int j, int s, const Rat& x, const Rat& y) {
  require(j >= 0 && s >= 0, "H(s) needs j, s >= 0");
  require(sgn(x) > 0 && sgn(y) > 0 && x - y - j > 0, "H(s) needs x, y, x-y-j > 0");
  Rat direct = h_sum(j, s, x, y), closed = h_closed(j, s, x, y);
  IdentityReport rep{"h_function",
                     {{"j", param(j)}, {"s", param(s)}, {"x", to_string(x)}, {"y", to_string(y)}},
                     direct == closed,
                     to_string(direct),
                     to_string(closed)};
  if (rep.pass && s >= 1) {
    Rat hyp = h_hypergeometric(j, s, x, y);
    if (hyp != direct) {
      rep.pass = false;
      rep.params.push_back({"witness", "5F4 form"});
      rep.rhs = to_string(hyp);
    }
  }
  return rep;
}

IdentityReport h_function_check(int j, int s) {
  int D = 2 * j + s + 2;
  std::vector<Rat> xs, ys;
  fh_grid(D, j, xs, ys);
  IdentityReport rep{"h_function",
                     {{"j", param(j)}, {"s", param(s)}, {"degree_bound", param(D)},
                      {"samples", param(xs.size() * ys.size())}},
                     true,
                     "H(s) sum",
                     s >= 1 ? "1/s and 5F4 form" : "harmonic difference"};
  for (const Rat& x : xs)
    for (const Rat& y : ys) {
      IdentityReport one = h_function_check(j, s, x, y);
      if (!one.pass) {
        rep.pass = false;
        rep.params.push_back({"witness", point(x, y)});
        rep.lhs = one.lhs;
        rep.rhs = one.rhs;
        return rep;
      }
    }
  return rep;
}

}  // namespace capelli
