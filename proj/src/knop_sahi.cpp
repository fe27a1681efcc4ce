#include "capelli/knop_sahi.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace capelli {

namespace {

KPoly build_ks(const Pair2& l) {
  const int d = l.diff();
  const UniPoly denom = UniPoly::falling(d, 1);
  KPoly p;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) {
      Rat scale = Rat(factorial(d)) / Rat(factorial(i) * factorial(j) * factorial(d - i - j));
      UniPoly num = UniPoly::falling(d - i, 1) * UniPoly::falling(d - j, 1) * scale;
      p += KPoly::falling(l.l2 + i, l.l2 + j, RatFunc(num, denom));
    }
  }
  return p;
}

struct KsCache {
  std::shared_mutex mu;
  std::map<Pair2, std::shared_ptr<const KPoly>> table;
};

KsCache& cache() {
  static KsCache c;
  return c;
}

}  // namespace

KPoly ks_poly(const Pair2& l) {
  require(Pair2::valid(l.l1, l.l2), "invalid partition " + l.str());
  KsCache& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = c.table.find(l);
    if (it != c.table.end()) return *it->second;
  }
  auto built = std::make_shared<const KPoly>(build_ks(l));
  std::unique_lock lock(c.mu);
  auto [it, inserted] = c.table.emplace(l, built);
  return *it->second;
}

std::vector<int> ks_pole_set(const Pair2& l, int k_max) {
  KPoly p = ks_poly(l);
  std::vector<int> out;
  for (int k = 0; k <= k_max; ++k) {
    int worst = 0;
    for (const auto& [key, c] : p.terms()) worst = std::min(worst, c.valuation(k));
    if (worst < -1)
      throw PoleError(-worst, "coefficient of P" + l.str() + " has a pole of order " +
                                  std::to_string(-worst) + " at " + std::to_string(k));
    if (worst == -1) out.push_back(k);
  }
  return out;
}

QPoly specialize(const KPoly& f, const Rat& k) {
  return f.map<Rat>([&](const RatFunc& c) { return c.eval(k); });
}

QPoly residue_part(const KPoly& f, const Rat& k) {
  return f.map<Rat>([&](const RatFunc& c) { return c.residue(k); });
}

QPoly regular_part(const KPoly& f, const Rat& k) {
  return f.map<Rat>([&](const RatFunc& c) { return c.regular_value(k); });
}

KPoly kappa_derivative(const KPoly& f) {
  return f.map<RatFunc>([](const RatFunc& c) { return c.derivative(); });
}

QPoly sing_part(const Pair2& l, int k) { return residue_part(ks_poly(l), k); }

QPoly reg_part(const Pair2& l, int k) { return regular_part(ks_poly(l), k); }

namespace {
Pair2 singular_partner(const Pair2& l, int k) {
  require(classify(l, k) == Cls::Singular,
          l.str() + " is not " + std::to_string(k) + "-singular");
  auto d = dagger(l, k);
  ensure(d.has_value(), "singular partition without a partner");
  return *d;
}
}  // namespace

RCoeff r_coeff_both(const Pair2& l, int k) {
  Pair2 ld = singular_partner(l, k);
  Rat hd = h_poly(ld).derivative().eval(k);
  ensure(sgn(hd) != 0, "H' of the partner vanishes");
  Rat from_h = -h_poly(l).eval(k) / hd;
  int d = l.diff();
  Rat sign = (k + l.size()) % 2 == 0 ? 1 : -1;
  Rat closed = sign * falling(Rat(d), k + 1) /
               Rat(factorial(2 * k + 2 - d) * factorial(d - k - 2));
  ensure(from_h == closed, "r coefficient formulas disagree for " + l.str());
  return {from_h, from_h, closed};
}

Rat r_coeff(const Pair2& l, int k) { return r_coeff_both(l, k).value; }

QRoutes q_poly_routes(const Pair2& l, int k) {
  Pair2 ld = singular_partner(l, k);
  Rat r = r_coeff(l, k);
  QPoly by_derivative = reg_part(l, k) - specialize(kappa_derivative(ks_poly(ld)), k) * r;
  KPoly combo = ks_poly(l) - ks_poly(ld) * RatFunc(UniPoly(r), UniPoly::linear(1, -k));
  QPoly by_limit = specialize(combo, k);
  return {by_derivative, by_limit};
}

QPoly q_poly(const Pair2& l, int k) {
  QRoutes q = q_poly_routes(l, k);
  ensure(q.by_derivative == q.by_limit, "Q routes disagree for " + l.str());
  return q.by_derivative;
}

Rat gen_eval(const QPoly& f, const Pair2& m, int k) {
  require(f.is_symmetric(), "generalized value needs a symmetric polynomial");
  Rat x = m.l1 - k - 1, y = m.l2;
  if (classify(m, k) == Cls::Singular) return square_op(f).eval(x, y);
  return f.eval(x, y);
}

std::pair<Rat, Rat> tcheck_values(const Pair2& l, int k) {
  Pair2 ld = singular_partner(l, k);
  Rat r = r_coeff(l, k);
  UniPoly alpha = h_poly(ld).exact_div(UniPoly::linear(1, -k)) * (-r);
  UniPoly beta = h_poly(l);
  Rat t1 = beta.eval(k);
  Rat t2 = (beta.derivative().eval(k) - alpha.derivative().eval(k)) / (4 * (k + 1 - l.diff()));
  return {t1, t2};
}

}  // namespace capelli
