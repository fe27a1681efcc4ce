#include "capelli/deligne.hpp"

#include <algorithm>

#include "capelli/eigenpoly.hpp"

namespace capelli {

OpPoly OpPoly::constant(const RatFunc& c) {
  OpPoly r;
  r.add_term(0, 0, c);
  return r;
}

OpPoly OpPoly::C() {
  OpPoly r;
  r.add_term(1, 0, 1);
  return r;
}

OpPoly OpPoly::E() {
  OpPoly r;
  r.add_term(0, 1, 1);
  return r;
}

RatFunc OpPoly::coeff(int c, int e) const {
  auto it = t_.find({c, e});
  return it == t_.end() ? RatFunc() : it->second;
}

void OpPoly::add_term(int c, int e, const RatFunc& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = t_.try_emplace({c, e}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) t_.erase(it);
  }
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
  for (const auto& [k, v] : o.t_) add_term(k.first, k.second, v);
  return *this;
}

OpPoly operator-(const OpPoly& a, const OpPoly& b) {
  OpPoly r = a;
  for (const auto& [k, v] : b.t_) r.add_term(k.first, k.second, -v);
  return r;
}

OpPoly operator*(const OpPoly& a, const OpPoly& b) {
  OpPoly r;
  for (const auto& [ka, va] : a.t_)
    for (const auto& [kb, vb] : b.t_) r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  return r;
}

OpPoly operator*(const RatFunc& c, const OpPoly& a) {
  OpPoly r;
  for (const auto& [k, v] : a.t_) r.add_term(k.first, k.second, c * v);
  return r;
}

bool is_special_dimension(const Rat& t) {
  return is_integer(t) && sgn(t) <= 0 && mpz_even_p(t.get_num().get_mpz_t());
}

int kbar(const Rat& t) {
  require(is_special_dimension(t), "t=" + to_string(t) + " is not a non-positive even integer");
  return static_cast<int>(-t.get_num().get_si() / 2);
}

namespace {

std::vector<Rat> casimir_roots(int d, const Rat& t) {
  std::vector<Rat> roots;
  for (int a = d % 2; a <= d; a += 2) roots.push_back(Rat(a) * (a + t - 2));
  return roots;
}

}  // namespace

UniPoly min_poly_product(int d, const Rat& t) {
  require(d >= 0, "negative degree");
  UniPoly p(1);
  for (const Rat& r : casimir_roots(d, t)) p *= UniPoly::linear(1, -r);
  return p;
}

UniPoly min_poly(int d, const Rat& t) {
  require(d >= 0, "negative degree");
  std::vector<std::pair<Rat, int>> distinct;
  for (const Rat& r : casimir_roots(d, t)) {
    auto it = std::find_if(distinct.begin(), distinct.end(), [&](const auto& e) { return e.first == r; });
    if (it == distinct.end())
      distinct.push_back({r, 1});
    else
      ++it->second;
  }
  UniPoly p(1);
  for (const auto& [r, count] : distinct)
    for (int i = 0; i < std::min(2, count); ++i) p *= UniPoly::linear(1, -r);
  return p;
}

DualScalar eval_dual(const UniPoly& p, const DualScalar& c) {
  DualScalar r{0, 0};
  for (int i = p.degree(); i >= 0; --i) r = r * c + DualScalar{p.coeff(i), 0};
  return r;
}

DualScalar block_casimir(const Block& b) { return {c_cat(b.lambda, b.t), b.mult == 2 ? Rat(1) : Rat(0)}; }

std::vector<Block> blocks(int d, const Rat& t) {
  std::vector<Block> out;
  if (!is_special_dimension(t)) {
    for (const Pair2& l : enumerate(d, Filter::SizeExactly)) out.push_back({l, t, 1});
    return out;
  }
  int k = kbar(t);
  for (const Pair2& l : enumerate(d, Filter::NonSingular, k))
    out.push_back({l, t, classify(l, k) == Cls::Quasiregular ? 2 : 1});
  return out;
}

std::optional<Block> block_of(const Pair2& l, const Rat& t) {
  for (const Block& b : blocks(l.size(), t))
    if (b.lambda == l) return b;
  return std::nullopt;
}

bool min_poly_is_minimal(int d, const Rat& t) {
  UniPoly p = min_poly(d, t);
  auto kills_all = [&](const UniPoly& q) {
    for (const Block& b : blocks(d, t))
      if (!(eval_dual(q, block_casimir(b)) == DualScalar{0, 0})) return false;
    return true;
  };
  if (!kills_all(p)) return false;
  for (const Rat& r : casimir_roots(d, t))
    if (kills_all(p.deflate(r))) return false;
  return true;
}

DualScalar block_eval(const OpPoly& p, const Block& b, const Rat& s_value) {
  DualScalar c = block_casimir(b);
  Rat e = b.lambda.size();
  DualScalar r{0, 0};
  for (const auto& [key, coeff] : p.terms()) {
    DualScalar term{coeff.eval(s_value), 0};
    for (int i = 0; i < key.first; ++i) term = term * c;
    for (int i = 0; i < key.second; ++i) term.value *= e, term.nil *= e;
    r = r + term;
  }
  ensure(b.mult == 2 || sgn(r.nil) == 0, "nilpotent part on a semisimple block");
  return r;
}

OpPoly l_op(const Pair2& l) {
  const int d = l.size();
  OpPoly num = OpPoly::constant(1);
  for (int i = 0; i < d; ++i) num = num * (OpPoly::E() - OpPoly::constant(i));
  RatFunc den = Rat(factorial(d));
  UniPoly cl = c_cat_poly(l);
  for (const Pair2& v : enumerate(d, Filter::SizeExactly)) {
    if (v == l) continue;
    UniPoly cv = c_cat_poly(v);
    num = num * (OpPoly::C() - OpPoly::constant(cv));
    UniPoly gap = cl - cv;
    if (gap.is_zero()) fail(ErrorCode::Domain, "coinciding Casimir polynomials for " + l.str() + " and " + v.str());
    den *= gap;
  }
  return RatFunc(UniPoly(1)) / den * num;
}

OpPoly d_op(const Pair2& l, const Rat& t) {
  OpPoly r;
  if (!is_special_dimension(t) || classify(l, kbar(t)) == Cls::Regular) {
    r = l_op(l);
  } else {
    int k = kbar(t);
    Pair2 ld = *dagger(l, k);
    if (classify(l, k) == Cls::Singular)
      r = RatFunc(c_cat_poly(ld) - c_cat_poly(l)) * l_op(ld);
    else
      r = l_op(l) + l_op(ld);
  }
  for (const auto& [key, c] : r.terms())
    ensure(c.valuation(t) >= 0, "operator for " + l.str() + " has a pole at s=" + to_string(t));
  return r;
}

QPoly cat_eig_from_blocks(const Pair2& l, const Rat& t) {
  OpPoly D = d_op(l, t);
  const bool special = is_special_dimension(t);
  const int k = special ? kbar(t) : 0;
  std::vector<InterpCondition> conds;
  for (const Pair2& m : enumerate(l.size())) {
    if (special && classify(m, k) == Cls::Singular) {
      // the square operator is symmetric, so its value at m is the nilpotent
      // coefficient on the block of the partner
      auto b = block_of(*dagger(m, k), t);
      ensure(b.has_value(), "missing partner block for " + m.str());
      conds.push_back({m, true, block_eval(D, *b, t).nil});
    } else {
      auto b = block_of(m, t);
      ensure(b.has_value(), "missing block for " + m.str());
      conds.push_back({m, false, block_eval(D, *b, t).value});
    }
  }
  return interpolate_symmetric(l.size(), -t / 2, conds);
}

namespace {

// P_l with kappa replaced by -s/2, divided by H_l(-s/2)
KPoly normalized_in_s(const Pair2& l) {
  RatFunc h(h_poly(l).compose_linear(Rat(-1, 2), 0));
  return ks_poly(l).map<RatFunc>([&](const RatFunc& c) { return c.compose_linear(Rat(-1, 2), 0) / h; });
}

}  // namespace

QPoly cat_eig_formula(const Pair2& l, const Rat& t) {
  if (!is_special_dimension(t) || classify(l, kbar(t)) == Cls::Regular) {
    Rat kb = -t / 2;
    Rat h = h_poly(l).eval(kb);
    ensure(sgn(h) != 0, "H vanishes at kappa=" + to_string(kb));
    return specialize(ks_poly(l), kb) * Rat(1 / h);
  }
  int k = kbar(t);
  Pair2 ld = *dagger(l, k);
  KPoly combo;
  if (classify(l, k) == Cls::Singular)
    combo = normalized_in_s(ld) * RatFunc(c_cat_poly(ld) - c_cat_poly(l));
  else
    combo = normalized_in_s(l) + normalized_in_s(ld);
  try {
    return specialize(combo, t);
  } catch (const PoleError& e) {
    fail(ErrorCode::Internal, std::string("limit at s=t does not exist: ") + e.what());
  }
}

ScalarLimit bprime_limit(const Pair2& l, int k) {
  require(classify(l, k) == Cls::Singular, l.str() + " is not " + std::to_string(k) + "-singular");
  Pair2 ld = *dagger(l, k);
  RatFunc ratio(c_cat_poly(ld) - c_cat_poly(l), h_poly(ld).compose_linear(Rat(-1, 2), 0));
  Rat lim = ratio.eval(Rat(-2 * k));
  Rat expected = Rat(4 * (l.diff() - k - 1)) / h_poly(ld).derivative().eval(k);
  return {lim, expected};
}

}  // namespace capelli
