#include "capelli/verify.hpp"

#include <map>

#include "capelli/deligne.hpp"
#include "capelli/eigenpoly.hpp"
#include "capelli/error.hpp"
#include "capelli/hypergeom.hpp"
#include "capelli/identities.hpp"
#include "capelli/render.hpp"

namespace capelli {

namespace {

using Task = std::pair<std::string, CheckTask>;
using Params = std::vector<std::pair<std::string, std::string>>;

std::string str(int v) { return std::to_string(v); }
std::string ascii(const QPoly& f) { return render(f, ascii_options()); }
std::string ascii(const KPoly& f) { return render(f, ascii_options()); }

CheckResult result(std::string name, Params params, bool pass, std::string lhs, std::string rhs) {
  return {std::move(name), std::move(params), pass, std::move(lhs), std::move(rhs)};
}

// ---- knop-sahi ----

CheckResult ks_characterization(const Pair2& l) {
  KPoly p = ks_poly(l);
  Params params{{"lambda", l.str()}};
  if (!p.is_symmetric()) return result("ks_characterization", params, false, ascii(p), "symmetric");
  if (p.total_degree() != l.size())
    return result("ks_characterization", params, false, "degree " + str(p.total_degree()), "degree " + str(l.size()));
  RatFunc lead = to_falling_coeff(p, l.l1, l.l2);
  if (!(lead == RatFunc(1)))
    return result("ks_characterization", params, false, "leading " + lead.str("kappa"), "leading 1");
  RatFunc kappa = RatFunc::var();
  for (const Pair2& m : enumerate(l.size())) {
    RatFunc v = p.eval(RatFunc(Rat(m.l1 - 1)) - kappa, RatFunc(Rat(m.l2)));
    RatFunc want = m == l ? RatFunc(h_poly(l)) : RatFunc();
    if (!(v == want)) {
      params.push_back({"mu", m.str()});
      return result("ks_characterization", params, false, v.str("kappa"), want.str("kappa"));
    }
  }
  return result("ks_characterization", params, true, "P(mu1-kappa-1,mu2)", "H(kappa) at lambda, 0 elsewhere");
}

CheckResult ks_specialized(const Pair2& l, int k_max) {
  Params params{{"lambda", l.str()}, {"k_max", str(k_max)}};
  for (int k = 0; k <= k_max; ++k) {
    if (classify(l, k) == Cls::Singular) continue;
    QPoly p = specialize(ks_poly(l), k);
    if (!(p == reg_part(l, k))) {
      params.push_back({"k", str(k)});
      return result("ks_specialized", params, false, ascii(p), ascii(reg_part(l, k)));
    }
    for (const Pair2& m : enumerate(l.size())) {
      Rat v = p.eval(Rat(m.l1 - k - 1), Rat(m.l2));
      Rat want = m == l ? h_poly(l).eval(k) : Rat(0);
      if (v != want) {
        params.push_back({"k", str(k)});
        params.push_back({"mu", m.str()});
        return result("ks_specialized", params, false, to_string(v), to_string(want));
      }
    }
  }
  return result("ks_specialized", params, true, "P^k(mu1-k-1,mu2)", "H(k) at lambda, 0 elsewhere");
}

CheckResult ks_poles(const Pair2& l, int k_max) {
  auto got = ks_pole_set(l, k_max);
  std::vector<int> want;
  for (int k = 0; k <= k_max; ++k)
    if (classify(l, k) == Cls::Singular) want.push_back(k);
  auto fmt = [](const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  return result("ks_pole_set", {{"lambda", l.str()}, {"k_max", str(k_max)}}, got == want, fmt(got), fmt(want));
}

std::vector<CheckResult> ks_singular_checks(const Pair2& l, int k) {
  std::vector<CheckResult> out;
  Params params{{"k", str(k)}, {"lambda", l.str()}};
  Pair2 ld = *dagger(l, k);
  RCoeff r = r_coeff_both(l, k);
  QPoly sing = sing_part(l, k);
  QPoly want = reg_part(ld, k) * r.value;
  bool reg_is_eval = reg_part(ld, k) == specialize(ks_poly(ld), k);
  out.push_back(result("sing_part", params, sing == want && reg_is_eval && r.from_h == r.closed_form,
                       ascii(sing), ascii(want)));
  QRoutes q = q_poly_routes(l, k);
  out.push_back(result("q_routes", params, q.by_derivative == q.by_limit, ascii(q.by_derivative), ascii(q.by_limit)));
  auto [t1, t2] = tcheck_values(l, k);
  Params tp = params;
  tp.push_back({"t1", to_string(t1)});
  tp.push_back({"t2", to_string(t2)});
  for (const Pair2& m : enumerate(l.size())) {
    Rat v = gen_eval(q.by_derivative, m, k);
    Rat w = m == ld ? t1 : (m == l ? t2 : Rat(0));
    if (v != w) {
      tp.push_back({"mu", m.str()});
      out.push_back(result("q_generalized_values", tp, false, to_string(v), to_string(w)));
      return out;
    }
  }
  out.push_back(result("q_generalized_values", tp, true, "ev(Q,mu)", "t1 at dagger, t2 at lambda, 0 elsewhere"));
  return out;
}

// ---- capelli ----

std::vector<CheckResult> eig_checks(const Pair2& l, int k) {
  std::vector<CheckResult> out;
  Params params{{"k", str(k)}, {"lambda", l.str()}, {"class", cls_name(classify(l, k))}};
  QPoly oracle = eig_oracle(l, k).body;
  QPoly f;
  for (Route r : applicable_routes(l, k)) {
    EigenPoly e = eig(l, k, r);
    if (f.is_zero()) f = e.body;
    Params rp = params;
    rp.push_back({"route", route_name(r)});
    out.push_back(result("eig_route", rp, e.body == oracle, ascii(e.body), ascii(oracle)));
  }
  bool delta = true;
  std::string witness;
  for (const Pair2& m : enumerate(l.size())) {
    Rat v = gen_eval(f, m, k);
    if (v != (m == l ? 1 : 0)) {
      delta = false;
      witness = m.str() + " -> " + to_string(v);
      break;
    }
  }
  out.push_back(result("eig_delta", params, delta, delta ? "ev(f,mu)" : witness, "delta(lambda,mu)"));
  out.push_back(result("eig_degree", params, f.total_degree() == l.size() && f.is_symmetric(),
                       str(f.total_degree()), str(l.size())));
  bool nil_ok = true, sym_ok = true;
  std::string nil_witness = "", sym_witness = "";
  bool singular = classify(l, k) == Cls::Singular;
  for (const Pair2& m : enumerate(l.size())) {
    Cls cm = classify(m, k);
    if (cm == Cls::Singular) continue;
    auto [d, dp] = restriction_pair(l, m, k);
    // the nilpotent coefficient only acts on quasiregular blocks; N is zero on a regular one
    Rat want_dp = singular && m == *dagger(l, k) ? 1 : 0;
    Rat want_d = m == l ? 1 : 0;
    bool dp_ok = cm == Cls::Regular || dp == want_dp;
    if ((!dp_ok || d != want_d) && nil_ok) {
      nil_ok = false;
      nil_witness = m.str() + " -> (" + to_string(d) + "," + to_string(dp) + ")";
    }
    if (cm == Cls::Quasiregular && sym_ok) {
      Pair2 md = *dagger(m, k);
      Rat a = f.eval(Rat(m.l1 - k - 1), Rat(m.l2)), b = f.eval(Rat(md.l1 - k - 1), Rat(md.l2));
      if (a != b) {
        sym_ok = false;
        sym_witness = m.str() + ": " + to_string(a) + " vs " + to_string(b);
      }
    }
  }
  out.push_back(result("restriction_pairs", params, nil_ok, nil_ok ? "(d,d')" : nil_witness,
                       "d=delta; d'=0 on quasiregular blocks except 1 on the dagger of a singular lambda"));
  out.push_back(result("symmetry_coincidence", params, sym_ok, sym_ok ? "f(mu)" : sym_witness, "f(mu dagger)"));
  return out;
}

// ---- deligne ----

std::string dual_str(const DualScalar& d) { return "(" + to_string(d.value) + "," + to_string(d.nil) + ")"; }

CheckResult vanishing_check(const Pair2& l, const Rat& t) {
  Params params{{"t", to_string(t)}, {"lambda", l.str()}};
  OpPoly D = d_op(l, t);
  bool special = is_special_dimension(t);
  std::optional<Pair2> partner;
  if (special && classify(l, kbar(t)) == Cls::Singular) partner = dagger(l, kbar(t));
  for (int d = 0; d <= l.size(); ++d) {
    for (const Block& b : blocks(d, t)) {
      DualScalar got = block_eval(D, b, t);
      DualScalar want{0, 0};
      if (b.lambda == l) want = {1, 0};
      if (partner && b.lambda == *partner) want = {0, 1};
      if (!(got == want)) {
        params.push_back({"block", b.lambda.str()});
        return result("dual_vanishing", params, false, dual_str(got), dual_str(want));
      }
    }
  }
  return result("dual_vanishing", params, true, "D on blocks of size <= |lambda|",
                partner ? "(0,1) on the dagger block, 0 elsewhere" : "(1,0) on lambda, 0 elsewhere");
}

void check_bound(const char* what, int v, int cap) {
  require(v >= 0, std::string(what) + " must be non-negative");
  if (v > cap)
    fail(ErrorCode::Cap, std::string(what) + "=" + std::to_string(v) + " exceeds the configured cap " +
                             std::to_string(cap));
}

}  // namespace

std::vector<CheckResult> suite_knop_sahi(int k_max, int size_max, unsigned jobs) {
  std::vector<Task> tasks;
  for (const Pair2& l : enumerate(size_max)) {
    tasks.push_back({"ks_characterization", [=] {
                       std::vector<CheckResult> out{ks_characterization(l), ks_specialized(l, k_max),
                                                    ks_poles(l, k_max)};
                       for (int k = 0; k <= k_max; ++k)
                         if (classify(l, k) == Cls::Singular)
                           for (auto& c : ks_singular_checks(l, k)) out.push_back(std::move(c));
                       return out;
                     }});
  }
  return run_tasks(tasks, jobs);
}

std::vector<CheckResult> suite_capelli(int k_max, int size_max, unsigned jobs) {
  std::vector<Task> tasks;
  for (int k = 0; k <= k_max; ++k) {
    tasks.push_back({"r_basis", [=] {
                       return std::vector<CheckResult>{result("r_basis_unitriangular",
                                                              {{"k", str(k)}, {"d", str(size_max)}},
                                                              r_basis_unitriangular(k, size_max),
                                                              "R basis in symmetric falling basis",
                                                              "unitriangular")};
                     }});
    for (const Pair2& l : enumerate(size_max)) tasks.push_back({"eig", [=] { return eig_checks(l, k); }});
  }
  return run_tasks(tasks, jobs);
}

std::vector<CheckResult> suite_identity_e(int N_max, unsigned jobs) {
  std::vector<Task> tasks;
  for (int N = 0; N <= N_max; ++N)
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j)
        tasks.push_back({"identity_e", [=] { return std::vector<CheckResult>{theorem_e_check(i, j, N)}; }});
  return run_tasks(tasks, jobs);
}

std::vector<CheckResult> suite_logderiv(int N_max, unsigned jobs) {
  std::vector<Task> tasks;
  for (int N = 0; N <= N_max; ++N)
    tasks.push_back({"logderiv", [=] { return std::vector<CheckResult>{logderiv_check(N)}; }});
  return run_tasks(tasks, jobs);
}

std::vector<CheckResult> suite_chain(int N_max, unsigned jobs) {
  std::vector<Task> tasks;
  for (int N = 0; N <= N_max; ++N)
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j)
        tasks.push_back({"psi_chain", [=] { return std::vector<CheckResult>{psi_chain_check(i, j, N)}; }});
  for (int j = 0; j <= N_max; ++j)
    for (int ell = 0; j + ell <= N_max; ++ell)
      tasks.push_back({"f_closed_form", [=] { return std::vector<CheckResult>{f_closed_form_check(j, ell)}; }});
  for (int j = 0; j <= N_max; ++j)
    for (int s = 0; j + s <= N_max; ++s)
      tasks.push_back({"h_function", [=] { return std::vector<CheckResult>{h_function_check(j, s)}; }});
  return run_tasks(tasks, jobs);
}

std::vector<CheckResult> suite_dougall(int a_max, int bcd_max, unsigned jobs) {
  std::vector<Task> tasks;
  for (int a = 1; a <= a_max; ++a)
    tasks.push_back({"dougall", [=] {
                       std::vector<CheckResult> out;
                       for (int b = 0; b <= bcd_max; ++b)
                         for (int c = 0; c <= bcd_max; ++c)
                           for (int d = 0; d <= bcd_max; ++d) {
                             DougallResult r = dougall_check(a, b, c, d);
                             out.push_back(result("dougall",
                                                  {{"a", str(a)}, {"b", str(b)}, {"c", str(c)}, {"d", str(d)}},
                                                  r.equal, to_string(r.lhs), to_string(r.rhs)));
                           }
                       return out;
                     }});
  return run_tasks(tasks, jobs);
}

std::vector<CheckResult> suite_deligne(int k_max, int size_max, int d_max, const std::vector<Rat>& t_list,
                                       unsigned jobs) {
  std::vector<Task> tasks;
  for (const Rat& t : t_list) {
    tasks.push_back({"min_poly", [=] {
                       std::vector<CheckResult> out;
                       for (int d = 0; d <= d_max; ++d) {
                         UniPoly p = min_poly(d, t), q = min_poly_product(d, t);
                         out.push_back(result("min_poly", {{"t", to_string(t)}, {"d", str(d)}},
                                              p == q && min_poly_is_minimal(d, t), render(p, "x", false),
                                              render(q, "x", false)));
                       }
                       return out;
                     }});
    for (const Pair2& l : enumerate(size_max))
      tasks.push_back({"cat_eig", [=] {
                         QPoly a = cat_eig_from_blocks(l, t), b = cat_eig_formula(l, t);
                         return std::vector<CheckResult>{
                             result("cat_eig", {{"t", to_string(t)}, {"lambda", l.str()}}, a == b, ascii(a), ascii(b)),
                             vanishing_check(l, t)};
                       }});
  }
  for (int k = 0; k <= k_max; ++k)
    for (const Pair2& l : enumerate(size_max))
      tasks.push_back({"super_cat", [=] {
                         QPoly a = cat_eig_formula(l, Rat(-2 * k)), b = eig_default(l, k).body;
                         return std::vector<CheckResult>{
                             result("super_cat", {{"k", str(k)}, {"lambda", l.str()}}, a == b, ascii(a), ascii(b))};
                       }});
  for (int k = 0; k <= k_max; ++k)
    tasks.push_back({"bprime_limit", [=] {
                       std::vector<CheckResult> out;
                       for (const Pair2& l : enumerate(d_max)) {
                         if (classify(l, k) != Cls::Singular) continue;
                         ScalarLimit s = bprime_limit(l, k);
                         out.push_back(result("bprime_limit", {{"k", str(k)}, {"lambda", l.str()}},
                                              s.limit == s.expected, to_string(s.limit), to_string(s.expected)));
                       }
                       return out;
                     }});
  return run_tasks(tasks, jobs);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"knop-sahi", "capelli", "identity-e", "logderiv",
                                              "chain",     "dougall", "deligne"};
  return names;
}

std::vector<Rat> default_t_list() {
  std::vector<Rat> t;
  for (int v = -6; v <= 7; ++v) t.push_back(v);
  t.push_back(Rat(1, 2));
  t.push_back(Rat(-5, 3));
  return t;
}

RunReport run_verify(const VerifyOptions& o) {
  const auto& names = suite_names();
  bool all = o.suite == "all";
  if (!all && std::find(names.begin(), names.end(), o.suite) == names.end())
    fail(ErrorCode::InvalidArgument, "unknown suite '" + o.suite + "'");

  RunReport rep;
  rep.command = "verify " + o.suite;
  auto use = [&](const std::string& s) { return all || o.suite == s; };
  auto pick = [](const std::optional<int>& v, int def) { return v.value_or(def); };

  // validate every requested bound before running anything
  struct Plan {
    std::string suite;
    std::map<std::string, int> b;
  };
  std::vector<Plan> plans;
  if (use("knop-sahi")) plans.push_back({"knop-sahi", {{"k_max", pick(o.k_max, 6)}, {"size_max", pick(o.size_max, 10)}}});
  if (use("capelli")) plans.push_back({"capelli", {{"k_max", pick(o.k_max, 3)}, {"size_max", pick(o.size_max, 8)}}});
  if (use("identity-e")) plans.push_back({"identity-e", {{"N_max", pick(o.N_max, 7)}}});
  if (use("logderiv")) plans.push_back({"logderiv", {{"N_max", pick(o.N_max, 10)}}});
  if (use("chain")) plans.push_back({"chain", {{"N_max", pick(o.N_max, 5)}}});
  if (use("dougall")) plans.push_back({"dougall", {{"a_max", pick(o.a_max, 5)}, {"bcd_max", pick(o.bcd_max, 4)}}});
  if (use("deligne"))
    plans.push_back({"deligne", {{"k_max", pick(o.k_max, 3)}, {"size_max", pick(o.size_max, 6)}, {"d_max", pick(o.d_max, 8)}}});
  for (const Plan& p : plans) {
    for (const auto& [key, v] : p.b) {
      int cap = key == "k_max" ? o.caps.k
                : key == "N_max" ? o.caps.N
                : (key == "a_max" || key == "bcd_max") ? o.caps.dougall
                                                         : o.caps.size;
      check_bound(key.c_str(), v, cap);
    }
  }
  std::vector<Rat> t_list = o.t_list.value_or(default_t_list());

  for (const Plan& p : plans) {
    for (const auto& [key, v] : p.b) rep.params.push_back({p.suite + "." + key, std::to_string(v)});
    if (p.suite == "deligne") {
      std::string ts;
      for (const Rat& t : t_list) ts += (ts.empty() ? "" : ",") + to_string(t);
      rep.params.push_back({"deligne.t_list", ts});
    }
    std::vector<CheckResult> part;
    const auto& b = p.b;
    if (p.suite == "knop-sahi") part = suite_knop_sahi(b.at("k_max"), b.at("size_max"), o.jobs);
    if (p.suite == "capelli") part = suite_capelli(b.at("k_max"), b.at("size_max"), o.jobs);
    if (p.suite == "identity-e") part = suite_identity_e(b.at("N_max"), o.jobs);
    if (p.suite == "logderiv") part = suite_logderiv(b.at("N_max"), o.jobs);
    if (p.suite == "chain") part = suite_chain(b.at("N_max"), o.jobs);
    if (p.suite == "dougall") part = suite_dougall(b.at("a_max"), b.at("bcd_max"), o.jobs);
    if (p.suite == "deligne") part = suite_deligne(b.at("k_max"), b.at("size_max"), b.at("d_max"), t_list, o.jobs);
    for (auto& c : part) rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace capelli
