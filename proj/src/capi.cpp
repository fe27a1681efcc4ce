#include "capelli/capelli.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <variant>

#include "capelli/deligne.hpp"
#include "capelli/eigenpoly.hpp"
#include "capelli/knop_sahi.hpp"
#include "capelli/render.hpp"
#include "capelli/verify.hpp"

using namespace capelli;

struct capelli_poly {
  std::variant<QPoly, KPoly> body;
};

struct capelli_verify_options {
  VerifyOptions opts;
};

struct capelli_report {
  RunReport report;
};

namespace {

thread_local std::string last_error;

capelli_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return CAPELLI_ERR_INVALID;
    case ErrorCode::Domain: return CAPELLI_ERR_DOMAIN;
    case ErrorCode::Pole: return CAPELLI_ERR_POLE;
    case ErrorCode::Internal: return CAPELLI_ERR_INTERNAL;
    case ErrorCode::Io: return CAPELLI_ERR_IO;
    case ErrorCode::Cap: return CAPELLI_ERR_CAP;
  }
  return CAPELLI_ERR_INTERNAL;
}

// Runs body and converts any exception into a status plus a thread-local message.
template <class Body>
capelli_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return CAPELLI_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CAPELLI_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CAPELLI_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) { require(p != nullptr, std::string(what) + " must not be null"); }

Pair2 pair_arg(const char* text) {
  need(text, "partition");
  return Pair2::parse(text);
}

Rat rat_arg(const char* text) {
  need(text, "rational");
  return parse_rat(text);
}

void k_arg(int k) { require(k >= 0, "k must be nonnegative, got " + std::to_string(k)); }

RenderOptions render_opts(capelli_basis basis, capelli_style style) {
  Basis b = basis == CAPELLI_BASIS_FALLING ? Basis::Falling : Basis::Monomial;
  return style == CAPELLI_STYLE_ASCII ? ascii_options(b) : pretty_options(b);
}

std::string short_pair(const Pair2& p) { return std::to_string(p.l1) + "," + std::to_string(p.l2); }

template <class T>
T* make_handle(T value) {
  return new T(std::move(value));
}

}  // namespace

extern "C" {

const char* capelli_version(void) { return kVersion; }

const char* capelli_status_name(capelli_status status) {
  switch (status) {
    case CAPELLI_OK: return "ok";
    case CAPELLI_ERR_INVALID: return "invalid argument";
    case CAPELLI_ERR_DOMAIN: return "domain error";
    case CAPELLI_ERR_POLE: return "pole";
    case CAPELLI_ERR_INTERNAL: return "internal error";
    case CAPELLI_ERR_IO: return "i/o error";
    case CAPELLI_ERR_CAP: return "cap exceeded";
  }
  return "unknown";
}

const char* capelli_last_error(void) { return last_error.c_str(); }

void capelli_string_free(char* s) { std::free(s); }

void capelli_poly_free(capelli_poly* p) { delete p; }

capelli_status capelli_poly_render(const capelli_poly* p, capelli_basis basis, capelli_style style, char** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    RenderOptions opts = render_opts(basis, style);
    *out = dup(std::visit([&](const auto& f) { return render(f, opts); }, p->body));
  });
}

capelli_status capelli_poly_degree(const capelli_poly* p, int* out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    *out = std::visit([](const auto& f) { return f.total_degree(); }, p->body);
  });
}

capelli_status capelli_poly_equal(const capelli_poly* a, const capelli_poly* b, int* out) {
  return guarded([&] {
    need(a, "poly");
    need(b, "poly");
    need(out, "out");
    *out = a->body == b->body ? 1 : 0;
  });
}

capelli_status capelli_poly_eval(const capelli_poly* p, const char* x, const char* y, capelli_style style,
                                 char** out) {
  return guarded([&] {
    need(p, "poly");
    need(out, "out");
    Rat a = rat_arg(x), b = rat_arg(y);
    if (const auto* q = std::get_if<QPoly>(&p->body)) {
      *out = dup(to_string(q->eval(a, b)));
    } else {
      const KPoly& f = std::get<KPoly>(p->body);
      bool unicode = style == CAPELLI_STYLE_PRETTY;
      *out = dup(f.eval(RatFunc(a), RatFunc(b)).str(unicode ? "κ" : "kappa", unicode));
    }
  });
}

capelli_status capelli_ks(const char* lambda, capelli_poly** out) {
  return guarded([&] {
    need(out, "out");
    *out = make_handle(capelli_poly{ks_poly(pair_arg(lambda))});
  });
}

capelli_status capelli_ks_part(const char* lambda, int k, capelli_part part, capelli_poly** out) {
  return guarded([&] {
    need(out, "out");
    Pair2 l = pair_arg(lambda);
    k_arg(k);
    QPoly f;
    switch (part) {
      case CAPELLI_PART_FULL: f = specialize(ks_poly(l), Rat(k)); break;
      case CAPELLI_PART_REG: f = reg_part(l, k); break;
      case CAPELLI_PART_SING: f = sing_part(l, k); break;
      default: fail(ErrorCode::InvalidArgument, "unknown part " + std::to_string(part));
    }
    *out = make_handle(capelli_poly{f});
  });
}

capelli_status capelli_ks_poles(const char* lambda, int k_max, char** out) {
  return guarded([&] {
    need(out, "out");
    Pair2 l = pair_arg(lambda);
    k_arg(k_max);
    std::string s;
    for (int k : ks_pole_set(l, k_max)) s += (s.empty() ? "" : ",") + std::to_string(k);
    *out = dup(s);
  });
}

capelli_status capelli_classify(const char* lambda, int k, char** out) {
  return guarded([&] {
    need(out, "out");
    Pair2 l = pair_arg(lambda);
    k_arg(k);
    *out = dup(cls_name(classify(l, k)));
  });
}

capelli_status capelli_dagger(const char* lambda, int k, char** out) {
  return guarded([&] {
    need(out, "out");
    Pair2 l = pair_arg(lambda);
    k_arg(k);
    auto d = dagger(l, k);
    *out = dup(d ? short_pair(*d) : "");
  });
}

capelli_status capelli_partitions(int d, char** out) {
  return guarded([&] {
    need(out, "out");
    require(d >= 0, "size must be nonnegative");
    std::string s;
    for (const Pair2& p : enumerate(d, Filter::SizeExactly)) s += (s.empty() ? "" : ";") + short_pair(p);
    *out = dup(s);
  });
}

capelli_status capelli_eig(const char* lambda, int k, capelli_route route, capelli_poly** out) {
  return guarded([&] {
    need(out, "out");
    Pair2 l = pair_arg(lambda);
    k_arg(k);
    EigenPoly e;
    switch (route) {
      case CAPELLI_ROUTE_A: e = eig(l, k, Route::A); break;
      case CAPELLI_ROUTE_B: e = eig(l, k, Route::B); break;
      case CAPELLI_ROUTE_C: e = eig(l, k, Route::C); break;
      case CAPELLI_ROUTE_D: e = eig(l, k, Route::D); break;
      case CAPELLI_ROUTE_ORACLE: e = eig(l, k, Route::Oracle); break;
      case CAPELLI_ROUTE_DEFAULT: e = eig_default(l, k); break;
      default: fail(ErrorCode::InvalidArgument, "unknown route " + std::to_string(route));
    }
    *out = make_handle(capelli_poly{e.body});
  });
}

capelli_status capelli_eig_routes(const char* lambda, int k, char** out) {
  return guarded([&] {
    need(out, "out");
    Pair2 l = pair_arg(lambda);
    k_arg(k);
    std::string s;
    for (Route r : applicable_routes(l, k)) s += (s.empty() ? "" : ",") + std::string(route_name(r));
    *out = dup(s);
  });
}

capelli_status capelli_eig_routes_agree(const char* lambda, int k, int* agree) {
  return guarded([&] {
    need(agree, "agree");
    Pair2 l = pair_arg(lambda);
    k_arg(k);
    QPoly oracle = eig_oracle(l, k).body;
    bool same = true;
    for (Route r : applicable_routes(l, k)) same = same && eig(l, k, r).body == oracle;
    *agree = same ? 1 : 0;
  });
}

capelli_status capelli_restriction_pair(const char* lambda, const char* mu, int k, char** d, char** dprime) {
  return guarded([&] {
    need(d, "d");
    need(dprime, "dprime");
    Pair2 l = pair_arg(lambda), m = pair_arg(mu);
    k_arg(k);
    auto [a, b] = restriction_pair(l, m, k);
    char* first = dup(to_string(a));
    try {
      *dprime = dup(to_string(b));
    } catch (...) {
      std::free(first);
      throw;
    }
    *d = first;
  });
}

capelli_status capelli_deligne_eig(const char* lambda, const char* t, capelli_poly** out) {
  return guarded([&] {
    need(out, "out");
    Pair2 l = pair_arg(lambda);
    *out = make_handle(capelli_poly{cat_eig_formula(l, rat_arg(t))});
  });
}

capelli_status capelli_deligne_blocks(int d, const char* t, capelli_style style, char** out) {
  return guarded([&] {
    need(out, "out");
    require(d >= 0, "size must be nonnegative");
    std::string s = "[";
    for (const Block& b : blocks(d, rat_arg(t))) {
      if (s.size() > 1) s += ", ";
      s += b.lambda.str();
      if (b.mult > 1) s += (style == CAPELLI_STYLE_PRETTY ? "×" : "x") + std::to_string(b.mult);
    }
    *out = dup(s + "]");
  });
}

capelli_status capelli_min_poly(int d, const char* t, capelli_style style, char** out) {
  return guarded([&] {
    need(out, "out");
    require(d >= 0, "size must be nonnegative");
    *out = dup(render(min_poly(d, rat_arg(t)), "c", style == CAPELLI_STYLE_PRETTY));
  });
}

capelli_verify_options* capelli_verify_options_new(void) {
  try {
    return new capelli_verify_options{};
  } catch (...) {
    return nullptr;
  }
}

void capelli_verify_options_free(capelli_verify_options* o) { delete o; }

capelli_status capelli_verify_options_set_suite(capelli_verify_options* o, const char* suite) {
  return guarded([&] {
    need(o, "options");
    need(suite, "suite");
    std::string s = suite;
    bool known = s == "all";
    for (const auto& n : suite_names()) known = known || n == s;
    require(known, "unknown suite '" + s + "'");
    o->opts.suite = s;
  });
}

capelli_status capelli_verify_options_set_bound(capelli_verify_options* o, const char* name, int value) {
  return guarded([&] {
    need(o, "options");
    need(name, "name");
    std::string n = name;
    require(value >= 0, n + " must be nonnegative");
    VerifyOptions& v = o->opts;
    if (n == "k_max") v.k_max = value;
    else if (n == "size_max") v.size_max = value;
    else if (n == "d_max") v.d_max = value;
    else if (n == "N_max") v.N_max = value;
    else if (n == "a_max") v.a_max = value;
    else if (n == "bcd_max") v.bcd_max = value;
    else fail(ErrorCode::InvalidArgument, "unknown bound '" + n + "'");
  });
}

capelli_status capelli_verify_options_set_t_list(capelli_verify_options* o, const char* list) {
  return guarded([&] {
    need(o, "options");
    need(list, "list");
    std::vector<Rat> ts;
    std::string s = list;
    size_t start = 0;
    while (start <= s.size()) {
      size_t end = s.find(',', start);
      if (end == std::string::npos) end = s.size();
      ts.push_back(parse_rat(s.substr(start, end - start)));
      start = end + 1;
    }
    o->opts.t_list = ts;
  });
}

capelli_status capelli_verify_options_set_jobs(capelli_verify_options* o, unsigned jobs) {
  return guarded([&] {
    need(o, "options");
    o->opts.jobs = jobs;
  });
}

capelli_status capelli_verify_options_set_cap(capelli_verify_options* o, const char* name, int value) {
  return guarded([&] {
    need(o, "options");
    need(name, "name");
    std::string n = name;
    require(value >= 0, "cap." + n + " must be nonnegative");
    Caps& c = o->opts.caps;
    if (n == "size") c.size = value;
    else if (n == "N") c.N = value;
    else if (n == "k") c.k = value;
    else if (n == "dougall") c.dougall = value;
    else fail(ErrorCode::InvalidArgument, "unknown cap '" + n + "'");
  });
}

const char* capelli_verify_suites(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : suite_names()) s += n + " ";
    return s + "all";
  }();
  return names.c_str();
}

capelli_status capelli_verify(const capelli_verify_options* o, capelli_report** out) {
  return guarded([&] {
    need(o, "options");
    need(out, "out");
    *out = make_handle(capelli_report{run_verify(o->opts)});
  });
}

void capelli_report_free(capelli_report* r) { delete r; }

capelli_status capelli_report_counts(const capelli_report* r, size_t* total, size_t* passed, size_t* failed) {
  return guarded([&] {
    need(r, "report");
    if (total) *total = r->report.total();
    if (passed) *passed = r->report.passed();
    if (failed) *failed = r->report.failed();
  });
}

capelli_status capelli_report_format_as(const capelli_report* r, capelli_report_format format, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    switch (format) {
      case CAPELLI_REPORT_TEXT: *out = dup(to_text(r->report)); break;
      case CAPELLI_REPORT_JSON: *out = dup(to_json(r->report)); break;
      case CAPELLI_REPORT_CSV: *out = dup(to_csv(r->report)); break;
      default: fail(ErrorCode::InvalidArgument, "unknown report format " + std::to_string(format));
    }
  });
}

}  // extern "C"
