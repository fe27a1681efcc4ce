// Command-line front end. Talks to the library only through capelli.h.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "capelli/capelli.h"
#include "json.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string message;
};

[[noreturn]] void usage_error(const std::string& msg) { throw CliError{msg}; }

void check(capelli_status s) {
  if (s != CAPELLI_OK) usage_error(capelli_last_error());
}

struct OwnedString {
  char* p = nullptr;
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { capelli_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using PolyPtr = std::unique_ptr<capelli_poly, decltype(&capelli_poly_free)>;

PolyPtr take(capelli_poly* p) { return PolyPtr(p, &capelli_poly_free); }

std::string render(const capelli_poly* p, capelli_basis basis, capelli_style style) {
  OwnedString s;
  check(capelli_poly_render(p, basis, style, &s.p));
  return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Caps, default k and worker count. Later sources override earlier ones:
// built-in defaults, config file, CAPELLI_* environment variables, command-line flags.
struct Settings {
  std::map<std::string, int> values = {
      {"cap.size", 14}, {"cap.N", 10}, {"cap.k", 6}, {"cap.dougall", 12}, {"jobs", 0}, {"k", 0}};

  void set(const std::string& key, const std::string& text, const std::string& origin) {
    auto it = values.find(key);
    if (it == values.end()) usage_error(origin + ": unknown setting '" + key + "'");
    int v = 0;
    try {
      size_t used = 0;
      v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      usage_error(origin + ": '" + key + "' needs an integer, got '" + text + "'");
    }
    if (v < 0) usage_error(origin + ": '" + key + "' must be nonnegative");
    it->second = v;
  }

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) usage_error("cannot read config file '" + path + "'");
    std::string line;
    for (int n = 1; std::getline(in, line); ++n) {
      line = trim(line.substr(0, line.find('#')));
      if (line.empty()) continue;
      size_t eq = line.find('=');
      std::string origin = path + ":" + std::to_string(n);
      if (eq == std::string::npos) usage_error(origin + ": expected key=value");
      set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), origin);
    }
  }

  // cap.size -> CAPELLI_CAP_SIZE
  void load_env() {
    for (auto& [key, v] : values) {
      std::string name = "CAPELLI_";
      for (char ch : key) name += ch == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      if (const char* text = std::getenv(name.c_str())) set(key, text, name);
    }
  }

  int operator[](const std::string& key) const { return values.at(key); }
};

struct Global {
  std::string format = "pretty";
  std::string out;
  std::optional<int> jobs;
  std::string config;
};

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f || !(f << text) || !(f.flush())) {
    std::cerr << "error: cannot write '" << g.out << "'\n";
    std::exit(kExitUsage);
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

int partition_size(const std::string& lambda) {
  size_t comma = lambda.find(',');
  if (comma == std::string::npos) usage_error("malformed partition '" + lambda + "', expected a,b");
  try {
    return std::stoi(lambda.substr(0, comma)) + std::stoi(lambda.substr(comma + 1));
  } catch (const std::exception&) {
    usage_error("malformed partition '" + lambda + "', expected a,b");
  }
}

void check_caps(const Settings& s, const std::string& lambda, std::optional<int> k) {
  int size = partition_size(lambda);
  if (size > s["cap.size"])
    usage_error("|λ|=" + std::to_string(size) + " exceeds cap.size=" + std::to_string(s["cap.size"]));
  if (k && *k > s["cap.k"]) usage_error("k=" + std::to_string(*k) + " exceeds cap.k=" + std::to_string(s["cap.k"]));
}

std::vector<capelli_basis> bases(const std::string& b) {
  if (b == "monomial") return {CAPELLI_BASIS_MONOMIAL};
  if (b == "falling") return {CAPELLI_BASIS_FALLING};
  return {CAPELLI_BASIS_MONOMIAL, CAPELLI_BASIS_FALLING};
}

const char* basis_name(capelli_basis b) { return b == CAPELLI_BASIS_FALLING ? "falling" : "monomial"; }

// A labelled polynomial, printed as "label: body" unless it is the only line.
struct Row {
  std::string label;
  const capelli_poly* poly;
};

std::string poly_lines(const std::vector<Row>& rows, const std::string& basis) {
  std::vector<std::pair<std::string, std::string>> lines;
  auto bs = bases(basis);
  for (const Row& r : rows)
    for (capelli_basis b : bs) {
      std::string label = r.label;
      if (bs.size() > 1) label += label.empty() ? basis_name(b) : std::string(" ") + basis_name(b);
      lines.push_back({label, render(r.poly, b, CAPELLI_STYLE_PRETTY)});
    }
  std::string out;
  for (const auto& [label, body] : lines)
    out += (lines.size() > 1 && !label.empty() ? label + ": " : "") + body + "\n";
  return out;
}

nlohmann::ordered_json poly_json(const capelli_poly* p, const std::string& basis) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (capelli_basis b : bases(basis)) j[basis_name(b)] = render(p, b, CAPELLI_STYLE_ASCII);
  return j;
}

std::string poly_csv(const std::vector<std::pair<std::vector<std::string>, const capelli_poly*>>& rows,
                     const std::string& header, const std::string& basis) {
  std::string out = header + ",basis,poly\n";
  for (const auto& [fields, p] : rows)
    for (capelli_basis b : bases(basis)) {
      for (const auto& f : fields) out += csv_field(f) + ",";
      out += std::string(basis_name(b)) + "," + csv_field(render(p, b, CAPELLI_STYLE_ASCII)) + "\n";
    }
  return out;
}

struct KsArgs {
  std::string lambda;
  std::optional<int> k;
  std::string part = "both";
  std::string basis = "monomial";
};

int cmd_ks(const Global& g, const Settings& s, const KsArgs& a) {
  check_caps(s, a.lambda, a.k);
  std::vector<std::pair<std::string, PolyPtr>> polys;
  if (!a.k) {
    if (a.part != "both") usage_error("--part needs --k");
    capelli_poly* p = nullptr;
    check(capelli_ks(a.lambda.c_str(), &p));
    polys.emplace_back("", take(p));
  } else {
    std::vector<std::pair<std::string, capelli_part>> parts;
    if (a.part == "full") parts = {{"full", CAPELLI_PART_FULL}};
    else if (a.part == "reg") parts = {{"reg", CAPELLI_PART_REG}};
    else if (a.part == "sing") parts = {{"sing", CAPELLI_PART_SING}};
    else parts = {{"reg", CAPELLI_PART_REG}, {"sing", CAPELLI_PART_SING}};
    for (const auto& [name, part] : parts) {
      capelli_poly* p = nullptr;
      check(capelli_ks_part(a.lambda.c_str(), *a.k, part, &p));
      polys.emplace_back(name, take(p));
    }
  }
  std::string kstr = a.k ? std::to_string(*a.k) : "";
  std::string part_name = a.k ? "" : "generic";
  if (g.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "ks";
    j["lambda"] = a.lambda;
    j["k"] = a.k ? nlohmann::ordered_json(*a.k) : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json parts = nlohmann::ordered_json::object();
    for (const auto& [name, p] : polys) parts[name.empty() ? part_name : name] = poly_json(p.get(), a.basis);
    j["parts"] = parts;
    emit(g, j.dump(2) + "\n");
  } else if (g.format == "csv") {
    std::vector<std::pair<std::vector<std::string>, const capelli_poly*>> rows;
    for (const auto& [name, p] : polys) rows.push_back({{a.lambda, kstr, name.empty() ? part_name : name}, p.get()});
    emit(g, poly_csv(rows, "lambda,k,part", a.basis));
  } else {
    std::vector<Row> rows;
    for (const auto& [name, p] : polys) rows.push_back({name, p.get()});
    emit(g, poly_lines(rows, a.basis));
  }
  return kExitPass;
}

struct EigArgs {
  std::string lambda;
  std::optional<int> k;
  std::string route = "default";
  std::string basis = "monomial";
};

capelli_route route_of(const std::string& r) {
  if (r == "a") return CAPELLI_ROUTE_A;
  if (r == "b") return CAPELLI_ROUTE_B;
  if (r == "c") return CAPELLI_ROUTE_C;
  if (r == "d") return CAPELLI_ROUTE_D;
  if (r == "oracle") return CAPELLI_ROUTE_ORACLE;
  return CAPELLI_ROUTE_DEFAULT;
}

int cmd_eig(const Global& g, const Settings& s, const EigArgs& a) {
  int k = a.k.value_or(s["k"]);
  check_caps(s, a.lambda, k);
  std::vector<std::string> names = {a.route};
  if (a.route == "all") {
    OwnedString routes;
    check(capelli_eig_routes(a.lambda.c_str(), k, &routes.p));
    names = split(routes.str(), ',');
    names.push_back("oracle");
  }
  std::vector<PolyPtr> polys;
  for (const auto& r : names) {
    capelli_poly* p = nullptr;
    check(capelli_eig(a.lambda.c_str(), k, route_of(r), &p));
    polys.push_back(take(p));
  }
  // with --route all the oracle is the reference every closed form is compared against
  const capelli_poly* ref = polys.back().get();
  bool agree = true;
  for (const auto& p : polys) {
    int same = 0;
    check(capelli_poly_equal(p.get(), ref, &same));
    agree = agree && same;
  }
  bool all = a.route == "all";
  if (g.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "eig";
    j["lambda"] = a.lambda;
    j["k"] = k;
    j["route"] = a.route;
    j["poly"] = poly_json(ref, a.basis);
    if (all) {
      j["routes"] = names;
      j["routes_agree"] = agree;
    }
    emit(g, j.dump(2) + "\n");
  } else if (g.format == "csv") {
    std::vector<std::pair<std::vector<std::string>, const capelli_poly*>> rows;
    for (size_t i = 0; i < names.size(); ++i) rows.push_back({{a.lambda, std::to_string(k), names[i]}, polys[i].get()});
    emit(g, poly_csv(rows, "lambda,k,route", a.basis));
  } else {
    std::string out = poly_lines({{"", ref}}, a.basis);
    if (all) out += std::string("routes agree: ") + (agree ? "yes" : "no") + "\n";
    emit(g, out);
  }
  return agree ? kExitPass : kExitFail;
}

struct DeligneArgs {
  std::string lambda;
  std::string t;
  std::string basis = "monomial";
};

int cmd_deligne(const Global& g, const Settings& s, const DeligneArgs& a) {
  check_caps(s, a.lambda, std::nullopt);
  capelli_poly* raw = nullptr;
  check(capelli_deligne_eig(a.lambda.c_str(), a.t.c_str(), &raw));
  PolyPtr p = take(raw);
  int d = partition_size(a.lambda);
  auto blocks = [&](int size, capelli_style style) {
    OwnedString b;
    check(capelli_deligne_blocks(size, a.t.c_str(), style, &b.p));
    return b.str();
  };
  auto min_poly = [&](capelli_style style) {
    OwnedString m;
    check(capelli_min_poly(d, a.t.c_str(), style, &m.p));
    return m.str();
  };
  if (g.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "deligne";
    j["lambda"] = a.lambda;
    j["t"] = a.t;
    j["poly"] = poly_json(p.get(), a.basis);
    nlohmann::ordered_json bl = nlohmann::ordered_json::object();
    for (int i = 0; i <= d; ++i) bl[std::to_string(i)] = blocks(i, CAPELLI_STYLE_ASCII);
    j["blocks"] = bl;
    j["min_poly"] = min_poly(CAPELLI_STYLE_ASCII);
    emit(g, j.dump(2) + "\n");
  } else if (g.format == "csv") {
    emit(g, poly_csv({{{a.lambda, a.t}, p.get()}}, "lambda,t", a.basis));
  } else {
    std::string out = poly_lines({{"", p.get()}}, a.basis);
    for (int i = 0; i <= d; ++i) out += "blocks of size " + std::to_string(i) + ": " + blocks(i, CAPELLI_STYLE_PRETTY) + "\n";
    out += "min_poly(" + std::to_string(d) + "): " + min_poly(CAPELLI_STYLE_PRETTY) + "\n";
    emit(g, out);
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string suite = "all";
  std::map<std::string, std::optional<int>> bounds = {{"k_max", {}}, {"size_max", {}}, {"d_max", {}},
                                                      {"N_max", {}}, {"a_max", {}},    {"bcd_max", {}}};
  std::string t_list;
};

int cmd_verify(const Global& g, const Settings& s, const VerifyArgs& a) {
  std::unique_ptr<capelli_verify_options, decltype(&capelli_verify_options_free)> o(capelli_verify_options_new(),
                                                                                    &capelli_verify_options_free);
  if (!o) usage_error("out of memory");
  check(capelli_verify_options_set_suite(o.get(), a.suite.c_str()));
  for (const auto& [name, v] : a.bounds)
    if (v) check(capelli_verify_options_set_bound(o.get(), name.c_str(), *v));
  if (!a.t_list.empty()) check(capelli_verify_options_set_t_list(o.get(), a.t_list.c_str()));
  for (const char* cap : {"size", "N", "k", "dougall"})
    check(capelli_verify_options_set_cap(o.get(), cap, s[std::string("cap.") + cap]));
  check(capelli_verify_options_set_jobs(o.get(), static_cast<unsigned>(g.jobs.value_or(s["jobs"]))));
  capelli_report* raw = nullptr;
  check(capelli_verify(o.get(), &raw));
  std::unique_ptr<capelli_report, decltype(&capelli_report_free)> r(raw, &capelli_report_free);
  capelli_report_format fmt = g.format == "json"  ? CAPELLI_REPORT_JSON
                              : g.format == "csv" ? CAPELLI_REPORT_CSV
                                                  : CAPELLI_REPORT_TEXT;
  OwnedString text;
  check(capelli_report_format_as(r.get(), fmt, &text.p));
  emit(g, text.str());
  size_t failed = 0;
  check(capelli_report_counts(r.get(), nullptr, nullptr, &failed));
  return failed == 0 ? kExitPass : kExitFail;
}

struct TableArgs {
  std::string lambda;
  std::optional<int> k;
  std::optional<int> size_max;
};

int cmd_table(const Global& g, const Settings& s, const TableArgs& a) {
  int k = a.k.value_or(s["k"]);
  check_caps(s, a.lambda, k);
  int d = a.size_max.value_or(partition_size(a.lambda));
  if (d > s["cap.size"]) usage_error("--size-max exceeds cap.size=" + std::to_string(s["cap.size"]));
  struct Line {
    std::string mu, cls, d, dprime;
  };
  std::vector<Line> lines;
  for (int size = 0; size <= d; ++size) {
    OwnedString parts;
    check(capelli_partitions(size, &parts.p));
    for (const auto& mu : split(parts.str(), ';')) {
      OwnedString cls;
      check(capelli_classify(mu.c_str(), k, &cls.p));
      // singular partitions index no block of their own
      if (cls.str() == "singular") continue;
      OwnedString dv, dp;
      check(capelli_restriction_pair(a.lambda.c_str(), mu.c_str(), k, &dv.p, &dp.p));
      // a regular block carries no nilpotent part, so d' has no meaning there
      lines.push_back({mu, cls.str(), dv.str(), cls.str() == "regular" ? "" : dp.str()});
    }
  }
  if (g.format == "json") {
    nlohmann::ordered_json j;
    j["command"] = "table";
    j["lambda"] = a.lambda;
    j["k"] = k;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& l : lines) rows.push_back({{"mu", l.mu}, {"class", l.cls}, {"d", l.d},
                      {"dprime", l.dprime.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(l.dprime)}});
    j["rows"] = rows;
    emit(g, j.dump(2) + "\n");
  } else if (g.format == "csv") {
    std::string out = "mu,class,d,dprime\n";
    for (const auto& l : lines) out += csv_field(l.mu) + "," + l.cls + "," + l.d + "," + l.dprime + "\n";
    emit(g, out);
  } else {
    std::vector<std::vector<std::string>> cells = {{"mu", "class", "d", "d'"}};
    for (const auto& l : lines) cells.push_back({l.mu, l.cls, l.d, l.dprime.empty() ? "-" : l.dprime});
    std::vector<size_t> width(4, 0);
    for (const auto& row : cells)
      for (size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
      std::string line;
      for (size_t c = 0; c < 4; ++c) line += row[c] + (c + 1 < 4 ? std::string(width[c] - row[c].size() + 2, ' ') : "");
      out += line + "\n";
    }
    emit(g, out);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Knop-Sahi, Capelli eigenvalue and Deligne-category computations", "capelli"};
  app.set_version_flag("--version", std::string(capelli_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"pretty", "json", "csv"}));
  app.add_option("--out", g.out, "Write output to PATH instead of stdout");
  app.add_option("--jobs", g.jobs, "Worker threads for verify (0 = available parallelism)")->check(CLI::NonNegativeNumber);
  app.add_option("--config", g.config, "key=value settings file");

  const std::vector<std::string> basis_choices = {"monomial", "falling", "both"};

  KsArgs ks;
  auto* ks_cmd = app.add_subcommand("ks", "Knop-Sahi polynomial P_lambda");
  ks_cmd->add_option("lambda", ks.lambda, "Partition a,b")->required();
  ks_cmd->add_option("--k", ks.k, "Specialize the parameter to this integer")->check(CLI::NonNegativeNumber);
  ks_cmd->add_option("--part", ks.part, "Part at --k")->check(CLI::IsMember({"full", "reg", "sing", "both"}));
  ks_cmd->add_option("--basis", ks.basis, "Rendering basis")->check(CLI::IsMember(basis_choices));

  EigArgs eig;
  auto* eig_cmd = app.add_subcommand("eig", "Capelli eigenvalue polynomial f_lambda");
  eig_cmd->add_option("lambda", eig.lambda, "Partition a,b")->required();
  eig_cmd->add_option("--k", eig.k, "Integer parameter")->check(CLI::NonNegativeNumber);
  eig_cmd->add_option("--route", eig.route, "Construction route")
      ->check(CLI::IsMember({"a", "b", "c", "d", "oracle", "all", "default"}));
  eig_cmd->add_option("--basis", eig.basis, "Rendering basis")->check(CLI::IsMember(basis_choices));

  DeligneArgs del;
  auto* del_cmd = app.add_subcommand("deligne", "Categorical eigenvalue polynomial at dimension t");
  del_cmd->add_option("lambda", del.lambda, "Partition a,b")->required();
  del_cmd->add_option("--t", del.t, "Rational dimension p/q (use --t=-p/q for negatives)")->required();
  del_cmd->add_option("--basis", del.basis, "Rendering basis")->check(CLI::IsMember(basis_choices));

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification sweep");
  ver_cmd->add_option("suite", ver.suite, std::string("Suite: ") + capelli_verify_suites());
  for (auto& [name, v] : ver.bounds) {
    std::string flag = "--" + name;
    for (char& ch : flag)
      if (ch == '_') ch = '-';
    ver_cmd->add_option(flag, v, "Bound " + name)->check(CLI::NonNegativeNumber);
  }
  ver_cmd->add_option("--t-list", ver.t_list, "Comma-separated rationals (use --t-list=...)");

  TableArgs tab;
  auto* tab_cmd = app.add_subcommand("table", "Restriction of the Capelli operator of lambda to each block");
  tab_cmd->add_option("lambda", tab.lambda, "Partition a,b")->required();
  tab_cmd->add_option("--k", tab.k, "Integer parameter")->check(CLI::NonNegativeNumber);
  tab_cmd->add_option("--size-max", tab.size_max, "Largest block size listed (default |lambda|)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Settings s;
    if (!g.config.empty()) s.load_file(g.config);
    s.load_env();
    if (*ks_cmd) return cmd_ks(g, s, ks);
    if (*eig_cmd) return cmd_eig(g, s, eig);
    if (*del_cmd) return cmd_deligne(g, s, del);
    if (*ver_cmd) return cmd_verify(g, s, ver);
    if (*tab_cmd) return cmd_table(g, s, tab);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
