#include "capelli/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "json.hpp"

namespace capelli {

size_t RunReport::passed() const {
  return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

std::string to_json(const RunReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["version"] = r.version;
  j["command"] = r.command;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cp = ordered_json::object();
    for (const auto& [k, v] : c.params) cp[k] = v;
    checks.push_back({{"name", c.name}, {"params", cp}, {"status", c.pass ? "pass" : "fail"},
                      {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  j["checks"] = checks;
  j["summary"] = {{"total", r.total()}, {"passed", r.passed()}, {"failed", r.failed()}};
  return j.dump(2) + "\n";
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}
}  // namespace

std::string to_csv(const RunReport& r) {
  std::string out = "name,params,status,lhs,rhs\n";
  for (const auto& c : r.checks) {
    std::string params;
    for (const auto& [k, v] : c.params) {
      if (!params.empty()) params += ";";
      params += k + "=" + v;
    }
    out += csv_field(c.name) + "," + csv_field(params) + "," + (c.pass ? "pass" : "fail") + "," +
           csv_field(c.lhs) + "," + csv_field(c.rhs) + "\n";
  }
  return out;
}

std::string to_text(const RunReport& r) {
  std::vector<std::pair<std::string, std::pair<size_t, size_t>>> groups;
  for (const auto& c : r.checks) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == c.name; });
    if (it == groups.end()) it = groups.insert(groups.end(), {c.name, {0, 0}});
    ++it->second.second;
    if (c.pass) ++it->second.first;
  }
  size_t width = 0;
  for (const auto& g : groups) width = std::max(width, g.first.size());
  std::string out = r.command + "\n";
  for (const auto& [name, counts] : groups)
    out += "  " + name + std::string(width - name.size() + 2, ' ') + std::to_string(counts.first) + "/" +
           std::to_string(counts.second) + "\n";
  for (const auto& c : r.checks) {
    if (c.pass) continue;
    std::string params;
    for (const auto& [k, v] : c.params) params += (params.empty() ? "" : " ") + k + "=" + v;
    out += "FAIL " + c.name + " " + params + "\n";
    if (!c.lhs.empty() || !c.rhs.empty()) out += "  lhs: " + c.lhs + "\n  rhs: " + c.rhs + "\n";
  }
  out += "total " + std::to_string(r.total()) + ", passed " + std::to_string(r.passed()) + ", failed " +
         std::to_string(r.failed()) + "\n";
  return out;
}

std::vector<CheckResult> run_tasks(const std::vector<std::pair<std::string, CheckTask>>& tasks,
                                   unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<size_t>(tasks.size(), 1));
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      try {
        slots[i] = tasks[i].second();
      } catch (const std::exception& e) {
        slots[i] = {CheckResult{tasks[i].first, {{"error", e.what()}}, false, "", ""}};
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<CheckResult> out;
  for (auto& s : slots)
    for (auto& c : s) out.push_back(std::move(c));
  return out;
}

}  // namespace capelli
