#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "capelli/check.hpp"

namespace capelli {

inline constexpr const char* kVersion = "1.0.0";

struct RunReport {
  std::string version = kVersion;
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckResult> checks;

  size_t total() const { return checks.size(); }
  size_t passed() const;
  size_t failed() const { return total() - passed(); }
};

std::string to_json(const RunReport& r);
// Fixed header: name,params,status,lhs,rhs
std::string to_csv(const RunReport& r);
// Per-check-name pass counts, then every failing check, then the totals.
std::string to_text(const RunReport& r);

using CheckTask = std::function<std::vector<CheckResult>()>;

// Runs tasks on up to `jobs` threads (0 = hardware concurrency) and concatenates the
// results in task order. A task that throws becomes a single failing check.
std::vector<CheckResult> run_tasks(const std::vector<std::pair<std::string, CheckTask>>& tasks,
                                   unsigned jobs);

}  // namespace capelli
