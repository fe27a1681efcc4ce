#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capelli/rat.hpp"
#include "capelli/report.hpp"

namespace capelli {

struct Caps {
  int size = 14;
  int N = 10;
  int k = 6;
  int dougall = 12;
};

// Unset bounds fall back to the per-suite defaults listed in suite_defaults().
struct VerifyOptions {
  std::string suite = "all";
  std::optional<int> k_max;
  std::optional<int> size_max;
  std::optional<int> d_max;
  std::optional<int> N_max;
  std::optional<int> a_max;
  std::optional<int> bcd_max;
  std::optional<std::vector<Rat>> t_list;
  unsigned jobs = 0;
  Caps caps;
};

const std::vector<std::string>& suite_names();
std::vector<Rat> default_t_list();

// Throws Error(Cap) when a bound exceeds its cap and InvalidArgument for an unknown
// suite or a negative bound.
RunReport run_verify(const VerifyOptions& opts);

// Individual suites, each returning its check list (used by run_verify and tests).
std::vector<CheckResult> suite_knop_sahi(int k_max, int size_max, unsigned jobs);
std::vector<CheckResult> suite_capelli(int k_max, int size_max, unsigned jobs);
std::vector<CheckResult> suite_identity_e(int N_max, unsigned jobs);
std::vector<CheckResult> suite_logderiv(int N_max, unsigned jobs);
std::vector<CheckResult> suite_chain(int N_max, unsigned jobs);
std::vector<CheckResult> suite_dougall(int a_max, int bcd_max, unsigned jobs);
std::vector<CheckResult> suite_deligne(int k_max, int size_max, int d_max, const std::vector<Rat>& t_list,
                                       unsigned jobs);

}  // namespace capelli
