#pragma once

#include <string>
#include <utility>
#include <vector>

namespace capelli {

// Outcome of one verified identity. On failure lhs/rhs hold the mismatching witness.
struct CheckResult {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

using IdentityReport = CheckResult;

}  // namespace capelli
