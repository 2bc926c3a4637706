#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zweistein/table.hpp"

namespace zweistein {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Table integrity plus cross-checks against the oracle module.
std::vector<CheckResult> run_verification(const Tables& tables, std::uint64_t seed = 2024);

}  // namespace zweistein
