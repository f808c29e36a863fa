#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mvsf/jsonio.hpp"

namespace mvsf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Run the full acceptance suite. When `progress` is set it receives one
// line per criterion as it finishes.
std::vector<CriterionResult> runAcceptance(
    const std::function<void(const CriterionResult&)>& progress = {});

// Canonical machine-readable report (byte-deterministic for a fixed build).
Json acceptanceReport(const std::vector<CriterionResult>& results);

}  // namespace mvsf
