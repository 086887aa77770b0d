#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mellinop/random.hpp"

namespace mellinop {

struct Check {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<Check> checks;

  bool pass() const;
  /// Worst check (first failing, else largest measured / threshold ratio).
  const Check* worst() const;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = default_seed;
  std::vector<CriterionReport> criteria;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Criterion numbers run by a suite: opcalc 1-4, greens 5, magnus 6,
/// algebra 7, induction 8-9, all 1-9. InputError for unknown names.
std::vector<int> suite_criteria(const std::string& suite);

/// One acceptance criterion with its fixed corpus. With timing off, wall
/// times are checked but not recorded so reports are byte-identical.
CriterionReport run_criterion(int id, std::uint64_t seed = default_seed, bool timing = false);

SuiteReport run_suite(const std::string& suite, std::uint64_t seed = default_seed, bool timing = false);

}  // namespace mellinop
