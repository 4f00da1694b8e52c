#pragma once

// The acceptance battery: every criterion of the verification plan as a
// named check with a claim tag.  `quick` restricts to the n <= 2 instances;
// `full` runs everything.  Checks are independent and may run in parallel
// (QMA_THREADS); the report order is by check id, not completion time.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qma {

struct SuiteCheck {
  std::string id;
  std::string tag;   // claim label
  bool quick = false; // included in the quick level
  std::function<std::pair<bool, std::string>()> run;
};

struct SuiteResult {
  std::string id;
  std::string tag;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::vector<SuiteCheck> suite_checks(std::uint64_t seed);

// executes the selected level; honors the QMA_THREADS cap; results sorted by id
std::vector<SuiteResult> run_suite(bool full, std::uint64_t seed = 42);

} // namespace qma
