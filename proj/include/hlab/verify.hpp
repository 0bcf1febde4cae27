#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "hlab/atomic_covering.hpp"

namespace hlab {

struct SuiteFailure {
  std::string check;
  nlohmann::json instance;  // enough to replay the failing case
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::map<std::string, std::size_t> check_counts;  // evaluations per named check
  std::vector<SuiteFailure> failures;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

// content-laws, transforms, curves, slicing, separation.
const std::vector<std::string>& suite_names();

// Runs `cases` randomized small instances of one invariant suite. Throws
// BadParams for an unknown suite name.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t cases,
                      const CoveringOptions& options = {});

}  // namespace hlab
