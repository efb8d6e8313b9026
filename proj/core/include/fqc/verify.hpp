#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fqc/bounds.hpp"
#include "fqc/configs.hpp"

namespace fqc {

struct CheckResult {
  std::string check;     // registry name of the invariant
  std::string instance;  // parameters of this run
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> results;

  bool ok() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : results)
      if (!r.pass) ++n;
    return n;
  }
};

struct VerifyGrid {
  std::vector<std::uint64_t> qs = {3, 5, 7, 9};
  std::vector<unsigned> ds = {2, 3};
  std::uint64_t seed = 0;
  unsigned random_cases = 20;  // per randomized check family
};

/// Names of the registered invariant checks, one per named module invariant.
std::vector<std::string> registered_checks();

/// Runs every registered check over the grid. Empty grid gives an empty,
/// passing report.
VerifyReport verify_all(const VerifyGrid& grid);

void write_json(std::ostream& out, const VerifyReport& report);

}  // namespace fqc
