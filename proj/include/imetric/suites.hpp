#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imetric/inequalities.hpp"

namespace imetric {

/// Shared knobs of the named verification suites.
struct SuiteOptions {
  int samples = 100000;
  std::uint64_t seed = 7;
  Tolerances tol{};
  /// When set, domain-based suites run on this domain only instead of the
  /// default trio {ball2, halfspace2, unit square}.
  std::optional<Domain> domain;
};

/// Names accepted by run_suite (plus "all").
const std::vector<std::string>& suite_names();

/// Runs one named suite and returns one report per claim.
/// Throws std::invalid_argument for an unknown name.
std::vector<VerificationReport> run_suite(const std::string& name,
                                          const SuiteOptions& opt);

/// Every suite, in the order of suite_names().
std::vector<VerificationReport> run_all_suites(const SuiteOptions& opt);

}  // namespace imetric
