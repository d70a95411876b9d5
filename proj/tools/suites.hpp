#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charlier/bivariate.hpp"

namespace charlier::cli {

/// One verified identity: its worst residual against a declared tolerance.
/// Most checks pass when the residual is below the tolerance; a discrepancy
/// probe passes when it is above (expect_above).
struct SuiteResult {
  std::string suite;
  std::string identity;
  double residual = 0.0;
  double tolerance = 0.0;
  bool expect_above = false;

  bool passed() const;
};

struct SuiteOptions {
  int nmax = 5;
  std::uint64_t seed = 7;
  int probes = 10;
  /// Replaces every declared tolerance when set.
  std::optional<double> tol;
};

const std::vector<std::string>& suite_names();  // without "all"

/// Runs one named suite, or every suite for "all". Throws DomainError on an unknown name.
std::vector<SuiteResult> run_suite(const std::string& name, const ModelParams& params, const SuiteOptions& opt);

}  // namespace charlier::cli
