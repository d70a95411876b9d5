#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "charlier/lattice.hpp"

namespace charlier {

/// Reproducible pseudo-random lattice data for operator identity checks.
///
/// Doubles are formed from the top 53 bits of std::mt19937_64, so a seed
/// yields the same values on every platform.
class ProbeSource {
 public:
  explicit ProbeSource(std::uint64_t seed);

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive

  /// Function with complex coefficients in [-1, 1) + i[-1, 1) on
  /// [0..support]^2 and exactly zero elsewhere on N x N.
  LatticeFunction function(int support = 12);

  std::vector<LatticePoint> points(int count, int max_coord);

 private:
  std::mt19937_64 engine_;
};

}  // namespace charlier
