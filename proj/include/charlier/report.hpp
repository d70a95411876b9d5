#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "charlier/types.hpp"

namespace charlier {

/// Largest residual seen by a pointwise check and where it occurred.
///
/// A NaN residual is sticky: once recorded, max_abs stays NaN so that a
/// broken evaluation can never read as a pass.
struct Residual {
  double max_abs = 0.0;
  LatticePoint where{};
  int samples = 0;

  void record(double r, LatticePoint p) {
    ++samples;
    if (std::isnan(max_abs)) return;
    if (std::isnan(r) || r > max_abs) {
      max_abs = r;
      where = p;
    }
  }

  void merge(const Residual& other) {
    if (other.samples == 0) return;
    samples += other.samples - 1;
    record(other.max_abs, other.where);
  }

  bool below(double tol) const { return !std::isnan(max_abs) && max_abs < tol; }
};

}  // namespace charlier
