#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "charlier/bivariate.hpp"
#include "charlier/lattice.hpp"
#include "charlier/report.hpp"

namespace charlier::testing {

/// theta placing omega = alpha cos(theta) - beta sin(theta) at `omega`.
inline double theta_for_omega(double alpha, double beta, double omega) {
  const double r = std::hypot(alpha, beta);
  return std::numbers::pi / 2 - std::atan2(beta, alpha) - std::asin(omega / r);
}

/// Parameter sets for the pointwise identities: generic ones, theta = 0,
/// and omega ~ 1e-6.
inline std::vector<ModelParams> identity_param_sets() {
  return {
      ModelParams(1.2, 0.9, 0.4),
      ModelParams(1.3, 0.8, 0.7),
      ModelParams(0.7, 1.6, -0.3),
      ModelParams(1.1, 0.7, 0.0),
      ModelParams(1.0, 1.4, theta_for_omega(1.0, 1.4, 1e-6)),
  };
}

/// C_n on the table window, or the zero function for a negative index.
inline LatticeFunction mode_function(const CharlierTable& table, ModeIndex n) {
  const Window w{table.m1(), table.m2()};
  if (n.n1 < 0 || n.n2 < 0) return LatticeFunction::on_window(w, [](LatticePoint) { return Complex(0.0); });
  return LatticeFunction::on_window(w, [&table, n](LatticePoint p) { return Complex(table(n, p)); });
}

/// max over the window of |lhs - rhs|.
inline Residual residual_on(const LatticeFunction& lhs, const LatticeFunction& rhs, Window w) {
  Residual r;
  for (int x1 = 0; x1 <= w.m1; ++x1) {
    for (int x2 = 0; x2 <= w.m2; ++x2) r.record(std::abs(lhs({x1, x2}) - rhs({x1, x2})), {x1, x2});
  }
  return r;
}

}  // namespace charlier::testing
