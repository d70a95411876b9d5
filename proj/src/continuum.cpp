#include "charlier/continuum.hpp"

#include <cmath>
#include <numbers>

#include "charlier/bivariate.hpp"
#include "charlier/operators.hpp"
#include "charlier/parallel.hpp"
#include "charlier/spectra.hpp"
#include "charlier/univariate.hpp"

namespace charlier::continuum {

double ScalingMap::to_plane1(double x1) const { return (x1 - alpha * alpha) / (std::numbers::sqrt2 * alpha); }
double ScalingMap::to_plane2(double x2) const { return (x2 - beta * beta) / (std::numbers::sqrt2 * beta); }
double ScalingMap::to_lattice1(double xt1) const { return std::numbers::sqrt2 * alpha * xt1 + alpha * alpha; }
double ScalingMap::to_lattice2(double xt2) const { return std::numbers::sqrt2 * beta * xt2 + beta * beta; }
double ScalingMap::density_factor() const { return std::sqrt(2.0 * alpha * beta); }

PlanePoint rotate(PlanePoint p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * p.x1 - s * p.x2, s * p.x1 + c * p.x2};
}

namespace {

void require_state(int N, int n) {
  if (N < 0 || n < 0 || n > N) throw DomainError("oscillator state requires 0 <= n <= N");
}

double normalization(int N, int n) {
  return std::exp(-0.5 * (std::log(std::numbers::pi) + N * std::numbers::ln2 + std::lgamma(n + 1.0) +
                          std::lgamma(N - n + 1.0)));
}

// e^{-x^2/2} H_k(x) and its derivative e^{-x^2/2} (2k H_{k-1}(x) - x H_k(x)).
struct HermiteFunction {
  double value;
  double slope;
};

HermiteFunction hermite_function(int k, double x) {
  const double g = std::exp(-0.5 * x * x);
  const double hk = uni::hermite(k, x);
  const double dh = k > 0 ? 2.0 * k * uni::hermite(k - 1, x) : 0.0;
  return {g * hk, g * (dh - x * hk)};
}

}  // namespace

double oscillator_wavefunction(int N, int n, double xt1, double xt2) {
  require_state(N, n);
  return normalization(N, n) * std::exp(-0.5 * (xt1 * xt1 + xt2 * xt2)) * uni::hermite(n, xt1) *
         uni::hermite(N - n, xt2);
}

double rotated_wavefunction(int N, int n, double theta, PlanePoint xt) {
  const PlanePoint r = rotate(xt, theta);
  return oscillator_wavefunction(N, n, r.x1, r.x2);
}

Ladder parse_ladder(const std::string& name) {
  if (name == "raise1") return Ladder::Raise1;
  if (name == "raise2") return Ladder::Raise2;
  if (name == "lower1") return Ladder::Lower1;
  if (name == "lower2") return Ladder::Lower2;
  throw DomainError("unknown ladder operator '" + name + "' (expected raise1|raise2|lower1|lower2)");
}

std::string ladder_name(Ladder which) {
  switch (which) {
    case Ladder::Raise1: return "raise1";
    case Ladder::Raise2: return "raise2";
    case Ladder::Lower1: return "lower1";
    case Ladder::Lower2: return "lower2";
  }
  return "?";
}

double apply_ladder(Ladder which, int N, int n, double theta, PlanePoint xt) {
  require_state(N, n);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const PlanePoint r = rotate(xt, theta);
  const auto f1 = hermite_function(n, r.x1);
  const auto f2 = hermite_function(N - n, r.x2);
  const double k = normalization(N, n);
  const double value = k * f1.value * f2.value;
  const double d_hat1 = k * f1.slope * f2.value;
  const double d_hat2 = k * f1.value * f2.slope;
  // Chain rule through xhat = rotate(xt).
  const double d1 = c * d_hat1 + s * d_hat2;
  const double d2 = -s * d_hat1 + c * d_hat2;

  const double a1 = (xt.x1 * value + d1) / std::numbers::sqrt2;
  const double a2 = (xt.x2 * value + d2) / std::numbers::sqrt2;
  const double a1_dag = (xt.x1 * value - d1) / std::numbers::sqrt2;
  const double a2_dag = (xt.x2 * value - d2) / std::numbers::sqrt2;
  switch (which) {
    case Ladder::Raise1: return c * a1_dag - s * a2_dag;
    case Ladder::Raise2: return s * a1_dag + c * a2_dag;
    case Ladder::Lower1: return c * a1 - s * a2;
    case Ladder::Lower2: return s * a1 + c * a2;
  }
  return 0.0;
}

double quadrature_norm(int N, int n, double half_width, int panels) {
  const double h = 2.0 * half_width / panels;
  double sum = 0.0;
  for (int i = 0; i <= panels; ++i) {
    const double wi = (i == 0 || i == panels) ? 0.5 : 1.0;
    for (int j = 0; j <= panels; ++j) {
      const double wj = (j == 0 || j == panels) ? 0.5 : 1.0;
      const double v = oscillator_wavefunction(N, n, -half_width + i * h, -half_width + j * h);
      sum += wi * wj * v * v;
    }
  }
  return sum * h * h;
}

namespace {

// Lattice sites along one axis whose plane coordinate satisfies |xt| <= window.
struct SiteRange {
  int lo;
  int hi;
};

SiteRange site_range(double a, double window) {
  const double centre = a * a;
  const double half = std::numbers::sqrt2 * a * window;
  return {std::max(0, static_cast<int>(std::ceil(centre - half - 1e-9))),
          static_cast<int>(std::floor(centre + half + 1e-9))};
}

bool inside(double xt, double window) { return std::abs(xt) <= window + 1e-12; }

}  // namespace

double wavefunction_limit_error(int N, int n, double scale, double theta, double window) {
  require_state(N, n);
  const ModelParams params(scale, scale, theta);
  const ScalingMap map{scale, scale};
  const auto range = site_range(scale, window);
  if (range.hi < range.lo) return 0.0;
  const CharlierTable table(params, N, range.hi, range.hi);
  const double density = map.density_factor();
  double worst = 0.0;
  for (int x1 = range.lo; x1 <= range.hi; ++x1) {
    for (int x2 = range.lo; x2 <= range.hi; ++x2) {
      const PlanePoint xt{map.to_plane1(x1), map.to_plane2(x2)};
      if (!inside(xt.x1, window) || !inside(xt.x2, window)) continue;
      const double lattice = density * sqrt_weight({x1, x2}, params) * table({n, N - n}, {x1, x2});
      worst = std::max(worst, std::abs(lattice - rotated_wavefunction(N, n, theta, xt)));
    }
  }
  return worst;
}

double weight_limit_error(double scale, double window) {
  const ScalingMap map{scale, scale};
  const auto range = site_range(scale, window);
  double worst = 0.0;
  for (int x = range.lo; x <= range.hi; ++x) {
    const double xt = map.to_plane1(x);
    if (!inside(xt, window)) continue;
    const double density = std::numbers::sqrt2 * scale * uni::poisson_weight(x, scale);
    worst = std::max(worst, std::abs(density - std::exp(-xt * xt) / std::sqrt(std::numbers::pi)));
  }
  return worst;
}

double ladder_limit_error(Ladder which, int N, int n, double scale, double theta, double window) {
  require_state(N, n);
  const ModelParams params(scale, scale, theta);
  const ScalingMap map{scale, scale};
  const auto range = site_range(scale, window);
  if (range.hi < range.lo) return 0.0;
  const StateTable states(params, N, {range.hi + 1, range.hi + 1});
  const auto state = states.upsilon_function({N, n});

  LatticeOperator bare;
  switch (which) {
    case Ladder::Raise1: bare = ops::raising(ops::Axis::One, params); break;
    case Ladder::Raise2: bare = ops::raising(ops::Axis::Two, params); break;
    case Ladder::Lower1: bare = ops::lowering(ops::Axis::One, params); break;
    case Ladder::Lower2: bare = ops::lowering(ops::Axis::Two, params); break;
  }
  const auto gauged = ops::gauge_transform(bare, params);
  const double density = map.density_factor();

  double worst = 0.0;
  for (int x1 = range.lo; x1 <= range.hi; ++x1) {
    for (int x2 = range.lo; x2 <= range.hi; ++x2) {
      const PlanePoint xt{map.to_plane1(x1), map.to_plane2(x2)};
      if (!inside(xt.x1, window) || !inside(xt.x2, window)) continue;
      const double lattice = density * gauged.apply_at(state, {x1, x2}).real();
      worst = std::max(worst, std::abs(lattice - apply_ladder(which, N, n, theta, xt)));
    }
  }
  return worst;
}

std::vector<ConvergenceRow> convergence_scan(LimitQuantity what, const std::vector<double>& scales, int N, int n,
                                             double theta, double window, Ladder which) {
  std::vector<ConvergenceRow> rows(scales.size());
  parallel_for(static_cast<int>(scales.size()), [&](int i) {
    const double scale = scales[static_cast<std::size_t>(i)];
    ConvergenceRow row{scale, "", N, n, theta, 0.0};
    switch (what) {
      case LimitQuantity::Weight:
        row.quantity = "weight";
        row.N = 0;
        row.n = 0;
        row.sup_error = weight_limit_error(scale, window);
        break;
      case LimitQuantity::Wavefunction:
        row.quantity = "wavefunction";
        row.sup_error = wavefunction_limit_error(N, n, scale, theta, window);
        break;
      case LimitQuantity::Ladder:
        row.quantity = "ladder:" + ladder_name(which);
        row.sup_error = ladder_limit_error(which, N, n, scale, theta, window);
        break;
    }
    rows[static_cast<std::size_t>(i)] = row;
  });
  return rows;
}

}  // namespace charlier::continuum
