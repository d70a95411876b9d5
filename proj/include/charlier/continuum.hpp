#pragma once

#include <string>
#include <vector>

namespace charlier::continuum {

/// Lattice-to-plane map x_i = sqrt(2) a xt_i + a^2 with a = alpha, beta.
/// Lattice points land on a grid of spacing 1 / (sqrt(2) a).
struct ScalingMap {
  double alpha;
  double beta;

  double to_plane1(double x1) const;
  double to_plane2(double x2) const;
  double to_lattice1(double xt1) const;
  double to_lattice2(double xt2) const;
  /// Jacobian sqrt(sqrt(2) alpha * sqrt(2) beta) turning an l^2-normalized
  /// lattice function into an L^2 density: sum |f|^2 = sum |c f|^2 dxt1 dxt2.
  double density_factor() const;
};

struct PlanePoint {
  double x1;
  double x2;
};

/// (cos t x1 - sin t x2, sin t x1 + cos t x2).
PlanePoint rotate(PlanePoint p, double theta);

/// 2D oscillator eigenfunction
///   phi_{N,n} = exp(-(x1^2 + x2^2)/2) H_n(x1) H_{N-n}(x2) / sqrt(pi 2^N n! (N-n)!).
double oscillator_wavefunction(int N, int n, double xt1, double xt2);

/// Same state in rotated coordinates: phi_{N,n}(rotate(xt, theta)).
double rotated_wavefunction(int N, int n, double theta, PlanePoint xt);

enum class Ladder { Raise1, Raise2, Lower1, Lower2 };

Ladder parse_ladder(const std::string& name);
std::string ladder_name(Ladder which);

/// Rotated creation/annihilation operator applied to rotated_wavefunction,
/// from the analytic gradient (H_n' = 2n H_{n-1}) with a_i = (xt_i + d_i)/sqrt(2):
///   Raise1 = cos a1^+ - sin a2^+,  Raise2 = sin a1^+ + cos a2^+,
///   Lower1 = cos a1   - sin a2,    Lower2 = sin a1   + cos a2.
double apply_ladder(Ladder which, int N, int n, double theta, PlanePoint xt);

/// Norm of phi_{N,n} by tensor trapezoid on [-half_width, half_width]^2.
double quadrature_norm(int N, int n, double half_width = 8.0, int panels = 400);

/// sup over lattice sites with |xt_i| <= window of
/// |sqrt(2 alpha beta) Upsilon_{N,n}(x) - phi_{N,n}(rotate(xt, theta))|, alpha = beta = scale.
double wavefunction_limit_error(int N, int n, double scale, double theta, double window);

/// sup over sites with |xt| <= window of |sqrt(2) a Poisson(x; a^2) - exp(-xt^2)/sqrt(pi)|, a = scale.
double weight_limit_error(double scale, double window);

/// sup over sites of |sqrt(2 alpha beta) (Abar Upsilon_{N,n})(x) - (A phi_{N,n})(xt)| where Abar is the
/// gauge-conjugated lattice ladder operator and A its rotated continuum counterpart.
double ladder_limit_error(Ladder which, int N, int n, double scale, double theta, double window);

struct ConvergenceRow {
  double scale;
  std::string quantity;
  int N;
  int n;
  double theta;
  double sup_error;
};

enum class LimitQuantity { Weight, Wavefunction, Ladder };

/// One row per scale, evaluated in parallel over scales.
std::vector<ConvergenceRow> convergence_scan(LimitQuantity what, const std::vector<double>& scales, int N, int n,
                                             double theta, double window, Ladder which = Ladder::Raise1);

}  // namespace charlier::continuum
