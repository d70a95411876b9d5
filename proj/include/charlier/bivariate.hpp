#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "charlier/types.hpp"

namespace charlier {

/// The parameter triple (alpha, beta, theta) of the bivariate Charlier family.
///
/// omega = alpha cos(theta) - beta sin(theta) and
/// zeta  = alpha sin(theta) + beta cos(theta) are always derived on demand.
class ModelParams {
 public:
  /// Throws DomainError unless alpha > 0, beta > 0 and theta is finite.
  ModelParams(double alpha, double beta, double theta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double theta() const { return theta_; }
  double cos() const { return std::cos(theta_); }
  double sin() const { return std::sin(theta_); }
  double omega() const { return alpha_ * cos() - beta_ * sin(); }
  double zeta() const { return alpha_ * sin() + beta_ * cos(); }

 private:
  double alpha_;
  double beta_;
  double theta_;
};

/// Product of two Poisson distributions with means alpha^2 and beta^2.
double weight(LatticePoint p, const ModelParams& params);
double log_weight(LatticePoint p, const ModelParams& params);
/// sqrt(w), from half the log weight.
double sqrt_weight(LatticePoint p, const ModelParams& params);

/// Values of C_{n1,n2}(x1,x2) for every n1 + n2 <= max_degree on the window
/// [0..m1] x [0..m2].
///
/// Built from C_{0,0} = 1 by the raising operators: C_{n1,0} by repeated
/// A_+^{(1)}, then C_{n1,n2} by repeated A_+^{(2)}. A_+ only reads the
/// downward neighbours (x1-1, x2) and (x1, x2-1), so the window is closed
/// under every step and no boundary value is ever guessed.
class CharlierTable {
 public:
  CharlierTable(const ModelParams& params, int max_degree, int m1, int m2);

  int max_degree() const { return max_degree_; }
  int m1() const { return m1_; }
  int m2() const { return m2_; }

  /// Throws OutOfDomain outside the window or above max_degree.
  double operator()(ModeIndex n, LatticePoint p) const;

  /// Row-major values (index x1 * (m2 + 1) + x2) of one polynomial.
  std::span<const double> values(ModeIndex n) const;

 private:
  std::size_t slot(ModeIndex n) const;

  int max_degree_;
  int m1_;
  int m2_;
  std::vector<std::vector<double>> polys_;
};

/// C_{n1,n2}(x1,x2) by the ladder route. Valid for every parameter triple.
double charlier2_ladder(ModeIndex n, LatticePoint p, const ModelParams& params);

/// The four denominators alpha*omega, alpha*zeta, beta*omega, beta*zeta of
/// the u_ij coefficients, each nonzero and omega, zeta nonzero (to 1e-9).
/// theta = 0 is generic: u_12 = u_21 = 0 there.
bool params_generic(const ModelParams& params);

/// C_{n1,n2}(x1,x2) by the terminating four-fold hypergeometric sum over
/// (rho, sigma, mu, nu). Verification oracle only.
/// Throws SingularParameters if a denominator has magnitude below 1e-12.
double charlier2_explicit(ModeIndex n, LatticePoint p, const ModelParams& params);

/// |closed-form generating function - sum_{n1+n2 <= degree_cap} C z^n / sqrt(n1! n2!)|
/// at a single lattice point.
double generating_check(const ModelParams& params, double z1, double z2, LatticePoint p, int degree_cap);

/// Window on which weighted sums of polynomials up to max_degree have a
/// negligible tail: along each axis the marginal Poisson weight is below
/// tail_tol and weight * (1 + x/a + a)^{2 max_degree} is below 1e-14.
TruncationSpec default_truncation(const ModelParams& params, int max_degree, double tail_tol = 1e-18);

/// |sum_{window} w C_n C_m - delta_{nm}|.
double orthogonality_check(const ModelParams& params, ModeIndex n, ModeIndex m, const TruncationSpec& trunc);

/// Least-squares constant c with C_{n1,n2}|_{theta=0} ~ c * Chat_{n1}(x1; alpha) Chat_{n2}(x2; beta)
/// over [0..m]^2, plus the worst pointwise misfit after scaling.
struct SeparableFit {
  double constant = 0.0;
  double max_misfit = 0.0;
};
SeparableFit fit_separable_constant(ModeIndex n, double alpha, double beta, int m);

}  // namespace charlier
