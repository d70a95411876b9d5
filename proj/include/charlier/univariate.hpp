#pragma once

#include <algorithm>
#include <functional>

#include "charlier/report.hpp"

// One-variable Charlier and Hermite polynomials, with the 1D ladder and
// difference operators. These serve as the reference for the bivariate
// family at theta = 0 and as the target of the continuum limit.
namespace charlier::uni {

/// Nominal argument limits. The direct 2F0 sum cancels badly near x ~ a^2
/// as a and n grow; measured worst relative ladder residual on x <= 200:
///   a <= 1:  < 1e-12 up to n = 30
///   a = 2:   1e-10 at n = 20, 1e-8 at n = 30
///   a = 3:   2e-11 at n = 10, 2e-8 at n = 20, 7e-6 at n = 30
///   a = 5:   1e-9 at n = 10, O(1) at n = 30
///   a = 10:  1e-6 at n = 10 (1e-11 for x <= 50)
inline constexpr int kMaxDegree = 30;
inline constexpr int kMaxSite = 200;
inline constexpr int kMaxHermiteDegree = 60;

/// Standard Charlier polynomial C_n(x; a) = 2F0(-n, -x; ; -1/a).
///
/// The series terminates after min(n, x) + 1 terms and is summed directly
/// with a running product. Throws DomainError if a <= 0 or n, x < 0.
double charlier_standard(int n, int x, double a);

/// Orthonormal Charlier polynomial (-a)^n / sqrt(n!) * C_n(x; a^2).
///
/// Orthonormal against the Poisson weight e^{-a^2} a^{2x} / x!.
double charlier_orthonormal(int n, int x, double a);

/// Poisson probability e^{-a^2} a^{2x} / x!, evaluated in log space.
double poisson_weight(int x, double a);
double log_poisson_weight(int x, double a);

/// Physicists' Hermite polynomial H_n(x) by three-term recurrence.
double hermite(int n, double x);

/// Smallest X such that the Poisson tail beyond X is negligible:
/// X is past the mean, poisson_weight(X, a) < weight_tol, and
/// poisson_weight(X, a) * term_scale < term_tol.
int poisson_cutoff(double a, double weight_tol = 1e-18, double term_tol = 1e-16,
                   double term_scale = 1.0);

using SiteFunction = std::function<double(int)>;

// 1D operators acting on functions of x in N. Reads at x - 1 < 0 only occur
// with a vanishing x prefactor and are skipped.
double lower(const SiteFunction& f, int x, double a);          // a (T^+ - 1)
double raise(const SiteFunction& f, int x, double a);          // -a + (x / a) T^-
double difference_composed(const SiteFunction& f, int x, double a);  // A_+ A_-
double difference_linear(const SiteFunction& f, int x, double a);    // -a^2 T^+ + (x + a^2) - x T^-
double difference_quadratic(const SiteFunction& f, int x, double a); // -a^2 T^+ + (x^2 + a^2) - x T^-

struct LadderReport {
  Residual lowering;  // |A_- C_n - sqrt(n) C_{n-1}|
  Residual raising;   // |A_+ C_n - sqrt(n+1) C_{n+1}|
  /// Both residuals divided by max(1, |terms|); C_n(x) reaches ~1e44 at n = 30, x = 200.
  Residual relative;
  double max() const { return std::max(lowering.max_abs, raising.max_abs); }
};

/// Pointwise ladder identities for all n <= n_max, x <= x_max.
/// Residual locations are reported as (n, x).
LadderReport ladder_check(int n_max, int x_max, double a);

struct DifferenceReport {
  Residual eigen;           // |A_+A_- C_n - n C_n|
  Residual eigen_relative;  // eigen / max(1, |n C_n|, |terms|)
  Residual linear_form;     // |difference_linear - difference_composed| on C_n
  Residual quadratic_form;  // |difference_quadratic - difference_composed| on C_n
};

/// Eigenvalue equation of A_+A_- on C_n, plus how the two candidate explicit
/// stencils (constant term x + a^2 versus x^2 + a^2) compare with the composition.
DifferenceReport difference_check(int n_max, int x_max, double a);

}  // namespace charlier::uni
