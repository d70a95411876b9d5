#include "charlier/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace charlier::uni {

namespace {

void require_positive(double a, const char* where) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError(std::string(where) + ": parameter a must be positive and finite");
}

void require_nonneg(int v, const char* what, const char* where) {
  if (v < 0) throw DomainError(std::string(where) + ": " + what + " must be non-negative");
}

}  // namespace

double charlier_standard(int n, int x, double a) {
  require_positive(a, "charlier_standard");
  require_nonneg(n, "degree n", "charlier_standard");
  require_nonneg(x, "site x", "charlier_standard");

  // term_{k+1} / term_k = (-n + k)(-x + k) / (k + 1) * (-1/a)
  const int kmax = std::min(n, x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kmax; ++k) {
    term *= static_cast<double>(n - k) * static_cast<double>(x - k) / static_cast<double>(k + 1);
    term /= -a;
    sum += term;
  }
  return sum;
}

double charlier_orthonormal(int n, int x, double a) {
  require_positive(a, "charlier_orthonormal");
  require_nonneg(n, "degree n", "charlier_orthonormal");
  const double magnitude = std::exp(n * std::log(a) - 0.5 * std::lgamma(n + 1.0));
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * magnitude * charlier_standard(n, x, a * a);
}

double log_poisson_weight(int x, double a) {
  require_positive(a, "poisson_weight");
  require_nonneg(x, "site x", "poisson_weight");
  return -a * a + 2.0 * x * std::log(a) - std::lgamma(x + 1.0);
}

double poisson_weight(int x, double a) { return std::exp(log_poisson_weight(x, a)); }

double hermite(int n, double x) {
  require_nonneg(n, "degree n", "hermite");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

int poisson_cutoff(double a, double weight_tol, double term_tol, double term_scale) {
  require_positive(a, "poisson_cutoff");
  int x = static_cast<int>(std::ceil(a * a));
  for (;; ++x) {
    const double w = poisson_weight(x, a);
    if (w < weight_tol && w * term_scale < term_tol) return x;
  }
}

double lower(const SiteFunction& f, int x, double a) { return a * (f(x + 1) - f(x)); }

double raise(const SiteFunction& f, int x, double a) {
  const double down = x > 0 ? (x / a) * f(x - 1) : 0.0;
  return -a * f(x) + down;
}

double difference_composed(const SiteFunction& f, int x, double a) {
  const SiteFunction lowered = [&](int y) { return lower(f, y, a); };
  return raise(lowered, x, a);
}

double difference_linear(const SiteFunction& f, int x, double a) {
  const double down = x > 0 ? x * f(x - 1) : 0.0;
  return -a * a * f(x + 1) + (x + a * a) * f(x) - down;
}

double difference_quadratic(const SiteFunction& f, int x, double a) {
  const double down = x > 0 ? x * f(x - 1) : 0.0;
  return -a * a * f(x + 1) + (static_cast<double>(x) * x + a * a) * f(x) - down;
}

LadderReport ladder_check(int n_max, int x_max, double a) {
  require_positive(a, "ladder_check");
  LadderReport report;
  for (int n = 0; n <= n_max; ++n) {
    const SiteFunction cn = [n, a](int y) { return charlier_orthonormal(n, y, a); };
    for (int x = 0; x <= x_max; ++x) {
      const double below = n > 0 ? std::sqrt(static_cast<double>(n)) * charlier_orthonormal(n - 1, x, a) : 0.0;
      const double above = std::sqrt(n + 1.0) * charlier_orthonormal(n + 1, x, a);
      const double here = std::abs(cn(x));
      const double down_gap = std::abs(lower(cn, x, a) - below);
      const double up_gap = std::abs(raise(cn, x, a) - above);
      report.lowering.record(down_gap, {n, x});
      report.raising.record(up_gap, {n, x});
      const double down_scale = std::max({1.0, a * std::abs(cn(x + 1)), a * here});
      const double up_scale = std::max({1.0, a * here, x > 0 ? (x / a) * std::abs(cn(x - 1)) : 0.0});
      report.relative.record(std::max(down_gap / down_scale, up_gap / up_scale), {n, x});
    }
  }
  return report;
}

DifferenceReport difference_check(int n_max, int x_max, double a) {
  require_positive(a, "difference_check");
  DifferenceReport report;
  for (int n = 0; n <= n_max; ++n) {
    const SiteFunction cn = [n, a](int y) { return charlier_orthonormal(n, y, a); };
    for (int x = 0; x <= x_max; ++x) {
      const double composed = difference_composed(cn, x, a);
      const double gap = std::abs(composed - n * cn(x));
      const double terms = std::max({1.0, a * a * std::abs(cn(x + 1)), (x + a * a) * std::abs(cn(x)),
                                     x > 0 ? x * std::abs(cn(x - 1)) : 0.0});
      report.eigen.record(gap, {n, x});
      report.eigen_relative.record(gap / terms, {n, x});
      report.linear_form.record(std::abs(difference_linear(cn, x, a) - composed), {n, x});
      report.quadratic_form.record(std::abs(difference_quadratic(cn, x, a) - composed), {n, x});
    }
  }
  return report;
}

}  // namespace charlier::uni
