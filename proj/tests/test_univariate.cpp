#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "charlier/univariate.hpp"

using namespace charlier;

namespace {

// 2F0(-n, -x; ; -1/a) with each term built from scratch:
// (-n)_k (-x)_k / k! (-1/a)^k, Pochhammers as explicit products.
double charlier_oracle(int n, int x, double a) {
  long double sum = 0.0L;
  for (int k = 0; k <= std::min(n, x); ++k) {
    long double pn = 1.0L, px = 1.0L, fact = 1.0L;
    for (int j = 0; j < k; ++j) {
      pn *= (-n + j);
      px *= (-x + j);
      fact *= (j + 1);
    }
    sum += pn * px / fact * std::pow(-1.0L / a, k);
  }
  return static_cast<double>(sum);
}

// Taylor coefficients of e^{-t^2} e^{2xt}, times n!: an oracle for H_n(x)
// that does not touch the three-term recurrence.
std::vector<double> hermite_by_series(double x, int n_max) {
  std::vector<double> gauss(n_max + 1, 0.0), expo(n_max + 1, 0.0), out(n_max + 1, 0.0);
  double f = 1.0;
  for (int k = 0; k <= n_max; ++k) {
    if (k > 0) f *= k;
    expo[k] = std::pow(2.0 * x, k) / f;
  }
  f = 1.0;
  for (int m = 0; 2 * m <= n_max; ++m) {
    if (m > 0) f *= m;
    gauss[2 * m] = (m % 2 == 0 ? 1.0 : -1.0) / f;
  }
  f = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) f *= n;
    double c = 0.0;
    for (int k = 0; k <= n; ++k) c += gauss[k] * expo[n - k];
    out[n] = c * f;
  }
  return out;
}

}  // namespace

TEST_CASE("charlier_standard matches the term-by-term oracle") {
  CHECK(uni::charlier_standard(0, 5, 2.0) == 1.0);
  CHECK(uni::charlier_standard(3, 0, 1.7) == 1.0);
  CHECK(charlier_oracle(1, 4, 2.0) == doctest::Approx(-1.0));
  CHECK(uni::charlier_standard(1, 4, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
  for (int n = 0; n <= 8; ++n) {
    for (int x = 0; x <= 12; ++x) {
      for (double a : {0.6, 1.0, 2.5}) {
        const double ref = charlier_oracle(n, x, a);
        CHECK(std::abs(uni::charlier_standard(n, x, a) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST_CASE("charlier_standard rejects bad arguments") {
  CHECK_THROWS_AS(uni::charlier_standard(2, 3, 0.0), DomainError);
  CHECK_THROWS_AS(uni::charlier_standard(2, 3, -1.0), DomainError);
  CHECK_THROWS_AS(uni::charlier_standard(-1, 3, 1.0), DomainError);
  CHECK_THROWS_AS(uni::charlier_orthonormal(1, -2, 1.0), DomainError);
}

TEST_CASE("charlier_orthonormal values") {
  CHECK(uni::charlier_orthonormal(0, 7, 1.3) == 1.0);
  CHECK(uni::charlier_orthonormal(1, 0, 2.0) == doctest::Approx(-2.0).epsilon(1e-15));
  // Generating-function Taylor coefficients (computer algebra).
  CHECK(uni::charlier_orthonormal(2, 3, 1.0) == doctest::Approx(0.7071067811865475).epsilon(1e-14));
  CHECK(uni::charlier_orthonormal(3, 5, 1.2) == doctest::Approx(0.4058895225634051).epsilon(1e-14));
}

TEST_CASE("orthonormality against the normalized Poisson weight") {
  for (double a : {0.8, 1.5, 3.0}) {
    const int cutoff = uni::poisson_cutoff(a, 1e-18, 1e-16, std::pow(1.0 + 60.0 / a + a, 20));
    double worst = 0.0;
    for (int n = 0; n <= 10; ++n) {
      for (int m = 0; m <= 10; ++m) {
        double sum = 0.0;
        for (int x = 0; x <= cutoff; ++x) {
          sum += uni::poisson_weight(x, a) * uni::charlier_orthonormal(n, x, a) * uni::charlier_orthonormal(m, x, a);
        }
        worst = std::max(worst, std::abs(sum - (n == m ? 1.0 : 0.0)));
      }
    }
    CAPTURE(a);
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("orthonormality needs the exp(-a^2) factor") {
  // Without it the diagonal sums to e^{a^2}, not 1.
  const double a = 1.5;
  double sum = 0.0;
  for (int x = 0; x <= 60; ++x) {
    sum += std::exp(2.0 * x * std::log(a) - std::lgamma(x + 1.0)) * std::pow(uni::charlier_orthonormal(2, x, a), 2);
  }
  CHECK(sum == doctest::Approx(std::exp(a * a)).epsilon(1e-10));
}

TEST_CASE("generating function") {
  for (double a : {0.8, 1.5, 3.0}) {
    for (double z : {0.1, 0.3}) {
      for (int x = 0; x <= 10; ++x) {
        const double closed = std::exp(-a * z) * std::pow(1.0 + z / a, x);
        double series = 0.0;
        for (int n = 0; n <= 40; ++n) {
          series += uni::charlier_orthonormal(n, x, a) * std::pow(z, n) / std::sqrt(std::tgamma(n + 1.0));
        }
        CHECK(std::abs(closed - series) < 1e-10);
      }
    }
  }
}

TEST_CASE("ladder_check") {
  SUBCASE("lowering annihilates the constant") {
    const uni::SiteFunction one = [](int) { return 1.0; };
    for (int x = 0; x < 10; ++x) CHECK(uni::lower(one, x, 1.5) == 0.0);
  }
  SUBCASE("single points") {
    const double a = 1.5;
    const uni::SiteFunction c1 = [a](int y) { return uni::charlier_orthonormal(1, y, a); };
    CHECK(std::abs(uni::lower(c1, 2, a) - uni::charlier_orthonormal(0, 2, a)) < 1e-12);
    const uni::SiteFunction c5 = [](int y) { return uni::charlier_orthonormal(5, y, 2.0); };
    CHECK(std::abs(uni::raise(c5, 10, 2.0) - std::sqrt(6.0) * uni::charlier_orthonormal(6, 10, 2.0)) < 1e-10);
  }
  SUBCASE("sweep") {
    const auto report = uni::ladder_check(10, 20, 1.5);
    CHECK(report.lowering.samples == 11 * 21);
    CHECK(report.relative.max_abs < 1e-12);
    CHECK(report.max() < 1e-6);  // values reach ~1e9 at x = 20
    const auto small = uni::ladder_check(6, 10, 2.0);
    CHECK(small.max() < 1e-10);
  }
}

TEST_CASE("difference operator: composition is the ground truth") {
  const uni::SiteFunction one = [](int) { return 1.0; };
  for (int x = 0; x < 8; ++x) CHECK(uni::difference_composed(one, x, 1.3) == 0.0);

  const double a = 1.2;
  const uni::SiteFunction c3 = [a](int y) { return uni::charlier_orthonormal(3, y, a); };
  CHECK(std::abs(uni::difference_composed(c3, 5, a) - 3.0 * c3(5)) < 1e-10);

  const auto report = uni::difference_check(5, 10, 1.5);
  CHECK(report.eigen.max_abs < 1e-9);
  CHECK(report.linear_form.max_abs < 1e-10);
  // The x^2 + a^2 constant term is not A_+ A_-.
  CHECK(report.quadratic_form.max_abs > 1.0);

  // Point diagnostic at n = 2, x = 4, a = 1.5: the forms differ by (x^2 - x) C_2(4).
  const uni::SiteFunction c2 = [](int y) { return uni::charlier_orthonormal(2, y, 1.5); };
  const double gap = uni::difference_quadratic(c2, 4, 1.5) - uni::difference_composed(c2, 4, 1.5);
  CHECK(gap == doctest::Approx(12.0 * c2(4)).epsilon(1e-12));
}

TEST_CASE("hermite") {
  CHECK(uni::hermite(0, 3.7) == 1.0);
  CHECK(uni::hermite(1, 0.5) == 1.0);
  CHECK(uni::hermite(4, 1.0) == -20.0);
  CHECK(uni::hermite(8, 0.5) == doctest::Approx(-895.0).epsilon(1e-14));
  const auto series = hermite_by_series(0.5, 8);
  for (int n = 0; n <= 8; ++n) CHECK(std::abs(uni::hermite(n, 0.5) - series[n]) < 1e-9);
  CHECK_THROWS_AS(uni::hermite(-1, 0.0), DomainError);
}

TEST_CASE("poisson weight") {
  CHECK(uni::poisson_weight(0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(uni::poisson_weight(3, 1.5) == doctest::Approx(std::exp(-2.25) * std::pow(2.25, 3) / 6.0).epsilon(1e-14));
  double total = 0.0;
  for (int x = 0; x <= uni::poisson_cutoff(2.0); ++x) total += uni::poisson_weight(x, 2.0);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  // Large arguments stay finite (log space).
  CHECK(std::isfinite(uni::poisson_weight(400, 16.0)));
  CHECK(uni::poisson_weight(400, 16.0) > 0.0);
}
