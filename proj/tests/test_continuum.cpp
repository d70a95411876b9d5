#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "charlier/continuum.hpp"
#include "charlier/parallel.hpp"

using namespace charlier::continuum;

namespace {

// Physicists' Hermite by three-term recurrence.
double hermite_rec(int n, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double oracle_phi(int N, int n, double x1, double x2) {
  const double norm = std::sqrt(std::numbers::pi * std::pow(2.0, N) * std::tgamma(n + 1.0) * std::tgamma(N - n + 1.0));
  return std::exp(-(x1 * x1 + x2 * x2) / 2) * hermite_rec(n, x1) * hermite_rec(N - n, x2) / norm;
}

// Ladder action from central differences of the rotated wavefunction.
double oracle_ladder(Ladder which, int N, int n, double theta, PlanePoint xt) {
  const double h = 1e-5;
  const auto f = [&](double a, double b) { return rotated_wavefunction(N, n, theta, {a, b}); };
  const double d1 = (f(xt.x1 + h, xt.x2) - f(xt.x1 - h, xt.x2)) / (2 * h);
  const double d2 = (f(xt.x1, xt.x2 + h) - f(xt.x1, xt.x2 - h)) / (2 * h);
  const double v = f(xt.x1, xt.x2);
  const double s = std::sqrt(2.0);
  const double up1 = (xt.x1 * v - d1) / s, up2 = (xt.x2 * v - d2) / s;
  const double dn1 = (xt.x1 * v + d1) / s, dn2 = (xt.x2 * v + d2) / s;
  const double c = std::cos(theta), sn = std::sin(theta);
  switch (which) {
    case Ladder::Raise1: return c * up1 - sn * up2;
    case Ladder::Raise2: return sn * up1 + c * up2;
    case Ladder::Lower1: return c * dn1 - sn * dn2;
    case Ladder::Lower2: return sn * dn1 + c * dn2;
  }
  return 0.0;
}

}  // namespace

TEST_CASE("scaling map") {
  const ScalingMap m{2.0, 3.0};
  CHECK(m.to_plane1(4.0) == doctest::Approx(0.0));
  CHECK(m.to_plane2(9.0 + 3.0 * std::sqrt(2.0)) == doctest::Approx(1.0));
  CHECK(m.to_lattice1(m.to_plane1(7.0)) == doctest::Approx(7.0));
  CHECK(m.to_lattice2(m.to_plane2(2.5)) == doctest::Approx(2.5));
  CHECK(m.density_factor() == doctest::Approx(std::sqrt(2.0 * 2.0 * 3.0)));
}

TEST_CASE("rotation") {
  const auto r = rotate({1.0, 0.0}, std::numbers::pi / 2);
  CHECK(r.x1 == doctest::Approx(0.0));
  CHECK(r.x2 == doctest::Approx(1.0));
  const auto q = rotate(rotate({0.3, -0.7}, 0.4), -0.4);
  CHECK(q.x1 == doctest::Approx(0.3));
  CHECK(q.x2 == doctest::Approx(-0.7));
}

TEST_CASE("oscillator wavefunctions") {
  CHECK(oscillator_wavefunction(0, 0, 0, 0) == doctest::Approx(0.564189583547756).epsilon(1e-14));
  for (int N = 0; N <= 4; ++N) {
    for (int n = 0; n <= N; ++n) {
      for (double x : {-1.5, -0.2, 0.0, 0.9, 2.1}) {
        CHECK(oscillator_wavefunction(N, n, x, 0.7 - x) == doctest::Approx(oracle_phi(N, n, x, 0.7 - x)).epsilon(1e-12));
      }
      CHECK(quadrature_norm(N, n) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  CHECK(rotated_wavefunction(2, 1, 0.4, {0.3, 0.5}) ==
        doctest::Approx(oscillator_wavefunction(2, 1, rotate({0.3, 0.5}, 0.4).x1, rotate({0.3, 0.5}, 0.4).x2)));
  CHECK(rotated_wavefunction(2, 1, 0.0, {0.3, 0.5}) == oscillator_wavefunction(2, 1, 0.3, 0.5));
}

TEST_CASE("ladder names") {
  for (auto w : {Ladder::Raise1, Ladder::Raise2, Ladder::Lower1, Ladder::Lower2}) CHECK(parse_ladder(ladder_name(w)) == w);
  CHECK(ladder_name(Ladder::Lower2) == "lower2");
  CHECK_THROWS(parse_ladder("sideways"));
}

TEST_CASE("analytic ladder action matches finite differences") {
  for (auto w : {Ladder::Raise1, Ladder::Raise2, Ladder::Lower1, Ladder::Lower2}) {
    for (double theta : {0.0, 0.4, -1.1}) {
      for (const PlanePoint x : {PlanePoint{0.2, -0.4}, PlanePoint{1.3, 0.5}, PlanePoint{-0.8, 1.7}}) {
        CHECK(apply_ladder(w, 2, 1, theta, x) == doctest::Approx(oracle_ladder(w, 2, 1, theta, x)).epsilon(1e-7));
      }
    }
  }
  // a_1 lowers the x1 quantum number at theta = 0: a1 phi_{1,1} = phi_{0,0}.
  CHECK(apply_ladder(Ladder::Lower1, 1, 1, 0.0, {0.3, 0.2}) == doctest::Approx(oscillator_wavefunction(0, 0, 0.3, 0.2)));
  CHECK(apply_ladder(Ladder::Lower1, 0, 0, 0.0, {0.3, 0.2}) == doctest::Approx(0.0));
}

TEST_CASE("limit errors shrink with scale") {
  const std::vector<double> scales{2, 4, 8, 16};
  const auto weight = convergence_scan(LimitQuantity::Weight, scales, 0, 0, 0.0, 2.0);
  const auto wf = convergence_scan(LimitQuantity::Wavefunction, scales, 2, 1, 0.4, 2.0);
  const auto lad = convergence_scan(LimitQuantity::Ladder, scales, 1, 0, 0.3, 2.0, Ladder::Lower2);
  REQUIRE(weight.size() == 4);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(weight[i].sup_error < weight[i - 1].sup_error);
    CHECK(wf[i].sup_error < wf[i - 1].sup_error);
    CHECK(lad[i].sup_error < lad[i - 1].sup_error);
  }
  CHECK(weight[0].quantity == "weight");
  CHECK(wf[0].quantity == "wavefunction");
  CHECK(lad[0].quantity == "ladder:lower2");
  CHECK(wf[3].scale == 16.0);
  CHECK(wf[3].sup_error < 0.05);
  CHECK(weight_limit_error(16, 2.0) == weight[3].sup_error);
}

TEST_CASE("parallel_for") {
  std::vector<int> slots(100, 0);
  charlier::parallel_for(100, [&](int i) { slots[i] = i * i; });
  for (int i = 0; i < 100; ++i) CHECK(slots[i] == i * i);
  CHECK_THROWS_AS(charlier::parallel_for(10, [](int i) { if (i == 7) throw std::runtime_error("boom"); }),
                  std::runtime_error);
  setenv("CHARLIER_LATTICE_THREADS", "3", 1);
  CHECK(charlier::worker_count() == 3);
  setenv("CHARLIER_LATTICE_THREADS", "zero", 1);
  CHECK(charlier::worker_count() >= 1);
  unsetenv("CHARLIER_LATTICE_THREADS");
  // Results do not depend on the worker count.
  setenv("CHARLIER_LATTICE_THREADS", "1", 1);
  const auto serial = convergence_scan(LimitQuantity::Weight, {2, 4, 8}, 0, 0, 0.0, 2.0);
  unsetenv("CHARLIER_LATTICE_THREADS");
  const auto threaded = convergence_scan(LimitQuantity::Weight, {2, 4, 8}, 0, 0, 0.0, 2.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(serial[i].sup_error == threaded[i].sup_error);
}
