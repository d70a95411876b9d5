#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "charlier/lattice.hpp"
#include "charlier/operators.hpp"
#include "charlier/probes.hpp"

using namespace charlier;
using ops::Axis;
using ops::Direction;

namespace {

Complex coord_poly(LatticePoint p) { return Complex(p.x1 * p.x1 - 2.0 * p.x2, 0.5 * p.x1 * p.x2); }

// Independent stencil evaluation of sum_s c_s(x) f(x+s), skipping zero coefficients.
Complex naive_apply(const LatticeOperator& op, const LatticeFunction& f, LatticePoint p) {
  Complex sum = 0.0;
  for (const auto& t : op.terms()) {
    const Complex c = t.coeff(p);
    if (c != 0.0) sum += c * f(p + t.shift);
  }
  return sum;
}

}  // namespace

TEST_CASE("LatticeFunction domains") {
  const auto f = LatticeFunction::everywhere(coord_poly);
  CHECK(f({3, 2}) == Complex(5.0, 3.0));
  CHECK_THROWS_AS(f({-1, 0}), OutOfDomain);
  const auto g = LatticeFunction::on_window({4, 4}, coord_poly);
  CHECK(g({4, 4}) == coord_poly({4, 4}));
  CHECK_THROWS_AS(g({5, 0}), OutOfDomain);
  CHECK_FALSE(g.defined_at({0, 5}));
  CHECK(g.defined_at({0, 4}));
  const auto t = f.materialize({2, 3});
  CHECK(t({2, 3}) == coord_poly({2, 3}));
  CHECK_THROWS_AS(t({3, 0}), OutOfDomain);
  CHECK_THROWS_AS(LatticeFunction::tabulated({1, 1}, std::vector<Complex>(3)), DomainError);
  const std::vector<double> real{1, 2, 3, 4};
  const auto r = LatticeFunction::tabulated({1, 1}, std::span<const double>(real));
  CHECK(r({1, 0}) == Complex(3.0));
  // Sum of a window function and an everywhere function lives on the window.
  CHECK((f + g).window().has_value());
  CHECK((2.0 * f - f)({3, 1}) == f({3, 1}));
}

TEST_CASE("shifts and boundary convention") {
  const auto f = LatticeFunction::everywhere(coord_poly);
  const auto up = ops::shift(Axis::One, Direction::Up);
  const auto down = ops::shift(Axis::Two, Direction::Down);
  CHECK(up.apply_at(f, {2, 2}) == coord_poly({3, 2}));
  CHECK(down.apply_at(f, {2, 2}) == coord_poly({2, 1}));
  // Bare T^- at the edge reads x = -1.
  CHECK_THROWS_AS(down.apply_at(f, {2, 0}), OutOfDomain);
  // x_2 T_2^- vanishes there by convention.
  const auto guarded = ops::coordinate(Axis::Two) * down;
  CHECK(guarded.apply_at(f, {2, 0}) == Complex(0.0));
  CHECK(guarded.apply_at(f, {2, 3}) == 3.0 * coord_poly({2, 2}));
  // The Hamiltonian never reads off the lattice.
  const auto h = ops::hamiltonian(1.1, 0.9);
  for (int x1 = 0; x1 <= 3; ++x1) {
    for (int x2 = 0; x2 <= 3; ++x2) CHECK_NOTHROW(h.apply_at(f, {x1, x2}));
  }
  CHECK_THROWS_AS(h.apply_at(f, {-1, 0}), OutOfDomain);
}

TEST_CASE("apply on a window shrinks by the upward reach") {
  const auto g = LatticeFunction::on_window({6, 5}, coord_poly);
  const auto h = ops::hamiltonian(1.0, 1.0);
  const auto hg = h.apply(g);
  REQUIRE(hg.window().has_value());
  CHECK(hg.window()->m1 == 5);
  CHECK(hg.window()->m2 == 4);
  CHECK_THROWS_AS(hg({6, 0}), OutOfDomain);
  CHECK(hg({5, 4}) == naive_apply(h, g, {5, 4}));
}

TEST_CASE("linearity") {
  ProbeSource src(11);
  const auto h = ops::hamiltonian(1.3, 0.7);
  const auto [c12, c21] = ops::cross_ops(ModelParams(1.3, 0.7, 0.5));
  for (int k = 0; k < 5; ++k) {
    const auto f = src.function();
    const auto g = src.function();
    const Complex a(src.uniform(-1, 1), src.uniform(-1, 1));
    const auto pts = src.points(20, 14);
    for (const auto* op : {&h, &c12, &c21}) {
      CHECK(max_difference(op->apply(a * f + g), a * op->apply(f) + op->apply(g), pts) < 1e-12);
    }
  }
}

TEST_CASE("stencil radius") {
  CHECK(LatticeOperator().stencil_radius() == 0);
  CHECK(LatticeOperator::identity().stencil_radius() == 0);
  CHECK(ops::hamiltonian(1.0, 2.0).stencil_radius() == 1);
  const auto h = ops::hamiltonian(1.0, 2.0);
  CHECK((h * h).stencil_radius() == 2);
  CHECK(LatticeOperator::shift({3, -1}).stencil_radius() == 3);
  // Probe: a delta at x0 only reaches points within the radius.
  const auto delta = LatticeFunction::everywhere([](LatticePoint p) {
    return p.x1 == 6 && p.x2 == 6 ? Complex(1.0) : Complex(0.0);
  });
  const auto hh = h * h;
  int reach = 0;
  for (int x1 = 0; x1 <= 12; ++x1) {
    for (int x2 = 0; x2 <= 12; ++x2) {
      if (hh.apply_at(delta, {x1, x2}) != 0.0) reach = std::max({reach, std::abs(x1 - 6), std::abs(x2 - 6)});
    }
  }
  CHECK(reach == hh.stencil_radius());
}

TEST_CASE("composition equals nested application") {
  ProbeSource src(5);
  const ModelParams p(1.2, 0.9, 0.4);
  const auto a = ops::raising(Axis::One, p);
  const auto b = ops::lowering(Axis::Two, p);
  const auto h = ops::hamiltonian(p);
  for (int k = 0; k < 4; ++k) {
    const auto f = src.function();
    const auto pts = src.points(30, 14);
    for (const auto& [x, y] : {std::pair{&a, &b}, std::pair{&h, &a}, std::pair{&b, &h}}) {
      CHECK(max_difference((*x * *y).apply(f), x->apply(y->apply(f)), pts) < 1e-12);
    }
  }
}

TEST_CASE("operator arithmetic and coefficients") {
  const auto x1 = ops::coordinate(Axis::One);
  const auto t1 = ops::shift(Axis::One, Direction::Up);
  // [T1^+, x1] = T1^+
  const auto c = commutator(t1, x1);
  const auto pts = window_points({5, 5});
  CHECK(max_coefficient_difference(c, t1, pts) == 0.0);
  CHECK(max_coefficient_difference(commutator(x1, x1), LatticeOperator(), pts) == 0.0);
  const auto sum = t1 + 2.0 * t1 - t1;
  CHECK(sum.terms().size() == 1);
  CHECK(sum.coefficient({1, 0}, {2, 2}) == Complex(2.0));
  CHECK(sum.coefficient({0, 1}, {2, 2}) == Complex(0.0));
  const auto m = LatticeOperator::multiplication([](LatticePoint p) { return Complex(p.x1 + 1.0); });
  CHECK((t1 * m).coefficient({1, 0}, {3, 0}) == Complex(5.0));
  CHECK((m * t1).coefficient({1, 0}, {3, 0}) == Complex(4.0));
  CHECK(window_points({1, 2}).size() == 6);
}

TEST_CASE("composition throws only when a nonzero coefficient reads off the lattice") {
  const auto down = ops::shift(Axis::One, Direction::Down);
  const auto f = LatticeFunction::constant(1.0);
  CHECK_THROWS_AS((down * down).apply_at(f, {1, 0}), OutOfDomain);
  const auto guarded = ops::coordinate(Axis::One) * down;
  CHECK((guarded * guarded).apply_at(f, {1, 0}) == Complex(0.0));
  CHECK((guarded * guarded).apply_at(f, {2, 0}) == Complex(2.0));
}

TEST_CASE("ProbeSource is reproducible") {
  ProbeSource a(7), b(7), c(8);
  const auto fa = a.function(), fb = b.function(), fc = c.function();
  CHECK(fa({3, 4}) == fb({3, 4}));
  CHECK(fa({3, 4}) != fc({3, 4}));
  CHECK(fa({13, 0}) == Complex(0.0));
  for (int i = 0; i < 100; ++i) {
    const int k = a.integer(2, 5);
    CHECK(k >= 2);
    CHECK(k <= 5);
    const double u = a.uniform(-1, 1);
    CHECK(u >= -1);
    CHECK(u < 1);
  }
}
