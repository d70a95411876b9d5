#include "charlier/operators.hpp"

#include <cmath>

namespace charlier::ops {

namespace {

using Coefficient = LatticeOperator::Coefficient;

constexpr Shift kUp1{1, 0};
constexpr Shift kDown1{-1, 0};
constexpr Shift kUp2{0, 1};
constexpr Shift kDown2{0, -1};
constexpr Shift kDown1Up2{-1, 1};
constexpr Shift kUp1Down2{1, -1};
constexpr Shift kStay{0, 0};

// c * x1 and c * x2 as coefficient functions.
Coefficient times_x1(double c) {
  return [c](LatticePoint p) { return Complex(c * p.x1); };
}
Coefficient times_x2(double c) {
  return [c](LatticePoint p) { return Complex(c * p.x2); };
}

LatticeOperator constant(double c) { return LatticeOperator::shift(kStay, c); }

}  // namespace

LatticeOperator shift(Axis axis, Direction dir) {
  const int d = dir == Direction::Up ? 1 : -1;
  return LatticeOperator::shift(axis == Axis::One ? Shift{d, 0} : Shift{0, d});
}

LatticeOperator coordinate(Axis axis) {
  return LatticeOperator::multiplication(axis == Axis::One ? times_x1(1.0) : times_x2(1.0));
}

LatticeOperator raising(Axis i, const ModelParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  const double c = params.cos();
  const double s = params.sin();
  if (i == Axis::One) {
    return LatticeOperator::term(kDown1, times_x1(c / a)) + LatticeOperator::term(kDown2, times_x2(-s / b)) +
           constant(-params.omega());
  }
  return LatticeOperator::term(kDown1, times_x1(s / a)) + LatticeOperator::term(kDown2, times_x2(c / b)) +
         constant(-params.zeta());
}

LatticeOperator lowering(Axis i, const ModelParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  const double c = params.cos();
  const double s = params.sin();
  if (i == Axis::One) {
    return LatticeOperator::shift(kUp1, a * c) + LatticeOperator::shift(kUp2, -b * s) + constant(-params.omega());
  }
  return LatticeOperator::shift(kUp1, a * s) + LatticeOperator::shift(kUp2, b * c) + constant(-params.zeta());
}

LatticeOperator eigen_op(Axis i, const ModelParams& params) { return raising(i, params) * lowering(i, params); }

LatticeOperator eigen_op_explicit(Axis i, const ModelParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  const double c = params.cos();
  const double s = params.sin();
  const double cs = c * s;
  const double sign = i == Axis::One ? -1.0 : 1.0;
  // Coefficients of [x1/a T1^- + a T1^+] and [x2/b T2^- + b T2^+].
  const double k1 = i == Axis::One ? -params.omega() * c : -params.zeta() * s;
  const double k2 = i == Axis::One ? params.omega() * s : -params.zeta() * c;
  const double shift0 = i == Axis::One ? params.omega() * params.omega() : params.zeta() * params.zeta();
  const double w1 = i == Axis::One ? c * c : s * s;
  const double w2 = i == Axis::One ? s * s : c * c;
  return LatticeOperator::term(kDown1Up2, times_x1(sign * cs * b / a)) +
         LatticeOperator::term(kUp1Down2, times_x2(sign * cs * a / b)) +
         LatticeOperator::term(kDown1, times_x1(k1 / a)) + LatticeOperator::shift(kUp1, k1 * a) +
         LatticeOperator::term(kDown2, times_x2(k2 / b)) + LatticeOperator::shift(kUp2, k2 * b) +
         LatticeOperator::multiplication(
             [w1, w2, shift0](LatticePoint p) { return Complex(p.x1 * w1 + p.x2 * w2 + shift0); });
}

std::pair<LatticeOperator, LatticeOperator> cross_ops(const ModelParams& params) {
  return {raising(Axis::One, params) * lowering(Axis::Two, params),
          raising(Axis::Two, params) * lowering(Axis::One, params)};
}

std::pair<LatticeOperator, LatticeOperator> cross_ops_explicit(const ModelParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  const double c = params.cos();
  const double s = params.sin();
  const double om = params.omega();
  const double ze = params.zeta();
  const double diag = om * ze;
  const auto constant_part = LatticeOperator::multiplication(
      [cs = c * s, diag](LatticePoint p) { return Complex((p.x1 - p.x2) * cs + diag); });

  const auto plus1_minus2 =
      LatticeOperator::term(kDown1Up2, times_x1(c * c * b / a)) +
      LatticeOperator::term(kUp1Down2, times_x2(-s * s * a / b)) +
      LatticeOperator::term(kDown1, times_x1(-ze * c / a)) + LatticeOperator::shift(kUp1, -a * om * s) +
      LatticeOperator::term(kDown2, times_x2(ze * s / b)) + LatticeOperator::shift(kUp2, -b * om * c) +
      constant_part;

  const auto plus2_minus1 =
      LatticeOperator::term(kDown1Up2, times_x1(-s * s * b / a)) +
      LatticeOperator::term(kUp1Down2, times_x2(c * c * a / b)) +
      LatticeOperator::term(kDown1, times_x1(-om * s / a)) + LatticeOperator::shift(kUp1, -a * ze * c) +
      LatticeOperator::term(kDown2, times_x2(-om * c / b)) + LatticeOperator::shift(kUp2, b * ze * s) +
      constant_part;

  return {plus1_minus2, plus2_minus1};
}

LatticeOperator hamiltonian(double alpha, double beta) {
  const double a2 = alpha * alpha;
  const double b2 = beta * beta;
  return LatticeOperator::term(kDown1, times_x1(-1.0)) + LatticeOperator::shift(kUp1, -a2) +
         LatticeOperator::term(kDown2, times_x2(-1.0)) + LatticeOperator::shift(kUp2, -b2) +
         LatticeOperator::multiplication([a2, b2](LatticePoint p) { return Complex(p.x1 + p.x2 + a2 + b2); });
}

LatticeOperator hamiltonian(const ModelParams& params) { return hamiltonian(params.alpha(), params.beta()); }

LatticeOperator hamiltonian_composed(const ModelParams& params) {
  return eigen_op(Axis::One, params) + eigen_op(Axis::Two, params);
}

Su2 su2_generators(const ModelParams& params) {
  const auto [c12, c21] = cross_ops(params);
  const Complex i{0.0, 1.0};
  Su2 j;
  j.jx = 0.5 * (c12 + c21);
  j.jy = (1.0 / (2.0 * i)) * (c12 - c21);
  j.jz = 0.5 * (eigen_op(Axis::One, params) - eigen_op(Axis::Two, params));
  j.j_plus = j.jx + i * j.jy;
  j.j_minus = j.jx - i * j.jy;
  j.casimir = j.jx * j.jx + j.jy * j.jy + j.jz * j.jz;
  return j;
}

LatticeOperator casimir_from_hamiltonian(const ModelParams& params) {
  const auto h = hamiltonian(params);
  return 0.25 * (h * h) + 0.5 * h;
}

namespace {

// w(x) / w(x + s) for the Poisson product weight, as a product of
// ratios (x_i + k) / a^2 or a^2 / (x_i - k).
double weight_ratio(LatticePoint p, Shift s, double a2, double b2) {
  auto axis_ratio = [](int x, int d, double m) {
    double r = 1.0;
    for (int k = 1; k <= d; ++k) r *= (x + k) / m;
    for (int k = 0; k < -d; ++k) r *= m / (x - k);
    return r;
  };
  return axis_ratio(p.x1, s.d1, a2) * axis_ratio(p.x2, s.d2, b2);
}

}  // namespace

LatticeOperator gauge_transform(const LatticeOperator& op, const ModelParams& params) {
  const double a2 = params.alpha() * params.alpha();
  const double b2 = params.beta() * params.beta();
  LatticeOperator out;
  for (const auto& t : op.terms()) {
    out = out + LatticeOperator::term(t.shift, [coeff = t.coeff, s = t.shift, a2, b2](LatticePoint p) -> Complex {
      const Complex c = coeff(p);
      if (c == 0.0) return 0.0;
      if (!(p + s).in_lattice()) throw OutOfDomain("gauged operator reads below the lattice at " + to_string(p + s));
      return c * std::sqrt(weight_ratio(p, s, a2, b2));
    });
  }
  return out;
}

LatticeOperator weight_power(const ModelParams& params, double power) {
  return LatticeOperator::multiplication(
      [params, power](LatticePoint p) { return Complex(std::exp(power * log_weight(p, params))); });
}

namespace {

Coefficient sqrt_x1(double c, int offset) {
  return [c, offset](LatticePoint p) { return Complex(c * std::sqrt(static_cast<double>(p.x1 + offset))); };
}
Coefficient sqrt_x2(double c, int offset) {
  return [c, offset](LatticePoint p) { return Complex(c * std::sqrt(static_cast<double>(p.x2 + offset))); };
}

}  // namespace

LatticeOperator gauged_raising_closed_form(Axis i, const ModelParams& params) {
  const double c = params.cos();
  const double s = params.sin();
  if (i == Axis::One) {
    return LatticeOperator::term(kDown1, sqrt_x1(c, 0)) + LatticeOperator::term(kDown2, sqrt_x2(-s, 0)) +
           constant(-params.omega());
  }
  return LatticeOperator::term(kDown1, sqrt_x1(s, 0)) + LatticeOperator::term(kDown2, sqrt_x2(c, 0)) +
         constant(-params.zeta());
}

LatticeOperator gauged_lowering_closed_form(Axis i, const ModelParams& params) {
  const double c = params.cos();
  const double s = params.sin();
  if (i == Axis::One) {
    return LatticeOperator::term(kUp1, sqrt_x1(c, 1)) + LatticeOperator::term(kUp2, sqrt_x2(-s, 1)) +
           constant(-params.omega());
  }
  return LatticeOperator::term(kUp1, sqrt_x1(s, 1)) + LatticeOperator::term(kUp2, sqrt_x2(c, 1)) +
         constant(-params.zeta());
}

LatticeOperator gauged_lowering2_downshift_variant(const ModelParams& params) {
  return LatticeOperator::term(kDown1, sqrt_x1(params.sin(), 1)) +
         LatticeOperator::term(kDown2, sqrt_x2(params.cos(), 1)) + constant(-params.zeta());
}

LatticeOperator anisotropic_hamiltonian(double k1, double k2, const ModelParams& params) {
  return Complex(k1) * eigen_op(Axis::One, params) + Complex(k2) * eigen_op(Axis::Two, params);
}

LatticeOperator anisotropic_hamiltonian_explicit(double k1, double k2, const ModelParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  const double c = params.cos();
  const double s = params.sin();
  const double om = params.omega();
  const double ze = params.zeta();
  const double cross = (k2 - k1) * c * s;
  const double g1 = -(k1 * om * c + k2 * ze * s);
  const double g2 = k1 * om * s - k2 * ze * c;
  return LatticeOperator::term(kDown1Up2, times_x1(cross * b / a)) +
         LatticeOperator::term(kUp1Down2, times_x2(cross * a / b)) +
         LatticeOperator::term(kDown1, times_x1(g1 / a)) + LatticeOperator::shift(kUp1, g1 * a) +
         LatticeOperator::term(kDown2, times_x2(g2 / b)) + LatticeOperator::shift(kUp2, g2 * b) +
         LatticeOperator::multiplication([k1, k2, c, s, om, ze](LatticePoint p) {
           return Complex(k1 * (p.x1 * c * c + p.x2 * s * s + om * om) + k2 * (p.x1 * s * s + p.x2 * c * c + ze * ze));
         });
}

}  // namespace charlier::ops
