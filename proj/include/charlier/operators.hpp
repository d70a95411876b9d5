#pragma once

#include <utility>

#include "charlier/bivariate.hpp"
#include "charlier/lattice.hpp"

// Difference operators of the bivariate Charlier oscillator.
//
// Operators built by composition (eigen_op, cross_ops, su2_generators, ...)
// are the ground truth. The *_explicit functions assemble the same operators
// directly from their expanded stencils so the two can be compared
// coefficient by coefficient.
namespace charlier::ops {

enum class Axis { One = 1, Two = 2 };
enum class Direction { Up, Down };

/// T_{x_i}^{+} or T_{x_i}^{-}. The bare downward shift has a unit
/// coefficient, so applying it at x_i = 0 throws OutOfDomain.
LatticeOperator shift(Axis axis, Direction dir);

/// Multiplication by x_1 or x_2.
LatticeOperator coordinate(Axis axis);

/// A_+^{(i)}: raises n_i by one with factor sqrt(n_i + 1).
LatticeOperator raising(Axis i, const ModelParams& params);
/// A_-^{(i)}: lowers n_i by one with factor sqrt(n_i).
LatticeOperator lowering(Axis i, const ModelParams& params);

/// Y_i = A_+^{(i)} A_-^{(i)}, with eigenvalue n_i on C_{n1,n2}.
LatticeOperator eigen_op(Axis i, const ModelParams& params);
LatticeOperator eigen_op_explicit(Axis i, const ModelParams& params);

/// (A_+^{(1)} A_-^{(2)}, A_+^{(2)} A_-^{(1)}).
std::pair<LatticeOperator, LatticeOperator> cross_ops(const ModelParams& params);
std::pair<LatticeOperator, LatticeOperator> cross_ops_explicit(const ModelParams& params);

/// The five-point Hamiltonian
///   H = -x1 T1^- - alpha^2 T1^+ - x2 T2^- - beta^2 T2^+ + x1 + x2 + alpha^2 + beta^2.
/// Depends on alpha and beta only.
LatticeOperator hamiltonian(double alpha, double beta);
LatticeOperator hamiltonian(const ModelParams& params);
/// Y_1 + Y_2 built from the ladder operators.
LatticeOperator hamiltonian_composed(const ModelParams& params);

struct Su2 {
  LatticeOperator jx;
  LatticeOperator jy;
  LatticeOperator jz;
  LatticeOperator j_plus;   // J_X + i J_Y
  LatticeOperator j_minus;  // J_X - i J_Y
  LatticeOperator casimir;  // J_X^2 + J_Y^2 + J_Z^2
};

Su2 su2_generators(const ModelParams& params);

/// (H/2)(H/2 + 1), the image of the Casimir under the Schwinger map.
LatticeOperator casimir_from_hamiltonian(const ModelParams& params);

/// w^{1/2} X w^{-1/2}. Each term c(x) T^s becomes c(x) sqrt(w(x) / w(x+s))
/// with the weight ratio formed from products of (x_i + k) / a^2, never as
/// a quotient of two weights.
LatticeOperator gauge_transform(const LatticeOperator& op, const ModelParams& params);

/// Multiplication by w(x)^power, from the log weight. Used to cross-check
/// gauge_transform on small windows where w is not tiny.
LatticeOperator weight_power(const ModelParams& params, double power);

/// Closed forms of the gauged ladder operators, e.g.
///   Abar_+^{(1)} = cos(t) sqrt(x1) T1^- - sin(t) sqrt(x2) T2^- - omega.
LatticeOperator gauged_raising_closed_form(Axis i, const ModelParams& params);
LatticeOperator gauged_lowering_closed_form(Axis i, const ModelParams& params);
/// sin(t) sqrt(x1+1) T1^- + cos(t) sqrt(x2+1) T2^- - zeta: the second gauged
/// lowering operator written with downward shifts. It is not conjugate to
/// A_-^{(2)}; kept only to measure how far that variant is from the real one.
LatticeOperator gauged_lowering2_downshift_variant(const ModelParams& params);

/// k1 Y_1 + k2 Y_2, spectrum k1 n1 + k2 n2.
LatticeOperator anisotropic_hamiltonian(double k1, double k2, const ModelParams& params);
LatticeOperator anisotropic_hamiltonian_explicit(double k1, double k2, const ModelParams& params);

}  // namespace charlier::ops
