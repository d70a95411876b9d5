#pragma once

#include <vector>

#include <Eigen/Dense>

#include "charlier/bivariate.hpp"
#include "charlier/lattice.hpp"
#include "charlier/operators.hpp"
#include "charlier/report.hpp"

namespace charlier {

/// Phi_{N,n} = C_{n, N-n}: eigenfunction of H with eigenvalue N.
double phi(EnergyLabel label, LatticePoint p, const ModelParams& params);

/// Upsilon_{N,n} = sqrt(w) Phi_{N,n}, orthonormal in plain l^2(N x N).
double upsilon(EnergyLabel label, LatticePoint p, const ModelParams& params);

/// Phi and Upsilon for every N <= max_energy, tabulated on one window.
class StateTable {
 public:
  StateTable(const ModelParams& params, int max_energy, Window window);

  const ModelParams& params() const { return params_; }
  Window window() const { return window_; }
  int max_energy() const { return table_.max_degree(); }

  double phi(EnergyLabel label, LatticePoint p) const;
  double upsilon(EnergyLabel label, LatticePoint p) const;

  LatticeFunction phi_function(EnergyLabel label) const;
  LatticeFunction upsilon_function(EnergyLabel label) const;

  /// Plain l^2 inner product of two Upsilon states over the window.
  double overlap(EnergyLabel a, EnergyLabel b) const;

 private:
  ModelParams params_;
  Window window_;
  CharlierTable table_;
  std::vector<double> sqrt_w_;
};

/// sum_{N <= max_energy} sum_n Upsilon_{N,n}(x) Upsilon_{N,n}(y).
/// Tends to delta_{xy}; the rate is not known in closed form.
double completeness_partial_sum(LatticePoint x, LatticePoint y, int max_energy, const ModelParams& params);

/// Structure of the N-th energy level.
struct DegeneracyReport {
  int energy = 0;
  int multiplicity = 0;
  double gram = 0.0;          // max |<Upsilon_n, Upsilon_m> - delta| over the level
  Residual eigen;             // |Hbar Upsilon_{N,n} - N Upsilon_{N,n}|
  Residual j_plus;            // |Jbar_+ Upsilon_{N,n} - sqrt((n+1)(N-n)) Upsilon_{N,n+1}|
  Residual j_minus;           // |Jbar_- Upsilon_{N,n} - sqrt(n(N-n+1)) Upsilon_{N,n-1}|
  double j_plus_coeff = 0.0;  // max |<Upsilon_{n+1}, Jbar_+ Upsilon_n> - sqrt((n+1)(N-n))|
  double j_minus_coeff = 0.0;
  double closure = 0.0;       // l^2 norm of J_{+-} Upsilon_n minus its projection on the level
};

/// Pointwise residuals are taken on [0..m1-1] x [0..m2-1]; inner products on the full window.
DegeneracyReport degeneracy_report(int energy, const ModelParams& params, const TruncationSpec& trunc);

enum class BoundaryPolicy { Flag, Throw };

/// Matrix of an operator in the point basis of a window (index x1 (m2+1) + x2).
struct TruncatedMatrix {
  Window window;
  Eigen::MatrixXcd matrix;
  /// Rows whose stencil reaches past the window; those reads are dropped.
  std::vector<int> boundary_rows;
};

/// Assembles the (optionally gauged) operator on the window. Reads past
/// the window are dropped and their rows flagged, or throw OutOfDomain
/// under BoundaryPolicy::Throw. Eigenvalues only approximate the lattice
/// spectrum; the error is governed by the weight at the boundary.
TruncatedMatrix truncated_matrix(const LatticeOperator& op, const TruncationSpec& trunc, bool gauged,
                                 const ModelParams& params, BoundaryPolicy policy = BoundaryPolicy::Flag);

/// max |M - M^H|.
double hermiticity_defect(const TruncatedMatrix& m);

/// Lowest `count` eigenvalues, ascending. Requires a Hermitian matrix.
std::vector<double> low_lying_eigenvalues(const TruncatedMatrix& m, int count);

}  // namespace charlier
