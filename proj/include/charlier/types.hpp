#pragma once

#include <compare>
#include <limits>
#include <string>

#include "charlier/errors.hpp"

namespace charlier {

/// A site (x1, x2) of the quarter lattice N x N.
///
/// Coordinates are stored signed so that shifted points can be formed and
/// then tested with in_lattice(); every public entry point that takes a
/// LatticePoint requires x1, x2 >= 0.
struct LatticePoint {
  int x1 = 0;
  int x2 = 0;

  friend constexpr bool operator==(LatticePoint, LatticePoint) = default;
  friend constexpr auto operator<=>(LatticePoint, LatticePoint) = default;

  constexpr bool in_lattice() const { return x1 >= 0 && x2 >= 0; }
};

/// Displacement applied by a shift operator T_{x1}^{d1} T_{x2}^{d2}.
struct Shift {
  int d1 = 0;
  int d2 = 0;

  friend constexpr bool operator==(Shift, Shift) = default;
  friend constexpr auto operator<=>(Shift, Shift) = default;
};

constexpr LatticePoint operator+(LatticePoint p, Shift s) { return {p.x1 + s.d1, p.x2 + s.d2}; }
constexpr Shift operator+(Shift a, Shift b) { return {a.d1 + b.d1, a.d2 + b.d2}; }

/// Polynomial degrees (n1, n2) of a bivariate Charlier polynomial.
struct ModeIndex {
  int n1 = 0;
  int n2 = 0;

  friend constexpr bool operator==(ModeIndex, ModeIndex) = default;
  constexpr int total() const { return n1 + n2; }
};

/// Energy-eigenstate label: eigenvalue N of H and 0 <= n <= N.
/// Maps to the mode (n, N - n).
struct EnergyLabel {
  int N = 0;
  int n = 0;

  constexpr ModeIndex mode() const { return {n, N - n}; }
};

/// Finite window [0..m1] x [0..m2] used wherever an infinite lattice sum is
/// truncated. tail_tol is the weight level below which the boundary
/// rows/columns are considered negligible.
struct TruncationSpec {
  int m1 = 0;
  int m2 = 0;
  double tail_tol = 1e-18;

  constexpr int size() const { return (m1 + 1) * (m2 + 1); }
};

std::string to_string(LatticePoint p);

void require_lattice_point(LatticePoint p, const char* where);
void require_mode(ModeIndex n, const char* where);
void require_label(EnergyLabel label, const char* where);

}  // namespace charlier
