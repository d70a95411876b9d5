#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "charlier/types.hpp"

namespace charlier {

using Complex = std::complex<double>;

/// Upper corner of a finite window [0..m1] x [0..m2].
struct Window {
  int m1 = 0;
  int m2 = 0;

  constexpr bool contains(LatticePoint p) const { return p.in_lattice() && p.x1 <= m1 && p.x2 <= m2; }
  constexpr int size() const { return (m1 + 1) * (m2 + 1); }
  constexpr int index(LatticePoint p) const { return p.x1 * (m2 + 1) + p.x2; }
};

/// Complex-valued function on N x N.
///
/// Either defined on the whole quarter lattice, or backed by a finite
/// window. Reading a negative coordinate, or a point past the window,
/// throws OutOfDomain; there is no implicit zero extension.
class LatticeFunction {
 public:
  using Eval = std::function<Complex(LatticePoint)>;

  /// Defined on all of N x N.
  static LatticeFunction everywhere(Eval eval);
  /// Defined on [0..w.m1] x [0..w.m2] only.
  static LatticeFunction on_window(Window w, Eval eval);
  /// Row-major samples on a window.
  static LatticeFunction tabulated(Window w, std::vector<Complex> values);
  static LatticeFunction tabulated(Window w, std::span<const double> values);
  static LatticeFunction constant(Complex c);

  Complex operator()(LatticePoint p) const;
  const std::optional<Window>& window() const { return window_; }
  bool defined_at(LatticePoint p) const { return p.in_lattice() && (!window_ || window_->contains(p)); }

  /// Evaluates every point of w into a tabulated copy.
  LatticeFunction materialize(Window w) const;

  LatticeFunction operator+(const LatticeFunction& g) const;
  LatticeFunction operator-(const LatticeFunction& g) const;
  friend LatticeFunction operator*(Complex c, const LatticeFunction& f);

 private:
  LatticeFunction(std::optional<Window> window, Eval eval) : window_(window), eval_(std::move(eval)) {}

  std::optional<Window> window_;
  Eval eval_;
};

/// Linear difference operator sum_s c_s(x) T^s with point-dependent
/// complex coefficients and integer shifts s = (d1, d2).
///
/// apply() evaluates (Xf)(x) = sum_s c_s(x) f(x + s). A term whose
/// coefficient vanishes at x is skipped, which is exactly the x_i T^- boundary
/// convention: every downward shift of a difference operator here carries an
/// x_i factor, so the read at x_i = -1 never happens. A nonzero coefficient
/// that would read below the lattice throws OutOfDomain.
///
/// Composition is closed: (c1 T^{s1})(c2 T^{s2}) = c1(x) c2(x + s1) T^{s1+s2}.
/// Terms are kept merged by shift.
class LatticeOperator {
 public:
  using Coefficient = std::function<Complex(LatticePoint)>;

  struct Term {
    Shift shift;
    Coefficient coeff;
  };

  /// The zero operator.
  LatticeOperator() = default;

  static LatticeOperator identity();
  static LatticeOperator shift(Shift s, Complex c = 1.0);
  /// c(x) T^s.
  static LatticeOperator term(Shift s, Coefficient c);
  /// Multiplication by c(x).
  static LatticeOperator multiplication(Coefficient c);

  std::span<const Term> terms() const { return terms_; }

  /// Largest |d1| or |d2| over all shifts.
  int stencil_radius() const;

  /// Coefficient of T^s at p (zero if s is absent).
  Complex coefficient(Shift s, LatticePoint p) const;

  Complex apply_at(const LatticeFunction& f, LatticePoint p) const;

  /// Lazy image X f. If f lives on a finite window, the image lives on the
  /// window shrunk by the largest upward shift along each axis.
  LatticeFunction apply(const LatticeFunction& f) const;

  LatticeOperator operator+(const LatticeOperator& b) const;
  LatticeOperator operator-(const LatticeOperator& b) const;
  /// Composition: (a * b) f = a (b f).
  LatticeOperator operator*(const LatticeOperator& b) const;
  friend LatticeOperator operator*(Complex c, const LatticeOperator& a);

 private:
  void add_term(Shift s, Coefficient c);

  std::vector<Term> terms_;  // sorted by shift, unique
};

/// a b - b a.
LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b);

/// max over points and over the union of shifts of |a.coefficient - b.coefficient|.
double max_coefficient_difference(const LatticeOperator& a, const LatticeOperator& b,
                                  std::span<const LatticePoint> points);

/// max over points of |f(p) - g(p)|.
double max_difference(const LatticeFunction& f, const LatticeFunction& g, std::span<const LatticePoint> points);

/// All points of a window, row-major.
std::vector<LatticePoint> window_points(Window w);

}  // namespace charlier
