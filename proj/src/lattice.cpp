#include "charlier/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace charlier {

LatticeFunction LatticeFunction::everywhere(Eval eval) { return {std::nullopt, std::move(eval)}; }

LatticeFunction LatticeFunction::on_window(Window w, Eval eval) { return {w, std::move(eval)}; }

LatticeFunction LatticeFunction::tabulated(Window w, std::vector<Complex> values) {
  if (static_cast<int>(values.size()) != std::max(w.size(), 0)) {
    throw DomainError("LatticeFunction::tabulated: sample count does not match window");
  }
  return {w, [w, v = std::move(values)](LatticePoint p) { return v[static_cast<std::size_t>(w.index(p))]; }};
}

LatticeFunction LatticeFunction::tabulated(Window w, std::span<const double> values) {
  return tabulated(w, std::vector<Complex>(values.begin(), values.end()));
}

LatticeFunction LatticeFunction::constant(Complex c) {
  return everywhere([c](LatticePoint) { return c; });
}

Complex LatticeFunction::operator()(LatticePoint p) const {
  if (!p.in_lattice()) throw OutOfDomain("lattice function read below the lattice at " + to_string(p));
  if (window_ && !window_->contains(p)) {
    throw OutOfDomain("lattice function read at " + to_string(p) + " outside its window [0.." +
                      std::to_string(window_->m1) + "]x[0.." + std::to_string(window_->m2) + "]");
  }
  return eval_(p);
}

LatticeFunction LatticeFunction::materialize(Window w) const {
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(std::max(w.size(), 0)));
  for (int x1 = 0; x1 <= w.m1; ++x1) {
    for (int x2 = 0; x2 <= w.m2; ++x2) values.push_back((*this)({x1, x2}));
  }
  return tabulated(w, std::move(values));
}

namespace {

std::optional<Window> intersect(const std::optional<Window>& a, const std::optional<Window>& b) {
  if (!a) return b;
  if (!b) return a;
  return Window{std::min(a->m1, b->m1), std::min(a->m2, b->m2)};
}

}  // namespace

LatticeFunction LatticeFunction::operator+(const LatticeFunction& g) const {
  return {intersect(window_, g.window_), [f = *this, g](LatticePoint p) { return f(p) + g(p); }};
}

LatticeFunction LatticeFunction::operator-(const LatticeFunction& g) const {
  return {intersect(window_, g.window_), [f = *this, g](LatticePoint p) { return f(p) - g(p); }};
}

LatticeFunction operator*(Complex c, const LatticeFunction& f) {
  return {f.window_, [c, f](LatticePoint p) { return c * f(p); }};
}

LatticeOperator LatticeOperator::identity() { return shift({0, 0}); }

LatticeOperator LatticeOperator::shift(Shift s, Complex c) {
  return term(s, [c](LatticePoint) { return c; });
}

LatticeOperator LatticeOperator::term(Shift s, Coefficient c) {
  LatticeOperator op;
  op.add_term(s, std::move(c));
  return op;
}

LatticeOperator LatticeOperator::multiplication(Coefficient c) { return term({0, 0}, std::move(c)); }

void LatticeOperator::add_term(Shift s, Coefficient c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s, [](const Term& t, Shift v) { return t.shift < v; });
  if (it != terms_.end() && it->shift == s) {
    it->coeff = [lhs = std::move(it->coeff), rhs = std::move(c)](LatticePoint p) { return lhs(p) + rhs(p); };
  } else {
    terms_.insert(it, Term{s, std::move(c)});
  }
}

int LatticeOperator::stencil_radius() const {
  int r = 0;
  for (const auto& t : terms_) r = std::max({r, std::abs(t.shift.d1), std::abs(t.shift.d2)});
  return r;
}

Complex LatticeOperator::coefficient(Shift s, LatticePoint p) const {
  for (const auto& t : terms_) {
    if (t.shift == s) return t.coeff(p);
  }
  return 0.0;
}

Complex LatticeOperator::apply_at(const LatticeFunction& f, LatticePoint p) const {
  if (!p.in_lattice()) throw OutOfDomain("operator applied below the lattice at " + to_string(p));
  Complex sum = 0.0;
  for (const auto& t : terms_) {
    const Complex c = t.coeff(p);
    if (c == 0.0) continue;
    sum += c * f(p + t.shift);
  }
  return sum;
}

LatticeFunction LatticeOperator::apply(const LatticeFunction& f) const {
  auto eval = [op = *this, f](LatticePoint p) { return op.apply_at(f, p); };
  if (!f.window()) return LatticeFunction::everywhere(std::move(eval));
  int up1 = 0;
  int up2 = 0;
  for (const auto& t : terms_) {
    up1 = std::max(up1, t.shift.d1);
    up2 = std::max(up2, t.shift.d2);
  }
  return LatticeFunction::on_window({f.window()->m1 - up1, f.window()->m2 - up2}, std::move(eval));
}

LatticeOperator LatticeOperator::operator+(const LatticeOperator& b) const {
  LatticeOperator out = *this;
  for (const auto& t : b.terms_) out.add_term(t.shift, t.coeff);
  return out;
}

LatticeOperator LatticeOperator::operator-(const LatticeOperator& b) const { return *this + (-1.0) * b; }

LatticeOperator LatticeOperator::operator*(const LatticeOperator& b) const {
  LatticeOperator out;
  for (const auto& ta : terms_) {
    for (const auto& tb : b.terms_) {
      out.add_term(ta.shift + tb.shift, [ca = ta.coeff, cb = tb.coeff, sa = ta.shift](LatticePoint p) -> Complex {
        const Complex first = ca(p);
        if (first == 0.0) return 0.0;
        const LatticePoint mid = p + sa;
        if (!mid.in_lattice()) throw OutOfDomain("composite operator reads below the lattice at " + to_string(mid));
        return first * cb(mid);
      });
    }
  }
  return out;
}

LatticeOperator operator*(Complex c, const LatticeOperator& a) {
  LatticeOperator out;
  for (const auto& t : a.terms_) {
    out.add_term(t.shift, [c, coeff = t.coeff](LatticePoint p) { return c * coeff(p); });
  }
  return out;
}

LatticeOperator commutator(const LatticeOperator& a, const LatticeOperator& b) { return a * b - b * a; }

double max_coefficient_difference(const LatticeOperator& a, const LatticeOperator& b,
                                  std::span<const LatticePoint> points) {
  std::set<Shift> shifts;
  for (const auto& t : a.terms()) shifts.insert(t.shift);
  for (const auto& t : b.terms()) shifts.insert(t.shift);
  double worst = 0.0;
  for (const auto& p : points) {
    for (const auto& s : shifts) {
      const double d = std::abs(a.coefficient(s, p) - b.coefficient(s, p));
      if (std::isnan(d)) return d;
      worst = std::max(worst, d);
    }
  }
  return worst;
}

double max_difference(const LatticeFunction& f, const LatticeFunction& g, std::span<const LatticePoint> points) {
  double worst = 0.0;
  for (const auto& p : points) {
    const double d = std::abs(f(p) - g(p));
    if (std::isnan(d)) return d;
    worst = std::max(worst, d);
  }
  return worst;
}

std::vector<LatticePoint> window_points(Window w) {
  std::vector<LatticePoint> out;
  for (int x1 = 0; x1 <= w.m1; ++x1) {
    for (int x2 = 0; x2 <= w.m2; ++x2) out.push_back({x1, x2});
  }
  return out;
}

}  // namespace charlier
