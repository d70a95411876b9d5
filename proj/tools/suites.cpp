#include "suites.hpp"

#include <cmath>
#include <functional>

#include "charlier/errors.hpp"
#include "charlier/operators.hpp"
#include "charlier/probes.hpp"
#include "charlier/spectra.hpp"
#include "charlier/univariate.hpp"

namespace charlier::cli {

bool SuiteResult::passed() const {
  if (std::isnan(residual)) return false;
  return expect_above ? residual > tolerance : residual < tolerance;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ladder", "eigen", "su2", "casimir", "ortho", "gauge"};
  return names;
}

namespace {

using ops::Axis;

// Pointwise checks cover [0..10]^2; tables extend one site further for T^+ reads.
constexpr Window kCheck{10, 10};
constexpr int kTableEdge = 11;

struct Collector {
  std::string suite;
  const SuiteOptions& opt;
  std::vector<SuiteResult> out;

  void add(const std::string& id, double residual, double declared) {
    out.push_back({suite, id, residual, opt.tol.value_or(declared), false});
  }
  void add_above(const std::string& id, double residual, double threshold) {
    out.push_back({suite, id, residual, threshold, true});
  }
};

// NaN-preserving max.
double worst(double a, double b) { return (std::isnan(a) || std::isnan(b)) ? NAN : std::max(a, b); }

double sup_on(const LatticeFunction& lhs, const LatticeFunction& rhs, Window w = kCheck) {
  double m = 0.0;
  for (const auto& p : window_points(w)) m = worst(m, std::abs(lhs(p) - rhs(p)));
  return m;
}

LatticeFunction mode(const CharlierTable& t, ModeIndex n) {
  const Window w{t.m1(), t.m2()};
  if (n.n1 < 0 || n.n2 < 0) return LatticeFunction::on_window(w, [](LatticePoint) { return Complex(0.0); });
  return LatticeFunction::on_window(w, [&t, n](LatticePoint p) { return Complex(t(n, p)); });
}

// Runs body(n) for every mode with n1 + n2 <= d.
void for_modes(int d, const std::function<void(ModeIndex)>& body) {
  for (int k = 0; k <= d; ++k) {
    for (int n2 = 0; n2 <= k; ++n2) body({k - n2, n2});
  }
}

double probe_gap(const LatticeOperator& lhs, const LatticeOperator& rhs, const SuiteOptions& opt) {
  ProbeSource src(opt.seed);
  double m = 0.0;
  for (int k = 0; k < opt.probes; ++k) {
    const auto f = src.function();
    const auto pts = src.points(25, 15);
    m = worst(m, max_difference(lhs.apply(f), rhs.apply(f), pts));
  }
  return m;
}

std::vector<LatticePoint> stencil_points(const SuiteOptions& opt) {
  ProbeSource src(opt.seed ^ 0x5bd1e995u);
  return src.points(50, 20);
}

void ladder_suite(Collector& c, const ModelParams& p) {
  const CharlierTable t(p, c.opt.nmax + 1, kTableEdge, kTableEdge);
  const auto up1 = ops::raising(Axis::One, p), up2 = ops::raising(Axis::Two, p);
  const auto dn1 = ops::lowering(Axis::One, p), dn2 = ops::lowering(Axis::Two, p);
  const auto [c12, c21] = ops::cross_ops(p);
  double r1 = 0, r2 = 0, l1 = 0, l2 = 0, x12 = 0, x21 = 0;
  for_modes(c.opt.nmax, [&](ModeIndex n) {
    const auto f = mode(t, n);
    const double a = n.n1, b = n.n2;
    r1 = worst(r1, sup_on(up1.apply(f), std::sqrt(a + 1) * mode(t, {n.n1 + 1, n.n2})));
    r2 = worst(r2, sup_on(up2.apply(f), std::sqrt(b + 1) * mode(t, {n.n1, n.n2 + 1})));
    l1 = worst(l1, sup_on(dn1.apply(f), std::sqrt(a) * mode(t, {n.n1 - 1, n.n2})));
    l2 = worst(l2, sup_on(dn2.apply(f), std::sqrt(b) * mode(t, {n.n1, n.n2 - 1})));
    x12 = worst(x12, sup_on(c12.apply(f), std::sqrt((a + 1) * b) * mode(t, {n.n1 + 1, n.n2 - 1})));
    x21 = worst(x21, sup_on(c21.apply(f), std::sqrt(a * (b + 1)) * mode(t, {n.n1 - 1, n.n2 + 1})));
  });
  c.add("raise1", r1, 1e-9);
  c.add("raise2", r2, 1e-9);
  c.add("lower1", l1, 1e-9);
  c.add("lower2", l2, 1e-9);
  c.add("cross12", x12, 1e-9);
  c.add("cross21", x21, 1e-9);
}

void eigen_suite(Collector& c, const ModelParams& p) {
  const int d = c.opt.nmax;
  const CharlierTable t(p, d, kTableEdge, kTableEdge);
  const auto y1 = ops::eigen_op(Axis::One, p), y2 = ops::eigen_op(Axis::Two, p);
  const auto h = ops::hamiltonian(p);
  double e1 = 0, e2 = 0, eh = 0;
  for_modes(d, [&](ModeIndex n) {
    const auto f = mode(t, n);
    e1 = worst(e1, sup_on(y1.apply(f), double(n.n1) * f));
    e2 = worst(e2, sup_on(y2.apply(f), double(n.n2) * f));
    eh = worst(eh, sup_on(h.apply(f), double(n.total()) * f));
  });
  c.add("eigen_y1", e1, 1e-9);
  c.add("eigen_y2", e2, 1e-9);
  c.add("eigen_hamiltonian", eh, 1e-9);

  const auto pts = stencil_points(c.opt);
  c.add("stencil_y1", max_coefficient_difference(y1, ops::eigen_op_explicit(Axis::One, p), pts), 1e-10);
  c.add("stencil_y2", max_coefficient_difference(y2, ops::eigen_op_explicit(Axis::Two, p), pts), 1e-10);
  const auto [a, b] = ops::cross_ops(p);
  const auto [ae, be] = ops::cross_ops_explicit(p);
  c.add("stencil_cross12", max_coefficient_difference(a, ae, pts), 1e-10);
  c.add("stencil_cross21", max_coefficient_difference(b, be, pts), 1e-10);
  c.add("stencil_hamiltonian", max_coefficient_difference(h, ops::hamiltonian_composed(p), pts), 1e-10);

  const std::pair<double, double> ks[] = {{1.0, 2.0}, {2.0, 3.0}};
  for (const auto& [k1, k2] : ks) {
    const auto ha = ops::anisotropic_hamiltonian(k1, k2, p);
    double r = 0.0;
    for_modes(d, [&](ModeIndex n) {
      const auto f = mode(t, n);
      r = worst(r, sup_on(ha.apply(f), (k1 * n.n1 + k2 * n.n2) * f));
    });
    const std::string tag = "_k" + std::to_string(int(k1)) + std::to_string(int(k2));
    c.add("eigen_anisotropic" + tag, r, 1e-9);
    c.add("stencil_anisotropic" + tag,
          max_coefficient_difference(ha, ops::anisotropic_hamiltonian_explicit(k1, k2, p), pts), 1e-10);
  }
}

void su2_suite(Collector& c, const ModelParams& p) {
  const auto j = ops::su2_generators(p);
  const Complex i(0.0, 1.0);
  const auto& o = c.opt;
  c.add("comm_xy", probe_gap(commutator(j.jx, j.jy), i * j.jz, o), 1e-9);
  c.add("comm_yz", probe_gap(commutator(j.jy, j.jz), i * j.jx, o), 1e-9);
  c.add("comm_zx", probe_gap(commutator(j.jz, j.jx), i * j.jy, o), 1e-9);
  c.add("comm_z_plus", probe_gap(commutator(j.jz, j.j_plus), j.j_plus, o), 1e-9);
  c.add("comm_z_minus", probe_gap(commutator(j.jz, j.j_minus), -1.0 * j.j_minus, o), 1e-9);
  c.add("comm_plus_minus", probe_gap(commutator(j.j_plus, j.j_minus), 2.0 * j.jz, o), 1e-9);
  const auto h = ops::hamiltonian(p);
  c.add("symmetry_jx", probe_gap(commutator(h, j.jx), LatticeOperator(), o), 1e-9);
  c.add("symmetry_jy", probe_gap(commutator(h, j.jy), LatticeOperator(), o), 1e-9);
  c.add("symmetry_jz", probe_gap(commutator(h, j.jz), LatticeOperator(), o), 1e-9);
}

void casimir_suite(Collector& c, const ModelParams& p) {
  const auto j = ops::su2_generators(p);
  c.add("casimir_hamiltonian", probe_gap(j.casimir, ops::casimir_from_hamiltonian(p), c.opt), 1e-8);

  const CharlierTable t(p, c.opt.nmax, kTableEdge + 1, kTableEdge + 1);
  double r = 0.0;
  for_modes(c.opt.nmax, [&](ModeIndex n) {
    const auto f = mode(t, n);
    const double half = 0.5 * n.total();
    r = worst(r, sup_on(j.casimir.apply(f), half * (half + 1) * f));
  });
  c.add("casimir_eigenvalue", r, 1e-8);

  double gram = 0, jp = 0, jm = 0, closure = 0;
  for (int N = 0; N <= std::min(c.opt.nmax, 4); ++N) {
    const auto rep = degeneracy_report(N, p, default_truncation(p, N + 1));
    gram = worst(gram, rep.gram);
    jp = worst(jp, worst(rep.j_plus_coeff, rep.j_plus.max_abs));
    jm = worst(jm, worst(rep.j_minus_coeff, rep.j_minus.max_abs));
    closure = worst(closure, rep.closure);
  }
  c.add("irrep_gram", gram, 1e-8);
  c.add("irrep_j_plus", jp, 1e-9);
  c.add("irrep_j_minus", jm, 1e-9);
  c.add("irrep_closure", closure, 1e-9);
}

void ortho_suite(Collector& c, const ModelParams& p) {
  const int d = c.opt.nmax;
  const auto trunc = default_truncation(p, d);
  double r = 0.0;
  for_modes(d, [&](ModeIndex n) {
    for_modes(d, [&](ModeIndex m) { r = worst(r, orthogonality_check(p, n, m, trunc)); });
  });
  c.add("bivariate_orthonormality", r, 1e-9);

  double u = 0.0;
  for (double a : {0.8, 1.5, 3.0}) {
    const int cutoff = uni::poisson_cutoff(a, 1e-18, 1e-16, std::pow(1.0 + 60.0 / a + a, 20));
    for (int n = 0; n <= 10; ++n) {
      for (int m = 0; m <= 10; ++m) {
        double s = 0.0;
        for (int x = 0; x <= cutoff; ++x) {
          s += uni::poisson_weight(x, a) * uni::charlier_orthonormal(n, x, a) * uni::charlier_orthonormal(m, x, a);
        }
        u = worst(u, std::abs(s - (n == m ? 1.0 : 0.0)));
      }
    }
  }
  c.add("univariate_orthonormality", u, 1e-9);
}

void gauge_suite(Collector& c, const ModelParams& p) {
  const auto pts = stencil_points(c.opt);
  for (auto axis : {Axis::One, Axis::Two}) {
    const std::string k = axis == Axis::One ? "1" : "2";
    c.add("closed_form_raise" + k,
          max_coefficient_difference(ops::gauge_transform(ops::raising(axis, p), p),
                                     ops::gauged_raising_closed_form(axis, p), pts),
          1e-10);
    c.add("closed_form_lower" + k,
          max_coefficient_difference(ops::gauge_transform(ops::lowering(axis, p), p),
                                     ops::gauged_lowering_closed_form(axis, p), pts),
          1e-10);
  }

  const int d = c.opt.nmax;
  const StateTable states(p, d, {kTableEdge, kTableEdge});
  for (auto axis : {Axis::One, Axis::Two}) {
    const auto y = ops::gauged_raising_closed_form(axis, p) * ops::gauged_lowering_closed_form(axis, p);
    double r = 0.0;
    for (int N = 0; N <= d; ++N) {
      for (int n = 0; n <= N; ++n) {
        const auto u = states.upsilon_function({N, n});
        r = worst(r, sup_on(y.apply(u), double(axis == Axis::One ? n : N - n) * u));
      }
    }
    c.add(std::string("gauged_number") + (axis == Axis::One ? "1" : "2"), r, 1e-9);
  }

  const auto hb = ops::gauge_transform(ops::hamiltonian(p), p);
  double sym = 0.0;
  for (const auto& x : window_points({20, 20})) {
    for (const Shift s : {Shift{1, 0}, Shift{0, 1}}) {
      sym = worst(sym, std::abs(hb.coefficient(s, x) - hb.coefficient({-s.d1, -s.d2}, x + s)));
    }
  }
  c.add("gauged_hamiltonian_symmetric", sym, 1e-12);

  // The downshift form of the second gauged lowering operator should NOT match.
  std::vector<LatticePoint> interior;
  for (const auto& x : pts) {
    if (x.x1 >= 1 && x.x2 >= 1) interior.push_back(x);
  }
  const double gap = max_coefficient_difference(ops::gauge_transform(ops::lowering(Axis::Two, p), p),
                                                ops::gauged_lowering2_downshift_variant(p), interior);
  c.add_above("downshift_variant_discrepancy", gap, 1e-3);
}

}  // namespace

std::vector<SuiteResult> run_suite(const std::string& name, const ModelParams& params, const SuiteOptions& opt) {
  if (opt.nmax < 0) throw DomainError("--nmax must be nonnegative");
  if (opt.probes < 1) throw DomainError("probe count must be positive");
  if (opt.tol && !(*opt.tol > 0.0)) throw DomainError("--tol must be positive");
  if (name == "all") {
    std::vector<SuiteResult> all;
    for (const auto& s : suite_names()) {
      auto part = run_suite(s, params, opt);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  Collector c{name, opt, {}};
  if (name == "ladder") ladder_suite(c, params);
  else if (name == "eigen") eigen_suite(c, params);
  else if (name == "su2") su2_suite(c, params);
  else if (name == "casimir") casimir_suite(c, params);
  else if (name == "ortho") ortho_suite(c, params);
  else if (name == "gauge") gauge_suite(c, params);
  else throw DomainError("unknown suite '" + name + "'");
  return c.out;
}

}  // namespace charlier::cli
