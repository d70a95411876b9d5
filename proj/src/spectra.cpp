#include "charlier/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace charlier {

double phi(EnergyLabel label, LatticePoint p, const ModelParams& params) {
  require_label(label, "phi");
  return charlier2_ladder(label.mode(), p, params);
}

double upsilon(EnergyLabel label, LatticePoint p, const ModelParams& params) {
  return sqrt_weight(p, params) * phi(label, p, params);
}

StateTable::StateTable(const ModelParams& params, int max_energy, Window window)
    : params_(params), window_(window), table_(params, max_energy, window.m1, window.m2) {
  sqrt_w_.reserve(static_cast<std::size_t>(window.size()));
  for (const auto& p : window_points(window)) sqrt_w_.push_back(sqrt_weight(p, params));
}

double StateTable::phi(EnergyLabel label, LatticePoint p) const {
  require_label(label, "StateTable::phi");
  return table_(label.mode(), p);
}

double StateTable::upsilon(EnergyLabel label, LatticePoint p) const {
  return phi(label, p) * sqrt_w_[static_cast<std::size_t>(window_.index(p))];
}

LatticeFunction StateTable::phi_function(EnergyLabel label) const {
  require_label(label, "StateTable::phi_function");
  return LatticeFunction::tabulated(window_, table_.values(label.mode()));
}

LatticeFunction StateTable::upsilon_function(EnergyLabel label) const {
  require_label(label, "StateTable::upsilon_function");
  const auto c = table_.values(label.mode());
  std::vector<Complex> v(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) v[i] = c[i] * sqrt_w_[i];
  return LatticeFunction::tabulated(window_, std::move(v));
}

double StateTable::overlap(EnergyLabel a, EnergyLabel b) const {
  require_label(a, "StateTable::overlap");
  require_label(b, "StateTable::overlap");
  const auto ca = table_.values(a.mode());
  const auto cb = table_.values(b.mode());
  double sum = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) sum += ca[i] * cb[i] * sqrt_w_[i] * sqrt_w_[i];
  return sum;
}

double completeness_partial_sum(LatticePoint x, LatticePoint y, int max_energy, const ModelParams& params) {
  require_lattice_point(x, "completeness_partial_sum");
  require_lattice_point(y, "completeness_partial_sum");
  const StateTable states(params, max_energy, {std::max(x.x1, y.x1), std::max(x.x2, y.x2)});
  double sum = 0.0;
  for (int N = 0; N <= max_energy; ++N) {
    for (int n = 0; n <= N; ++n) sum += states.upsilon({N, n}, x) * states.upsilon({N, n}, y);
  }
  return sum;
}

DegeneracyReport degeneracy_report(int energy, const ModelParams& params, const TruncationSpec& trunc) {
  if (energy < 0) throw DomainError("degeneracy_report: energy must be non-negative");
  const Window full{trunc.m1, trunc.m2};
  const Window inner{trunc.m1 - 1, trunc.m2 - 1};
  const StateTable states(params, energy, full);
  const auto h = ops::gauge_transform(ops::hamiltonian(params), params);
  const auto su2 = ops::su2_generators(params);
  const auto j_plus = ops::gauge_transform(su2.j_plus, params);
  const auto j_minus = ops::gauge_transform(su2.j_minus, params);
  const auto inner_points = window_points(inner);

  DegeneracyReport report;
  report.energy = energy;
  report.multiplicity = energy + 1;

  std::vector<LatticeFunction> level;
  for (int n = 0; n <= energy; ++n) level.push_back(states.upsilon_function({energy, n}));
  for (int n = 0; n <= energy; ++n) {
    for (int m = 0; m <= energy; ++m) {
      const double g = states.overlap({energy, n}, {energy, m});
      report.gram = std::max(report.gram, std::abs(g - (n == m ? 1.0 : 0.0)));
    }
  }

  // Projection of g onto the level, with coefficients <Upsilon_k, g> over the inner window.
  auto closure_defect = [&](const std::vector<Complex>& g) {
    std::vector<Complex> rest = g;
    for (int k = 0; k <= energy; ++k) {
      Complex ck = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) ck += level[k](inner_points[i]) * g[i];
      for (std::size_t i = 0; i < g.size(); ++i) rest[i] -= ck * level[k](inner_points[i]);
    }
    double norm2 = 0.0;
    for (const auto& r : rest) norm2 += std::norm(r);
    return std::sqrt(norm2);
  };

  for (int n = 0; n <= energy; ++n) {
    const double up_coeff = std::sqrt((n + 1.0) * (energy - n));
    const double down_coeff = std::sqrt(n * (energy - n + 1.0));
    std::vector<Complex> raised;
    std::vector<Complex> lowered;
    Complex up_overlap = 0.0;
    Complex down_overlap = 0.0;
    for (const auto& p : inner_points) {
      const Complex hv = h.apply_at(level[n], p);
      report.eigen.record(std::abs(hv - static_cast<double>(energy) * level[n](p)), p);

      const Complex up = j_plus.apply_at(level[n], p);
      const Complex up_expected = n < energy ? up_coeff * level[n + 1](p) : 0.0;
      report.j_plus.record(std::abs(up - up_expected), p);
      if (n < energy) up_overlap += level[n + 1](p) * up;
      raised.push_back(up);

      const Complex down = j_minus.apply_at(level[n], p);
      const Complex down_expected = n > 0 ? down_coeff * level[n - 1](p) : 0.0;
      report.j_minus.record(std::abs(down - down_expected), p);
      if (n > 0) down_overlap += level[n - 1](p) * down;
      lowered.push_back(down);
    }
    if (n < energy) report.j_plus_coeff = std::max(report.j_plus_coeff, std::abs(up_overlap - up_coeff));
    if (n > 0) report.j_minus_coeff = std::max(report.j_minus_coeff, std::abs(down_overlap - down_coeff));
    report.closure = std::max({report.closure, closure_defect(raised), closure_defect(lowered)});
  }
  return report;
}

TruncatedMatrix truncated_matrix(const LatticeOperator& op, const TruncationSpec& trunc, bool gauged,
                                 const ModelParams& params, BoundaryPolicy policy) {
  const Window w{trunc.m1, trunc.m2};
  if (w.size() > 10000) throw DomainError("truncated_matrix: window too large for dense storage");
  const LatticeOperator target = gauged ? ops::gauge_transform(op, params) : op;

  TruncatedMatrix out{w, Eigen::MatrixXcd::Zero(w.size(), w.size()), {}};
  for (const auto& p : window_points(w)) {
    const int row = w.index(p);
    bool flagged = false;
    for (const auto& t : target.terms()) {
      const LatticePoint q = p + t.shift;
      Complex c;
      try {
        c = t.coeff(p);
      } catch (const OutOfDomain&) {
        if (policy == BoundaryPolicy::Throw) throw;
        flagged = true;
        continue;
      }
      if (c == 0.0) continue;
      if (!w.contains(q)) {
        if (policy == BoundaryPolicy::Throw) {
          throw OutOfDomain("truncated_matrix: stencil of row " + to_string(p) + " reads " + to_string(q));
        }
        flagged = true;
        continue;
      }
      out.matrix(row, w.index(q)) += c;
    }
    if (flagged) out.boundary_rows.push_back(row);
  }
  return out;
}

double hermiticity_defect(const TruncatedMatrix& m) {
  return (m.matrix - m.matrix.adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> low_lying_eigenvalues(const TruncatedMatrix& m, int count) {
  Eigen::VectorXd values;
  if (m.matrix.imag().cwiseAbs().maxCoeff() == 0.0) {
    const Eigen::MatrixXd real = m.matrix.real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(real, Eigen::EigenvaluesOnly);
    values = solver.eigenvalues();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.matrix, Eigen::EigenvaluesOnly);
    values = solver.eigenvalues();
  }
  const int k = std::min<int>(count, static_cast<int>(values.size()));
  return {values.data(), values.data() + k};
}

}  // namespace charlier
