#include "charlier/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "charlier/univariate.hpp"

namespace charlier {

ModelParams::ModelParams(double alpha, double beta, double theta) : alpha_(alpha), beta_(beta), theta_(theta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("ModelParams: alpha must be positive and finite");
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("ModelParams: beta must be positive and finite");
  if (!std::isfinite(theta)) throw DomainError("ModelParams: theta must be finite");
}

double log_weight(LatticePoint p, const ModelParams& params) {
  require_lattice_point(p, "weight");
  return uni::log_poisson_weight(p.x1, params.alpha()) + uni::log_poisson_weight(p.x2, params.beta());
}

double weight(LatticePoint p, const ModelParams& params) { return std::exp(log_weight(p, params)); }

double sqrt_weight(LatticePoint p, const ModelParams& params) { return std::exp(0.5 * log_weight(p, params)); }

namespace {

// One raising step on a row-major grid [0..m1] x [0..m2]:
//   dst = (x1 k1 / alpha) src(x1-1, x2) + (x2 k2 / beta) src(x1, x2-1) - shift * src
// with (k1, k2, shift) = (cos, -sin, omega) for A_+^{(1)} and (sin, cos, zeta) for A_+^{(2)}.
void raise_on_grid(int axis, const ModelParams& params, int m1, int m2, const std::vector<double>& src,
                   std::vector<double>& dst) {
  const double c = params.cos();
  const double s = params.sin();
  const double k1 = (axis == 1 ? c : s) / params.alpha();
  const double k2 = (axis == 1 ? -s : c) / params.beta();
  const double shift = axis == 1 ? params.omega() : params.zeta();
  const int stride = m2 + 1;
  dst.assign(src.size(), 0.0);
  for (int x1 = 0; x1 <= m1; ++x1) {
    for (int x2 = 0; x2 <= m2; ++x2) {
      const int at = x1 * stride + x2;
      double v = -shift * src[at];
      if (x1 > 0) v += x1 * k1 * src[at - stride];
      if (x2 > 0) v += x2 * k2 * src[at - 1];
      dst[at] = v;
    }
  }
}

void scale(std::vector<double>& v, double factor) {
  for (double& e : v) e *= factor;
}

}  // namespace

CharlierTable::CharlierTable(const ModelParams& params, int max_degree, int m1, int m2)
    : max_degree_(max_degree), m1_(m1), m2_(m2) {
  if (max_degree < 0 || m1 < 0 || m2 < 0) throw DomainError("CharlierTable: negative degree or window");
  const std::size_t points = static_cast<std::size_t>(m1 + 1) * static_cast<std::size_t>(m2 + 1);
  polys_.resize(static_cast<std::size_t>(max_degree + 1) * (max_degree + 2) / 2);
  polys_[0].assign(points, 1.0);
  for (int d = 1; d <= max_degree; ++d) {
    for (int n2 = 0; n2 <= d; ++n2) {
      const int n1 = d - n2;
      auto& dst = polys_[slot({n1, n2})];
      if (n2 == 0) {
        raise_on_grid(1, params, m1, m2, polys_[slot({n1 - 1, 0})], dst);
        scale(dst, 1.0 / std::sqrt(static_cast<double>(n1)));
      } else {
        raise_on_grid(2, params, m1, m2, polys_[slot({n1, n2 - 1})], dst);
        scale(dst, 1.0 / std::sqrt(static_cast<double>(n2)));
      }
    }
  }
}

std::size_t CharlierTable::slot(ModeIndex n) const {
  const int d = n.total();
  return static_cast<std::size_t>(d) * (d + 1) / 2 + static_cast<std::size_t>(n.n2);
}

double CharlierTable::operator()(ModeIndex n, LatticePoint p) const {
  if (p.x1 < 0 || p.x2 < 0 || p.x1 > m1_ || p.x2 > m2_) {
    throw OutOfDomain("CharlierTable: point " + to_string(p) + " outside window");
  }
  return values(n)[static_cast<std::size_t>(p.x1) * (m2_ + 1) + p.x2];
}

std::span<const double> CharlierTable::values(ModeIndex n) const {
  if (n.n1 < 0 || n.n2 < 0 || n.total() > max_degree_) throw OutOfDomain("CharlierTable: degree outside table");
  return polys_[slot(n)];
}

double charlier2_ladder(ModeIndex n, LatticePoint p, const ModelParams& params) {
  require_mode(n, "charlier2_ladder");
  require_lattice_point(p, "charlier2_ladder");
  const std::size_t points = static_cast<std::size_t>(p.x1 + 1) * (p.x2 + 1);
  std::vector<double> cur(points, 1.0);
  std::vector<double> next;
  for (int k = 1; k <= n.n1; ++k) {
    raise_on_grid(1, params, p.x1, p.x2, cur, next);
    scale(next, 1.0 / std::sqrt(static_cast<double>(k)));
    cur.swap(next);
  }
  for (int k = 1; k <= n.n2; ++k) {
    raise_on_grid(2, params, p.x1, p.x2, cur, next);
    scale(next, 1.0 / std::sqrt(static_cast<double>(k)));
    cur.swap(next);
  }
  return cur.back();
}

namespace {

struct ExplicitCoefficients {
  double u11, u12, u21, u22;
};

ExplicitCoefficients explicit_coefficients(const ModelParams& params, double tol) {
  const double a = params.alpha();
  const double b = params.beta();
  const double c = params.cos();
  const double s = params.sin();
  const double d11 = a * a * c - a * b * s;
  const double d12 = a * a * s + a * b * c;
  const double d21 = b * b * s - a * b * c;
  const double d22 = b * b * c + a * b * s;
  for (double d : {d11, d12, d21, d22, params.omega(), params.zeta()}) {
    if (std::abs(d) < tol) {
      throw SingularParameters("charlier2_explicit: vanishing denominator (omega or zeta near zero); use the ladder route");
    }
  }
  return {-c / d11, -s / d12, -s / d21, -c / d22};
}

// (-m)_k for k = 0..kmax.
std::vector<double> falling_pochhammer(int m, int kmax) {
  std::vector<double> out(kmax + 1, 0.0);
  out[0] = 1.0;
  for (int k = 1; k <= kmax; ++k) out[k] = out[k - 1] * (k - 1 - m);
  return out;
}

std::vector<double> powers(double u, int kmax) {
  std::vector<double> out(kmax + 1, 1.0);
  for (int k = 1; k <= kmax; ++k) out[k] = out[k - 1] * u;
  return out;
}

}  // namespace

bool params_generic(const ModelParams& params) {
  try {
    explicit_coefficients(params, 1e-9);
    return true;
  } catch (const SingularParameters&) {
    return false;
  }
}

double charlier2_explicit(ModeIndex n, LatticePoint p, const ModelParams& params) {
  require_mode(n, "charlier2_explicit");
  require_lattice_point(p, "charlier2_explicit");
  const auto u = explicit_coefficients(params, 1e-12);

  const int top = std::max({n.n1, n.n2, p.x1, p.x2});
  const auto pn1 = falling_pochhammer(n.n1, top);
  const auto pn2 = falling_pochhammer(n.n2, top);
  const auto px1 = falling_pochhammer(p.x1, top);
  const auto px2 = falling_pochhammer(p.x2, top);
  const auto w11 = powers(u.u11, top);
  const auto w12 = powers(u.u12, top);
  const auto w21 = powers(u.u21, top);
  const auto w22 = powers(u.u22, top);
  std::vector<double> inv_fact(top + 1, 1.0);
  for (int k = 1; k <= top; ++k) inv_fact[k] = inv_fact[k - 1] / k;

  // (-n1)_{rho+mu} vanishes once rho + mu > n1, (-x1)_{rho+sigma} once rho + sigma > x1, etc.
  double sum = 0.0;
  for (int rho = 0; rho <= std::min(n.n1, p.x1); ++rho) {
    for (int sigma = 0; sigma <= std::min(n.n2, p.x1 - rho); ++sigma) {
      for (int mu = 0; mu <= std::min(n.n1 - rho, p.x2); ++mu) {
        for (int nu = 0; nu <= std::min(n.n2 - sigma, p.x2 - mu); ++nu) {
          sum += pn1[rho + mu] * pn2[sigma + nu] * px1[rho + sigma] * px2[mu + nu] * inv_fact[rho] *
                 inv_fact[sigma] * inv_fact[mu] * inv_fact[nu] * w11[rho] * w12[sigma] * w21[mu] * w22[nu];
        }
      }
    }
  }

  const double sign = (n.total() % 2 == 0) ? 1.0 : -1.0;
  const double norm = std::exp(-0.5 * (std::lgamma(n.n1 + 1.0) + std::lgamma(n.n2 + 1.0)));
  return sign * norm * std::pow(params.omega(), n.n1) * std::pow(params.zeta(), n.n2) * sum;
}

double generating_check(const ModelParams& params, double z1, double z2, LatticePoint p, int degree_cap) {
  require_lattice_point(p, "generating_check");
  if (degree_cap < 0) throw DomainError("generating_check: degree_cap must be non-negative");
  const double a = params.alpha();
  const double b = params.beta();
  const double c = params.cos();
  const double s = params.sin();
  const double lhs = std::exp(-z1 * params.omega() - z2 * params.zeta()) *
                     std::pow(1.0 + z1 * c / a + z2 * s / a, p.x1) *
                     std::pow(1.0 - z1 * s / b + z2 * c / b, p.x2);

  const CharlierTable table(params, degree_cap, p.x1, p.x2);
  double rhs = 0.0;
  for (int d = 0; d <= degree_cap; ++d) {
    for (int n2 = 0; n2 <= d; ++n2) {
      const int n1 = d - n2;
      const double coeff = std::pow(z1, n1) * std::pow(z2, n2) *
                           std::exp(-0.5 * (std::lgamma(n1 + 1.0) + std::lgamma(n2 + 1.0)));
      rhs += coeff * table({n1, n2}, p);
    }
  }
  return std::abs(lhs - rhs);
}

namespace {

int axis_cutoff(double a, int max_degree, double tail_tol) {
  int x = static_cast<int>(std::ceil(a * a));
  for (;; ++x) {
    const double w = uni::poisson_weight(x, a);
    const double growth = std::pow(1.0 + x / a + a, 2.0 * max_degree);
    if (w < tail_tol && w * growth < 1e-14) return x;
  }
}

}  // namespace

TruncationSpec default_truncation(const ModelParams& params, int max_degree, double tail_tol) {
  return {axis_cutoff(params.alpha(), max_degree, tail_tol), axis_cutoff(params.beta(), max_degree, tail_tol),
          tail_tol};
}

double orthogonality_check(const ModelParams& params, ModeIndex n, ModeIndex m, const TruncationSpec& trunc) {
  require_mode(n, "orthogonality_check");
  require_mode(m, "orthogonality_check");
  const CharlierTable table(params, std::max(n.total(), m.total()), trunc.m1, trunc.m2);
  const auto cn = table.values(n);
  const auto cm = table.values(m);
  double sum = 0.0;
  for (int x1 = 0; x1 <= trunc.m1; ++x1) {
    for (int x2 = 0; x2 <= trunc.m2; ++x2) {
      const std::size_t at = static_cast<std::size_t>(x1) * (trunc.m2 + 1) + x2;
      sum += weight({x1, x2}, params) * cn[at] * cm[at];
    }
  }
  return std::abs(sum - (n == m ? 1.0 : 0.0));
}

SeparableFit fit_separable_constant(ModeIndex n, double alpha, double beta, int m) {
  const ModelParams params(alpha, beta, 0.0);
  const CharlierTable table(params, n.total(), m, m);
  double num = 0.0;
  double den = 0.0;
  std::vector<double> product;
  for (int x1 = 0; x1 <= m; ++x1) {
    for (int x2 = 0; x2 <= m; ++x2) {
      const double sep = uni::charlier_orthonormal(n.n1, x1, alpha) * uni::charlier_orthonormal(n.n2, x2, beta);
      num += table(n, {x1, x2}) * sep;
      den += sep * sep;
      product.push_back(sep);
    }
  }
  SeparableFit fit;
  fit.constant = num / den;
  for (int x1 = 0, at = 0; x1 <= m; ++x1) {
    for (int x2 = 0; x2 <= m; ++x2, ++at) {
      fit.max_misfit = std::max(fit.max_misfit, std::abs(table(n, {x1, x2}) - fit.constant * product[at]));
    }
  }
  return fit;
}

}  // namespace charlier
