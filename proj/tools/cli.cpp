#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charlier/bivariate.hpp"
#include "charlier/continuum.hpp"
#include "charlier/errors.hpp"
#include "charlier/operators.hpp"
#include "charlier/spectra.hpp"
#include "suites.hpp"
#include "table.hpp"

namespace charlier::cli {

namespace {

struct Globals {
  double alpha = 1.2;
  double beta = 0.9;
  double theta = 0.4;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 7;
  std::optional<double> tol;
};

struct EvalOptions {
  int n1 = 0;
  int n2 = 0;
  std::optional<int> x1;
  std::optional<int> x2;
  std::string grid;
  std::string route = "ladder";
};

struct SpectrumOptions {
  int nmax = 3;
  bool matrix = false;
  int window = 40;
  std::optional<double> k1;
  std::optional<double> k2;
};

struct LimitOptions {
  std::string what = "wavefunction";
  int N = 0;
  int n = 0;
  std::vector<double> scales{2, 4, 8, 16};
  double window = 2.0;
  std::string op = "raise1";
};

std::string status(bool ok) { return ok ? "pass" : "fail"; }

// "AxB" -> (A, B), both positive.
std::pair<int, int> parse_grid(const std::string& s) {
  const auto x = s.find('x');
  int a = 0, b = 0;
  std::size_t used_a = 0, used_b = 0;
  try {
    if (x == std::string::npos) throw std::invalid_argument(s);
    a = std::stoi(s.substr(0, x), &used_a);
    b = std::stoi(s.substr(x + 1), &used_b);
  } catch (const std::logic_error&) {
    throw DomainError("--grid expects AxB with positive integers, got '" + s + "'");
  }
  if (used_a != x || used_b != s.size() - x - 1 || a < 1 || b < 1) {
    throw DomainError("--grid expects AxB with positive integers, got '" + s + "'");
  }
  return {a, b};
}

Table cmd_eval(const EvalOptions& o, const ModelParams& p) {
  if (o.n1 < 0 || o.n2 < 0) throw DomainError("--n1 and --n2 must be nonnegative");
  std::vector<LatticePoint> points;
  int m1 = 0, m2 = 0;
  if (!o.grid.empty()) {
    if (o.x1 || o.x2) throw DomainError("--grid cannot be combined with --x1/--x2");
    const auto [a, b] = parse_grid(o.grid);
    m1 = a - 1;
    m2 = b - 1;
    points = window_points({m1, m2});
  } else {
    const LatticePoint x{o.x1.value_or(0), o.x2.value_or(0)};
    if (!x.in_lattice()) throw DomainError("--x1 and --x2 must be nonnegative");
    m1 = x.x1;
    m2 = x.x2;
    points = {x};
  }

  const ModeIndex n{o.n1, o.n2};
  Table t({"route", "n1", "n2", "x1", "x2", "value"});
  if (o.route == "explicit") {
    if (!params_generic(p)) {
      throw SingularParameters("explicit route needs generic parameters (omega, zeta and the u_ij denominators nonzero); "
                               "use --route ladder");
    }
    for (const auto& x : points) {
      t.add({o.route, (long long)n.n1, (long long)n.n2, (long long)x.x1, (long long)x.x2, charlier2_explicit(n, x, p)});
    }
    return t;
  }
  const CharlierTable table(p, n.total(), m1, m2);
  for (const auto& x : points) {
    t.add({o.route, (long long)n.n1, (long long)n.n2, (long long)x.x1, (long long)x.x2, table(n, x)});
  }
  return t;
}

Table cmd_verify(const std::string& suite, int nmax, const Globals& g, const ModelParams& p, bool& ok) {
  SuiteOptions opt;
  opt.nmax = nmax;
  opt.seed = g.seed;
  opt.tol = g.tol;
  Table t({"suite", "identity", "max_residual", "tolerance", "check", "status"});
  ok = true;
  for (const auto& r : run_suite(suite, p, opt)) {
    ok = ok && r.passed();
    t.add({r.suite, r.identity, r.residual, r.tolerance, std::string(r.expect_above ? "above" : "below"),
           status(r.passed())});
  }
  return t;
}

Table cmd_spectrum(const SpectrumOptions& o, const Globals& g, const ModelParams& p, bool& ok) {
  if (o.nmax < 0) throw DomainError("--Nmax must be nonnegative");
  if (o.k1.has_value() != o.k2.has_value()) throw DomainError("--k1 and --k2 must be given together");
  if (o.k1 && !(*o.k1 > 0.0 && *o.k2 > 0.0)) throw DomainError("--k1 and --k2 must be positive");
  if (o.window < 1) throw DomainError("--window must be at least 1");
  const double tol = g.tol.value_or(1e-9);
  ok = true;
  Table t({"kind", "rank", "N", "n1", "n2", "eigenvalue", "multiplicity", "residual", "tolerance", "status"});
  const Cell none{};

  for (int N = 0; N <= o.nmax; ++N) {
    const auto r = degeneracy_report(N, p, default_truncation(p, N + 1));
    double res = r.gram;
    for (double v : {r.eigen.max_abs, r.j_plus.max_abs, r.j_minus.max_abs, r.j_plus_coeff, r.j_minus_coeff,
                     r.closure}) {
      res = std::isnan(v) ? v : std::max(res, v);
    }
    const bool pass = res < tol;
    ok = ok && pass;
    t.add({std::string("level"), none, (long long)N, none, none, double(r.energy), (long long)r.multiplicity, res, tol,
           status(pass)});
  }

  if (o.k1) {
    const double k1 = *o.k1, k2 = *o.k2;
    const auto h = ops::anisotropic_hamiltonian(k1, k2, p);
    const CharlierTable table(p, o.nmax, 11, 11);
    std::vector<ModeIndex> modes;
    for (int N = 0; N <= o.nmax; ++N) {
      for (int n2 = 0; n2 <= N; ++n2) modes.push_back({N - n2, n2});
    }
    std::stable_sort(modes.begin(), modes.end(), [&](ModeIndex a, ModeIndex b) {
      return k1 * a.n1 + k2 * a.n2 < k1 * b.n1 + k2 * b.n2;
    });
    for (const auto& n : modes) {
      const double lambda = k1 * n.n1 + k2 * n.n2;
      const auto f = LatticeFunction::on_window({11, 11}, [&table, n](LatticePoint x) { return Complex(table(n, x)); });
      const auto hf = h.apply(f);
      double res = 0.0;
      for (const auto& x : window_points({10, 10})) {
        const double d = std::abs(hf(x) - lambda * f(x));
        res = std::isnan(d) ? d : std::max(res, d);
      }
      const bool pass = res < tol;
      ok = ok && pass;
      t.add({std::string("anisotropic"), none, (long long)n.total(), (long long)n.n1, (long long)n.n2, lambda, none, res,
             tol, status(pass)});
    }
  }

  if (o.matrix) {
    const auto op = o.k1 ? ops::anisotropic_hamiltonian(*o.k1, *o.k2, p) : ops::hamiltonian(p);
    const auto m = truncated_matrix(op, {o.window, o.window}, true, p);
    const double defect = hermiticity_defect(m);
    const double sym_tol = g.tol.value_or(1e-12);
    const bool pass = defect < sym_tol;
    ok = ok && pass;
    const auto ev = low_lying_eigenvalues(m, std::min(6, static_cast<int>(m.matrix.rows())));
    for (std::size_t i = 0; i < ev.size(); ++i) {
      t.add({std::string("matrix"), (long long)i, none, none, none, ev[i], none, defect, sym_tol, status(pass)});
    }
  }
  return t;
}

Table cmd_limit(const LimitOptions& o, double theta) {
  using namespace continuum;
  if (o.scales.empty()) throw DomainError("--scales must list at least one scale");
  for (double s : o.scales) {
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("--scales entries must be positive");
  }
  if (!(o.window >= 0.0) || !std::isfinite(o.window)) throw DomainError("--window must be nonnegative");
  if (o.N < 0 || o.n < 0 || o.n > o.N) throw DomainError("need 0 <= n <= N");
  LimitQuantity what = LimitQuantity::Wavefunction;
  if (o.what == "weight") what = LimitQuantity::Weight;
  else if (o.what == "ladder") what = LimitQuantity::Ladder;
  const auto rows = convergence_scan(what, o.scales, o.N, o.n, theta, o.window, parse_ladder(o.op));
  Table t({"quantity", "scale", "N", "n", "theta", "window", "sup_error"});
  const bool weight = what == LimitQuantity::Weight;
  for (const auto& r : rows) {
    t.add({r.quantity, r.scale, weight ? Cell{} : Cell{(long long)r.N}, weight ? Cell{} : Cell{(long long)r.n},
           weight ? Cell{} : Cell{r.theta}, o.window, r.sup_error});
  }
  return t;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bivariate Charlier oscillator on the quarter lattice: evaluation, identity checks, spectra, limits"};
  app.name("charlier_lattice");
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_option("--alpha", g.alpha, "alpha > 0")->capture_default_str();
  app.add_option("--beta", g.beta, "beta > 0")->capture_default_str();
  app.add_option("--theta", g.theta, "rotation angle in radians")->capture_default_str();
  app.add_option("--out", g.out, "write machine output to this file instead of stdout");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--seed", g.seed, "seed for probe functions")->capture_default_str();
  double tol = 0.0;
  auto* tol_opt = app.add_option("--tol", tol, "override every declared tolerance");

  EvalOptions ev;
  auto* eval = app.add_subcommand("eval", "evaluate C_{n1,n2} at a point or on a grid");
  eval->add_option("--n1", ev.n1)->capture_default_str();
  eval->add_option("--n2", ev.n2)->capture_default_str();
  int x1 = 0, x2 = 0;
  auto* x1_opt = eval->add_option("--x1", x1);
  auto* x2_opt = eval->add_option("--x2", x2);
  eval->add_option("--grid", ev.grid, "AxB: x1 in [0..A-1], x2 in [0..B-1]");
  eval->add_option("--route", ev.route)->check(CLI::IsMember({"ladder", "explicit"}))->capture_default_str();

  std::string suite = "all";
  int nmax = 5;
  auto* verify = app.add_subcommand("verify", "run identity suites and report max residuals");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"ladder", "eigen", "su2", "casimir", "ortho", "gauge", "all"}))
      ->capture_default_str();
  verify->add_option("--nmax", nmax, "largest n1 + n2 checked")->capture_default_str();

  SpectrumOptions sp;
  double k1 = 0.0, k2 = 0.0;
  auto* spectrum = app.add_subcommand("spectrum", "energy levels, anisotropic eigenvalues, truncated matrix");
  spectrum->add_option("--Nmax", sp.nmax)->capture_default_str();
  spectrum->add_flag("--matrix", sp.matrix, "also diagonalize the gauged operator on a window");
  spectrum->add_option("--window", sp.window, "matrix window is [0..W]^2")->capture_default_str();
  auto* k1_opt = spectrum->add_option("--k1", k1);
  auto* k2_opt = spectrum->add_option("--k2", k2);

  LimitOptions lo;
  auto* limit = app.add_subcommand("limit", "continuum-limit convergence table (alpha = beta = scale)");
  limit->add_option("--what", lo.what)->check(CLI::IsMember({"weight", "wavefunction", "ladder"}))->capture_default_str();
  limit->add_option("--N", lo.N)->capture_default_str();
  limit->add_option("--n", lo.n)->capture_default_str();
  limit->add_option("--scales", lo.scales)->delimiter(',')->expected(1, 1 << 20);
  limit->add_option("--window", lo.window, "|xt_i| bound")->capture_default_str();
  limit->add_option("--op", lo.op)->check(CLI::IsMember({"raise1", "raise2", "lower1", "lower2"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (tol_opt->count()) g.tol = tol;
    if (g.tol && !(*g.tol > 0.0 && std::isfinite(*g.tol))) throw DomainError("--tol must be positive");
    const ModelParams params(g.alpha, g.beta, g.theta);

    bool ok = true;
    std::optional<Table> table;
    if (*eval) {
      if (x1_opt->count()) ev.x1 = x1;
      if (x2_opt->count()) ev.x2 = x2;
      table = cmd_eval(ev, params);
    } else if (*verify) {
      table = cmd_verify(suite, nmax, g, params, ok);
    } else if (*spectrum) {
      if (k1_opt->count()) sp.k1 = k1;
      if (k2_opt->count()) sp.k2 = k2;
      table = cmd_spectrum(sp, g, params, ok);
    } else {
      table = cmd_limit(lo, g.theta);
    }

    std::ofstream file;
    if (!g.out.empty()) {
      file.open(g.out, std::ios::binary);
      if (!file) throw DomainError("cannot open --out file '" + g.out + "'");
    }
    std::ostream& sink = g.out.empty() ? out : file;
    if (g.format == "json") table->write_json(sink);
    else table->write_csv(sink);
    if (!ok) {
      err << "tolerance check failed\n";
      return kToleranceFailure;
    }
    return kOk;
  } catch (const SingularParameters& e) {
    err << "error: " << e.what() << "\n";
    return kSingular;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const OutOfDomain& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace charlier::cli
