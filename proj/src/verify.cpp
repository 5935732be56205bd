#include "xsusy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "xsusy/errors.hpp"
#include "xsusy/numerics.hpp"
#include "xsusy/pct.hpp"
#include "xsusy/susy.hpp"
#include "xsusy/xpoly.hpp"

namespace xsusy {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr int kNuMax = 5;

std::string label(const OscillatorParams& p) {
  std::ostringstream os;
  os << "oscillator(omega=" << p.omega << ",l=" << p.l << ")";
  return os.str();
}

std::string label(const ScarfParams& p) {
  std::ostringstream os;
  os << "scarf(A=" << p.A << ",B=" << p.B << ")";
  return os.str();
}

std::vector<double> oscillator_points() { return linspace(0.2, 6.0, 50); }
std::vector<double> scarf_points() { return linspace(-1.3, 1.3, 50); }

using Checks = std::vector<CheckResult>;

// --- xpoly ---------------------------------------------------------------

template <class Params, class Build>
double max_ode_residual(const Params& p, Build build, int n, const std::vector<double>& gs) {
  const Polynomial poly = build(n, p);
  const Polynomial dd = poly.derivative().derivative();
  double worst = 0.0, scale = 0.0;
  for (double g : gs) {
    worst = std::max(worst, std::abs(ode_residual(poly, p, n, g)));
    scale = std::max(scale, std::abs(dd(g)));
  }
  return worst / (1.0 + scale);
}

template <class Params>
double max_gram_offdiag(const Params& p, int degree_max) {
  std::vector<double> diag(degree_max + 1);
  for (int m = 1; m <= degree_max; ++m) diag[m] = x1_inner_product(p, m, m);
  double worst = 0.0;
  for (int m = 1; m <= degree_max; ++m)
    for (int n = m + 1; n <= degree_max; ++n)
      worst = std::max(worst, std::abs(x1_inner_product(p, m, n)) / std::sqrt(diag[m] * diag[n]));
  return worst;
}

void xpoly_checks(Checks& out) {
  for (const auto& osc : oscillator_sweep()) {
    if (osc.omega != 1.0) continue;
    const auto p = osc.x1();
    std::ostringstream name;
    name << "laguerre-x1(alpha=" << p.alpha << ")";
    double res = 0.0;
    int monic_failures = 0, root_mismatch = 0;
    for (int n = 1; n <= 12; ++n) {
      res = std::max(res, max_ode_residual(p, x1_laguerre, n, linspace(0.1, 10.0 + 2.0 * n, 50)));
      const auto poly = x1_laguerre(n, p);
      if (!poly.is_monic()) ++monic_failures;
      if (n <= 8 && count_sign_changes(poly, 0.0, 4.0 * n + 2.0 * p.alpha + 40.0, 200000) != n - 1) ++root_mismatch;
    }
    out.push_back(make_check("xpoly", name.str() + " ode residual", res, 1e-9));
    out.push_back(make_check("xpoly", name.str() + " monic failures", monic_failures, 0));
    out.push_back(make_check("xpoly", name.str() + " root-count mismatches", root_mismatch, 0));
    out.push_back(make_check("xpoly", name.str() + " gram off-diagonal", max_gram_offdiag(p, 8), 1e-8));
  }
  for (const auto& sc : scarf_sweep()) {
    const auto p = sc.x1();
    std::ostringstream name;
    name << "jacobi-x1(alpha=" << p.alpha << ",beta=" << p.beta << ")";
    double res = 0.0;
    int monic_failures = 0, root_mismatch = 0;
    for (int n = 1; n <= 12; ++n) {
      res = std::max(res, max_ode_residual(p, x1_jacobi, n, linspace(-0.98, 0.98, 50)));
      const auto poly = x1_jacobi(n, p);
      if (!poly.is_monic()) ++monic_failures;
      if (n <= 8 && count_sign_changes(poly, -1.0, 1.0, 20000) != n - 1) ++root_mismatch;
    }
    out.push_back(make_check("xpoly", name.str() + " ode residual", res, 1e-9));
    out.push_back(make_check("xpoly", name.str() + " monic failures", monic_failures, 0));
    out.push_back(make_check("xpoly", name.str() + " root-count mismatches", root_mismatch, 0));
    out.push_back(make_check("xpoly", name.str() + " gram off-diagonal", max_gram_offdiag(p, 8), 1e-8));
  }
}

// --- numerics ------------------------------------------------------------

void numerics_checks(Checks& out) {
  const int n = 200;
  const auto m = build_hamiltonian([](double) { return 0.0; }, Grid::make(0.0, 1.0, n));
  const auto ev = eigen_lowest(m, 5);
  const double h = 1.0 / (n + 1);
  double worst = 0.0;
  for (int k = 1; k <= 5; ++k) {
    const double exact = (2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1))) / (h * h);
    worst = std::max(worst, std::abs(ev[k - 1] - exact) / exact);
  }
  out.push_back(make_check("numerics", "discrete laplacian eigenvalues (relative)", worst, 1e-10));

  const double q = std::abs(quad([](double x) { return std::exp(-x); }, 0.0, 50.0) - 1.0);
  out.push_back(make_check("numerics", "quad exp on [0,50]", q, 1e-12));

  const auto well = solve_spectrum([](double x) { return 0.25 * x * x; }, -30.0, 30.0, 1, {8000, true});
  out.push_back(make_check("numerics", "harmonic well ground level", std::abs(well[0] - 0.5), 1e-6));
}

// --- models --------------------------------------------------------------

void models_checks(Checks& out) {
  for (const auto& p : oscillator_sweep()) {
    for (auto kind : {PotentialKind::standard, PotentialKind::extended}) {
      const auto problem = make_problem(p, kind);
      double worst = 0.0;
      for (int nu = 0; nu <= kNuMax; ++nu)
        worst = std::max(worst, schrodinger_residual(problem, nu, oscillator_points()));
      out.push_back(make_check("models", label(p) + " " + to_string(kind) + " schrodinger residual", worst, 1e-6));
    }
    if (p.l == 0) {
      const double v0 = v_oscillator_extended(0.0, p);
      out.push_back(make_check("models", label(p) + " V(0) + 4 omega", std::abs(v0 + 4.0 * p.omega), 0.0));
    }
  }
  for (const auto& p : scarf_sweep()) {
    for (auto kind : {PotentialKind::standard, PotentialKind::extended}) {
      const auto problem = make_problem(p, kind);
      double worst = 0.0;
      for (int nu = 0; nu <= kNuMax; ++nu)
        worst = std::max(worst, schrodinger_residual(problem, nu, scarf_points()));
      out.push_back(make_check("models", label(p) + " " + to_string(kind) + " schrodinger residual", worst, 1e-6));
    }
  }
}

template <class Params>
std::pair<double, double> table_range(const Params& p);

template <>
std::pair<double, double> table_range(const OscillatorParams& p) {
  return {0.0, oscillator_support(p, kNuMax)};
}

template <>
std::pair<double, double> table_range(const ScarfParams&) {
  return {-kHalfPi, kHalfPi};
}

template <class Params>
void node_checks_for(const Params& p, Checks& out) {
  const auto problem = make_problem(p, PotentialKind::extended);
  const auto [lo, hi] = table_range(p);
  int mismatches = 0;
  for (int nu = 0; nu <= kNuMax; ++nu) {
    const int coarse = count_nodes(sample_wavefunction(problem, nu, lo, hi, 2001));
    const int fine = count_nodes(sample_wavefunction(problem, nu, lo, hi, 4001));
    if (coarse != nu || fine != nu) ++mismatches;
  }
  out.push_back(make_check("nodes", label(p) + " node-count mismatches", mismatches, 0));
}

template <class Params>
void orthogonality_checks_for(const Params& p, Checks& out) {
  const auto problem = make_problem(p, PotentialKind::extended);
  const auto [lo, hi] = table_range(p);
  std::vector<WavefunctionTable> tables;
  for (int nu = 0; nu <= 4; ++nu) tables.push_back(normalize(sample_wavefunction(problem, nu, lo, hi, 20001)));
  double worst = 0.0;
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      worst = std::max(worst, std::abs(table_inner_product(tables[m], tables[n]) - (m == n ? 1.0 : 0.0)));
  out.push_back(make_check("orthogonality", label(p) + " gram deviation", worst, 1e-7));
}

// --- pct -----------------------------------------------------------------

void pct_checks(Checks& out) {
  for (const auto& p : oscillator_sweep()) {
    const auto cf = laguerre_x1_coefficients(p.x1());
    const auto cv = oscillator_change_of_variable(p.omega);
    double worst = 0.0;
    for (int nu = 0; nu <= kNuMax; ++nu) {
      const auto est = energy_extract(cf, cv, nu + 1, oscillator_points(),
                                      [&p](double x) { return v_oscillator_extended(x, p); });
      const double e = energy_oscillator(nu, p);
      worst = std::max({worst, est.max_dev / (1.0 + std::abs(e)), std::abs(est.energy - e) / (1.0 + std::abs(e))});
    }
    out.push_back(make_check("pct", label(p) + " energy constancy", worst, 1e-8));
  }
  for (const auto& p : scarf_sweep()) {
    const auto cf = jacobi_x1_coefficients(p.x1());
    const auto cv = scarf_change_of_variable();
    double worst = 0.0;
    for (int nu = 0; nu <= kNuMax; ++nu) {
      const auto est = energy_extract(cf, cv, nu + 1, scarf_points(),
                                      [&p](double x) { return v_scarf_extended(x, p); });
      const double e = energy_scarf(nu, p);
      worst = std::max({worst, est.max_dev / (1.0 + std::abs(e)), std::abs(est.energy - e) / (1.0 + std::abs(e))});
    }
    out.push_back(make_check("pct", label(p) + " energy constancy", worst, 1e-8));

    const auto j = p.x1();
    double expansion = 0.0;
    for (double g : linspace(-0.95, 0.95, 30)) {
      const double numeric = normal_form(cf, g, 3);
      expansion = std::max(expansion, std::abs(jacobi_expansion(g, j.alpha, j.beta, 3) - numeric) /
                                          std::max(1.0, std::abs(numeric)));
    }
    out.push_back(make_check("pct", label(p) + " jacobi constants vs normal form", expansion, 1e-10));
  }
  double expansion = 0.0;
  for (double alpha : {0.5, 1.5, 2.5}) {
    const auto cf = laguerre_x1_coefficients({alpha});
    for (double g : linspace(0.1, 30.0, 30)) {
      const double numeric = normal_form(cf, g, 4);
      expansion = std::max(expansion, std::abs(laguerre_expansion(g, alpha, 4) - numeric) /
                                          std::max(1.0, std::abs(numeric)));
    }
  }
  out.push_back(make_check("pct", "laguerre expansion vs normal form", expansion, 1e-10));
}

// --- susy ----------------------------------------------------------------

template <class Params, class Vplus>
void susy_checks_for(const Params& p, const std::vector<double>& xs, Vplus v_plus, Checks& out) {
  const double e0 = factorization_energy(p);
  double w_dev = 0.0, v_dev = 0.0;
  for (double x : xs) {
    const auto w = superpotential_closed(p, x);
    const double w_fd = superpotential_from_ground_state(p, x);
    w_dev = std::max(w_dev, std::abs(w_fd - w.total()) / (1.0 + std::abs(w.total())));
    const double wd = superpotential_derivative(p, x).total();
    const double vp = v_plus(x);
    v_dev = std::max(v_dev, std::abs(w.total() * w.total() - wd + e0 - vp) / std::max(1.0, std::abs(vp)));
  }
  out.push_back(make_check("susy", label(p) + " W consistency", w_dev, 1e-7));
  out.push_back(make_check("susy", label(p) + " V+ reconstruction", v_dev, 1e-7));
}

void susy_checks(Checks& out) {
  for (const auto& p : oscillator_sweep())
    susy_checks_for(p, oscillator_points(), [&p](double x) { return v_oscillator_extended(x, p); }, out);
  for (const auto& p : scarf_sweep())
    susy_checks_for(p, scarf_points(), [&p](double x) { return v_scarf_extended(x, p); }, out);
}

void shape_checks(Checks& out) {
  for (const auto& p : oscillator_sweep()) {
    const auto r = shape_invariance_report(p, oscillator_points());
    const double expected = energy_oscillator(1, p) - energy_oscillator(0, p);
    out.push_back(make_check("shape-invariance", label(p) + " gap - 2 omega", std::abs(r.gap - expected), 1e-8,
                             "gap=" + format_double(r.gap)));
    out.push_back(make_check("shape-invariance", label(p) + " max deviation", r.max_dev, 1e-8 * (1.0 + r.gap)));
  }
  for (const auto& p : scarf_sweep()) {
    const auto r = shape_invariance_report(p, scarf_points());
    const double expected = energy_scarf(1, p) - energy_scarf(0, p);
    out.push_back(make_check("shape-invariance", label(p) + " gap - (2A+1)", std::abs(r.gap - expected), 1e-8,
                             "gap=" + format_double(r.gap)));
    out.push_back(make_check("shape-invariance", label(p) + " max deviation", r.max_dev, 1e-8 * (1.0 + r.gap)));
  }
}

// --- spectra -------------------------------------------------------------

std::function<double(double)> oracle_potential(const BoundStateProblem& extended, const BoundStateProblem& standard,
                                               bool perturb) {
  if (!perturb) return extended.potential;
  return [v = extended.potential, v1 = standard.potential](double x) { return v(x) + 0.1 * (v(x) - v1(x)); };
}

struct SpectrumPair {
  std::vector<double> standard, extended, analytic;
};

template <class Params>
SpectrumPair spectra_for(const Params& p, double lo, double hi, bool perturb) {
  const auto ext = make_problem(p, PotentialKind::extended);
  const auto std_problem = make_problem(p, PotentialKind::standard);
  SpectrumPair s;
  s.extended = solve_spectrum(oracle_potential(ext, std_problem, perturb), lo, hi, kNuMax + 1);
  s.standard = solve_spectrum(std_problem.potential, lo, hi, kNuMax + 1);
  for (int nu = 0; nu <= kNuMax; ++nu) s.analytic.push_back(ext.energy(nu));
  return s;
}

void spectrum_checks(Checks& out, bool perturb, bool spectrum, bool iso) {
  auto record = [&](const std::string& name, const SpectrumPair& s, double tol) {
    double worst_ext = 0.0, worst_std = 0.0, worst_iso = 0.0;
    for (int nu = 0; nu <= kNuMax; ++nu) {
      worst_ext = std::max(worst_ext, std::abs(s.extended[nu] - s.analytic[nu]));
      worst_std = std::max(worst_std, std::abs(s.standard[nu] - s.analytic[nu]));
      worst_iso = std::max(worst_iso, std::abs(s.extended[nu] - s.standard[nu]));
    }
    if (spectrum) {
      out.push_back(make_check("spectrum", name + " extended vs analytic", worst_ext, tol));
      out.push_back(make_check("spectrum", name + " standard vs analytic", worst_std, tol));
    }
    if (iso) out.push_back(make_check("isospectrality", name + " extended vs standard", worst_iso, 2.0 * tol));
  };
  for (const auto& p : oscillator_sweep())
    record(label(p), spectra_for(p, 0.0, oscillator_box(p, kNuMax), perturb), kOscillatorSpectrumTol);
  for (const auto& p : scarf_sweep()) record(label(p), spectra_for(p, -kHalfPi, kHalfPi, perturb), kScarfSpectrumTol);
}

void partner_checks(Checks& out) {
  for (const auto& p : oscillator_sweep()) {
    const auto ev = solve_spectrum([&p](double x) { return partner_potential(p, x); }, 0.0,
                                   oscillator_box(p, kNuMax + 1), kNuMax);
    double worst = 0.0;
    for (int k = 0; k < kNuMax; ++k) worst = std::max(worst, std::abs(ev[k] - energy_oscillator(k + 1, p)));
    out.push_back(make_check("partner", label(p) + " V- levels vs E1..E5", worst, kOscillatorSpectrumTol));
  }
  for (const auto& p : scarf_sweep()) {
    const auto ev = solve_spectrum([&p](double x) { return partner_potential(p, x); }, -kHalfPi, kHalfPi, kNuMax);
    double worst = 0.0;
    for (int k = 0; k < kNuMax; ++k) worst = std::max(worst, std::abs(ev[k] - energy_scarf(k + 1, p)));
    out.push_back(make_check("partner", label(p) + " V- levels vs E1..E5", worst, kScarfSpectrumTol));
  }
}

}  // namespace

std::vector<OscillatorParams> oscillator_sweep() {
  std::vector<OscillatorParams> out;
  for (double omega : {1.0, 2.0})
    for (int l : {0, 1, 2}) out.push_back({omega, l});
  return out;
}

std::vector<ScarfParams> scarf_sweep() { return {{3.0, 1.0}, {4.0, 1.5}, {5.0, 2.0}}; }

const std::vector<std::string>& verification_groups() {
  static const std::vector<std::string> groups{"xpoly",  "numerics",         "models",   "nodes",
                                               "orthogonality", "pct",     "susy",     "shape-invariance",
                                               "spectrum",      "isospectrality", "partner"};
  return groups;
}

VerifySummary run_verification(const VerifyOptions& opts) {
  const auto& groups = verification_groups();
  for (const auto& g : opts.only)
    if (std::find(groups.begin(), groups.end(), g) == groups.end())
      throw DomainError("verify: unknown check group '" + g + "'");
  auto selected = [&](const std::string& g) {
    return opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), g) != opts.only.end();
  };

  VerifySummary summary;
  auto& out = summary.checks;
  if (selected("xpoly")) xpoly_checks(out);
  if (selected("numerics")) numerics_checks(out);
  if (selected("models")) models_checks(out);
  if (selected("nodes")) {
    for (const auto& p : oscillator_sweep()) node_checks_for(p, out);
    for (const auto& p : scarf_sweep()) node_checks_for(p, out);
  }
  if (selected("orthogonality")) {
    for (const auto& p : oscillator_sweep()) orthogonality_checks_for(p, out);
    for (const auto& p : scarf_sweep()) orthogonality_checks_for(p, out);
  }
  if (selected("pct")) pct_checks(out);
  if (selected("susy")) susy_checks(out);
  if (selected("shape-invariance")) shape_checks(out);
  if (selected("spectrum") || selected("isospectrality"))
    spectrum_checks(out, opts.perturb_v2, selected("spectrum"), selected("isospectrality"));
  if (selected("partner")) partner_checks(out);
  return summary;
}

}  // namespace xsusy
