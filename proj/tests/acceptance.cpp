// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <xsusy/models.hpp>
#include <xsusy/numerics.hpp>
#include <xsusy/pct.hpp>
#include <xsusy/report.hpp>
#include <xsusy/susy.hpp>
#include <xsusy/verify.hpp>
#include <xsusy/xpoly.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace xsusy;

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Spectra are shared by criteria 1-3.
struct SpectraCache {
  std::vector<SpectrumReport> osc_ext, osc_std, scarf_ext, scarf_std;
  double osc_seconds = 0.0, scarf_seconds = 0.0;
};

SpectraCache& spectra() {
  static SpectraCache cache = [] {
    SpectraCache c;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& p : oscillator_sweep()) {
      c.osc_ext.push_back(compute_spectrum(p, PotentialKind::extended, 5, {}, kOscillatorSpectrumTol));
      c.osc_std.push_back(compute_spectrum(p, PotentialKind::standard, 5, {}, kOscillatorSpectrumTol));
    }
    c.osc_seconds = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    for (const auto& p : scarf_sweep()) {
      c.scarf_ext.push_back(compute_spectrum(p, PotentialKind::extended, 5, {}, kScarfSpectrumTol));
      c.scarf_std.push_back(compute_spectrum(p, PotentialKind::standard, 5, {}, kScarfSpectrumTol));
    }
    c.scarf_seconds = seconds_since(t0);
    return c;
  }();
  return cache;
}

double max_abs_diff(const std::vector<SpectrumReport>& reports) {
  double m = 0.0;
  for (const auto& r : reports)
    for (const auto& row : r.rows) m = std::max(m, row.abs_diff);
  return m;
}

double max_level_gap(const std::vector<SpectrumReport>& a, const std::vector<SpectrumReport>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a[i].rows.size(); ++k)
      m = std::max(m, std::abs(a[i].rows[k].e_numeric - b[i].rows[k].e_numeric));
  return m;
}

Outcome oscillator_spectrum() {
  auto& c = spectra();
  const double d = std::max(max_abs_diff(c.osc_ext), max_abs_diff(c.osc_std));
  return {d <= kOscillatorSpectrumTol && c.osc_seconds <= 10.0,
          "max|dE|=" + fmt(d) + " tol " + fmt(kOscillatorSpectrumTol) + ", " + fmt(c.osc_seconds) + " s"};
}

Outcome scarf_spectrum() {
  auto& c = spectra();
  const double d = std::max(max_abs_diff(c.scarf_ext), max_abs_diff(c.scarf_std));
  return {d <= kScarfSpectrumTol && c.scarf_seconds <= 10.0,
          "max|dE|=" + fmt(d) + " tol " + fmt(kScarfSpectrumTol) + ", " + fmt(c.scarf_seconds) + " s"};
}

Outcome isospectrality() {
  auto& c = spectra();
  const double o = max_level_gap(c.osc_ext, c.osc_std);
  const double s = max_level_gap(c.scarf_ext, c.scarf_std);
  return {o <= 2.0 * kOscillatorSpectrumTol && s <= 2.0 * kScarfSpectrumTol,
          "oscillator " + fmt(o) + ", scarf " + fmt(s)};
}

Outcome point_value() {
  bool ok = true;
  for (double w : {0.5, 1.0, 2.0, 3.0}) ok = ok && v_oscillator_extended(0.0, {w, 0}) == -4.0 * w;
  return {ok, "V(0) = -4 omega for omega in {0.5, 1, 2, 3}"};
}

template <class Fn>
void for_each_problem(Fn&& fn) {
  for (auto kind : {PotentialKind::standard, PotentialKind::extended}) {
    for (const auto& p : oscillator_sweep()) fn(make_problem(p, kind), p);
    for (const auto& p : scarf_sweep()) fn(make_problem(p, kind), p);
  }
}

Outcome eigenfunction_residual() {
  const auto xo = linspace(0.2, 6.0, 50);
  const auto xs = linspace(-1.3, 1.3, 50);
  double worst = 0.0;
  for_each_problem([&](const BoundStateProblem& prob, const auto&) {
    const auto& pts = std::isinf(prob.hi) ? xo : xs;
    for (int nu = 0; nu <= 5; ++nu) worst = std::max(worst, schrodinger_residual(prob, nu, pts));
  });
  return {worst <= 1e-6, "max residual " + fmt(worst)};
}

std::pair<double, double> table_range(const BoundStateProblem& prob, int nu_max) {
  if (!std::isinf(prob.hi)) return {prob.lo, prob.hi};
  // Oscillator: recover omega from the level spacing.
  const double omega = 0.5 * (prob.energy(1) - prob.energy(0));
  const double support = std::sqrt(4.0 * prob.energy(nu_max) / omega) + 6.0 / std::sqrt(omega);
  return {0.0, std::max(10.0, support)};
}

Outcome node_counts() {
  int mismatches = 0, total = 0;
  for_each_problem([&](const BoundStateProblem& prob, const auto&) {
    const auto [lo, hi] = table_range(prob, 5);
    for (int nu = 0; nu <= 5; ++nu) {
      ++total;
      const int a = count_nodes(sample_wavefunction(prob, nu, lo, hi, 2001));
      const int b = count_nodes(sample_wavefunction(prob, nu, lo, hi, 4001));
      if (a != nu || b != nu) ++mismatches;
    }
  });
  return {mismatches == 0, std::to_string(mismatches) + " of " + std::to_string(total) + " tables off"};
}

Outcome orthogonality() {
  double table_dev = 0.0;
  for (const auto& p : oscillator_sweep()) {
    const auto prob = make_problem(p, PotentialKind::extended);
    std::vector<WavefunctionTable> t;
    for (int nu = 0; nu <= 4; ++nu) t.push_back(normalize(sample_wavefunction(prob, nu, 0.0, oscillator_support(p, 4), 20001)));
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n)
        table_dev = std::max(table_dev, std::abs(table_inner_product(t[m], t[n]) - (m == n ? 1.0 : 0.0)));
  }
  for (const auto& p : scarf_sweep()) {
    const auto prob = make_problem(p, PotentialKind::extended);
    std::vector<WavefunctionTable> t;
    for (int nu = 0; nu <= 4; ++nu) t.push_back(normalize(sample_wavefunction(prob, nu, -kHalfPi, kHalfPi, 20001)));
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n)
        table_dev = std::max(table_dev, std::abs(table_inner_product(t[m], t[n]) - (m == n ? 1.0 : 0.0)));
  }

  double poly_dev = 0.0;
  auto gram = [&](const auto& params) {
    std::vector<double> diag(9, 0.0);
    for (int n = 1; n <= 8; ++n) diag[n] = x1_inner_product(params, n, n);
    for (int m = 1; m <= 8; ++m)
      for (int n = m + 1; n <= 8; ++n)
        poly_dev = std::max(poly_dev, std::abs(x1_inner_product(params, m, n)) / std::sqrt(diag[m] * diag[n]));
  };
  for (const auto& p : oscillator_sweep())
    if (p.omega == 1.0) gram(p.x1());
  for (const auto& p : scarf_sweep()) gram(p.x1());
  return {table_dev <= 1e-7 && poly_dev <= 1e-8, "tables " + fmt(table_dev) + ", polynomials " + fmt(poly_dev)};
}

Outcome pct_constancy() {
  double worst = 0.0;  // in units of the per-level tolerance
  const auto xo = linspace(0.2, 6.0, 50);
  for (const auto& p : oscillator_sweep()) {
    const auto cf = laguerre_x1_coefficients(p.x1());
    const auto cv = oscillator_change_of_variable(p.omega);
    for (int nu = 0; nu <= 5; ++nu) {
      const auto est = energy_extract(cf, cv, nu + 1, xo, [&](double x) { return v_oscillator_extended(x, p); });
      const double e = energy_oscillator(nu, p), tol = 1e-8 * (1.0 + std::abs(e));
      worst = std::max({worst, est.max_dev / tol, std::abs(est.energy - e) / tol});
    }
  }
  const auto xs = linspace(-1.3, 1.3, 50);
  for (const auto& p : scarf_sweep()) {
    const auto cf = jacobi_x1_coefficients(p.x1());
    const auto cv = scarf_change_of_variable();
    for (int nu = 0; nu <= 5; ++nu) {
      const auto est = energy_extract(cf, cv, nu + 1, xs, [&](double x) { return v_scarf_extended(x, p); });
      const double e = energy_scarf(nu, p), tol = 1e-8 * (1.0 + std::abs(e));
      worst = std::max({worst, est.max_dev / tol, std::abs(est.energy - e) / tol});
    }
  }

  std::mt19937 rng(20261016);
  std::uniform_real_distribution<double> ug(0.05, 30.0), ua(0.2, 5.0), uj(-0.99, 0.99);
  std::uniform_int_distribution<int> un(1, 10);
  double expansion = 0.0;
  for (int i = 0; i < 30; ++i) {
    const double g = ug(rng), a = ua(rng);
    const int n = un(rng);
    const double ref = normal_form(laguerre_x1_coefficients({a}), g, n);
    expansion = std::max(expansion, std::abs(laguerre_expansion(g, a, n) - ref) / std::max(1.0, std::abs(ref)));
  }
  for (int done = 0; done < 30;) {
    const double a = ua(rng), b = ua(rng), g = uj(rng);
    const int n = un(rng);
    const JacobiX1Params jp{a, b};
    if (std::abs(a - b) < 0.2 || std::abs(g - jp.exceptional_pole()) < 0.05) continue;
    const double ref = normal_form(jacobi_x1_coefficients(jp), g, n);
    expansion = std::max(expansion, std::abs(jacobi_expansion(g, a, b, n) - ref) / std::max(1.0, std::abs(ref)));
    ++done;
  }
  return {worst <= 1.0 && expansion <= 1e-10,
          "constancy " + fmt(worst) + " x tol, closed forms " + fmt(expansion)};
}

Outcome susy() {
  const auto xo = linspace(0.2, 6.0, 50);
  const auto xs = linspace(-1.3, 1.3, 50);
  double w_dev = 0.0, v_dev = 0.0, si_ratio = 0.0, gap_err = 0.0, partner = 0.0;

  auto one = [&](const auto& p, const std::vector<double>& pts, auto v_ext, double gap_want, auto energy,
                 double lo, double hi, double tol) {
    const double e0 = factorization_energy(p);
    for (double x : pts) {
      const double w = superpotential_closed(p, x).total();
      w_dev = std::max(w_dev, std::abs(superpotential_from_ground_state(p, x) - w) / (1.0 + std::abs(w)));
      const double dw = superpotential_derivative(p, x).total();
      const double v = v_ext(x, p);
      v_dev = std::max(v_dev, std::abs(w * w - dw + e0 - v) / (1.0 + std::abs(v)));
      const double vm = partner_potential(p, x);
      v_dev = std::max(v_dev, std::abs(w * w + dw + e0 - vm) / (1.0 + std::abs(vm)));
    }
    const auto r = shape_invariance_report(p, pts);
    gap_err = std::max(gap_err, std::abs(r.gap - gap_want));
    si_ratio = std::max(si_ratio, r.max_dev / (1e-8 * (1.0 + r.gap)));
    const auto ev = solve_spectrum([&](double x) { return partner_potential(p, x); }, lo, hi, 5);
    for (int k = 0; k < 5; ++k) partner = std::max(partner, std::abs(ev[k] - energy(k + 1, p)) / tol);
  };
  for (const auto& p : oscillator_sweep())
    one(p, xo, v_oscillator_extended, 2.0 * p.omega, energy_oscillator, 0.0, oscillator_box(p, 6),
        kOscillatorSpectrumTol);
  for (const auto& p : scarf_sweep())
    one(p, xs, v_scarf_extended, 2.0 * p.A + 1.0, energy_scarf, -kHalfPi, kHalfPi, kScarfSpectrumTol);

  const bool ok = w_dev <= 1e-7 && v_dev <= 1e-7 && gap_err <= 1e-8 && si_ratio <= 1.0 && partner <= 1.0;
  return {ok, "W " + fmt(w_dev) + ", V+- " + fmt(v_dev) + ", gap err " + fmt(gap_err) + ", shape dev " +
                  fmt(si_ratio) + " x tol, partner " + fmt(partner) + " x tol"};
}

Outcome numeric_normalization() {
  // Normalize on the table, then integrate the rescaled analytic psi^2 by
  // adaptive quadrature.
  double worst = 0.0;
  for_each_problem([&](const BoundStateProblem& prob, const auto&) {
    const auto [lo, hi] = table_range(prob, 5);
    for (int nu = 0; nu <= 5; ++nu) {
      const auto raw = sample_wavefunction(prob, nu, lo, hi, 20001);
      const auto unit = normalize(raw);
      const std::size_t mid = raw.values.size() / 3;
      const double scale = unit.values[mid] / raw.values[mid];
      const double norm = quad([&](double x) { const double v = scale * prob.wavefunction(nu, x); return v * v; },
                               lo, hi, QuadOptions{64, 1e-12, 50});
      worst = std::max(worst, std::abs(norm - 1.0));
    }
  });
  return {worst <= 1e-6, "max |int psi^2 - 1| = " + fmt(worst)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "oscillator spectrum", oscillator_spectrum},
      {2, "scarf spectrum", scarf_spectrum},
      {3, "isospectrality", isospectrality},
      {4, "extended oscillator V(0)", point_value},
      {5, "eigenfunction residual", eigenfunction_residual},
      {6, "node counts", node_counts},
      {7, "orthogonality", orthogonality},
      {8, "pct constancy and closed forms", pct_constancy},
      {9, "susy partner and shape invariance", susy},
      {10, "numeric normalization", numeric_normalization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("%s criterion %d (%s): %s\n", o.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
