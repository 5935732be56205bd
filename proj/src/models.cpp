#include "xsusy/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "xsusy/errors.hpp"
#include "xsusy/numerics.hpp"

namespace xsusy {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr int kCachedLevels = 16;

void check_oscillator_x(double x, const OscillatorParams& p) {
  if (!(x >= 0.0)) throw DomainError("oscillator: x must lie on the half line");
  if (x == 0.0 && p.l > 0) throw DomainError("oscillator: centrifugal singularity at x = 0 for l > 0");
}

void check_scarf_x(double x) {
  if (!(std::abs(x) < kHalfPi)) throw DomainError("Scarf I: x must lie in (-pi/2, pi/2)");
}

double oscillator_extension(double x, const OscillatorParams& p) {
  const double u = p.omega * x * x + 2.0 * p.l + 1.0;
  return 4.0 * p.omega / u - 8.0 * p.omega * (2.0 * p.l + 1.0) / (u * u);
}

double scarf_extension(double x, const ScarfParams& p) {
  const double two_a1 = 2.0 * p.A - 1.0;
  const double den = two_a1 - 2.0 * p.B * std::sin(x);
  return 2.0 * two_a1 / den - 2.0 * (two_a1 * two_a1 - 4.0 * p.B * p.B) / (den * den);
}

// Prefactors with the polynomial left out.
double oscillator_extended_prefactor(const OscillatorParams& p, double x) {
  const double w = p.omega;
  return std::pow(x, p.l + 1) / (w * x * x + 2.0 * p.l + 1.0) * std::exp(-0.25 * w * x * x);
}

double scarf_envelope(const ScarfParams& p, double x) {
  const double s = std::sin(x);
  return std::pow(1.0 - s, 0.5 * (p.A - p.B)) * std::pow(1.0 + s, 0.5 * (p.A + p.B));
}

template <class Build>
std::shared_ptr<const std::vector<Polynomial>> cache_polys(Build build) {
  auto out = std::make_shared<std::vector<Polynomial>>();
  for (int nu = 0; nu < kCachedLevels; ++nu) out->push_back(build(nu));
  return out;
}

}  // namespace

void OscillatorParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("oscillator: require omega > 0");
  if (l < 0) throw DomainError("oscillator: require l = 0, 1, 2, ...");
}

void ScarfParams::validate() const {
  if (!std::isfinite(A) || !std::isfinite(B) || !(B > 0.0) || !(B < A - 1.0))
    throw DomainError("Scarf I: require 0 < B < A - 1");
}

const char* to_string(PotentialKind kind) {
  return kind == PotentialKind::standard ? "standard" : "extended";
}

double v_oscillator_standard(double x, const OscillatorParams& p) {
  p.validate();
  check_oscillator_x(x, p);
  const double centrifugal = p.l == 0 ? 0.0 : p.l * (p.l + 1.0) / (x * x);
  return 0.25 * p.omega * p.omega * x * x + centrifugal;
}

double v_oscillator_extended(double x, const OscillatorParams& p) {
  return v_oscillator_standard(x, p) + oscillator_extension(x, p);
}

double v_scarf_standard(double x, const ScarfParams& p) {
  p.validate();
  check_scarf_x(x);
  const double sec = 1.0 / std::cos(x);
  return (p.A * (p.A - 1.0) + p.B * p.B) * sec * sec - p.B * (2.0 * p.A - 1.0) * sec * std::tan(x);
}

double v_scarf_extended(double x, const ScarfParams& p) {
  return v_scarf_standard(x, p) + scarf_extension(x, p);
}

double energy_oscillator(int nu, const OscillatorParams& p) {
  if (nu < 0) throw DomainError("energy_oscillator: nu must be nonnegative");
  return p.omega * (2.0 * nu + p.l + 1.5);
}

double energy_scarf(int nu, const ScarfParams& p) {
  if (nu < 0) throw DomainError("energy_scarf: nu must be nonnegative");
  return (nu + p.A) * (nu + p.A);
}

double psi_oscillator(int nu, const OscillatorParams& p, double x) {
  p.validate();
  if (nu < 0 || x < 0.0) throw DomainError("psi_oscillator: require nu >= 0, x >= 0");
  const Polynomial poly = x1_laguerre(nu + 1, p.x1());
  return oscillator_extended_prefactor(p, x) * poly(0.5 * p.omega * x * x);
}

double psi_oscillator_standard(int nu, const OscillatorParams& p, double x) {
  p.validate();
  if (nu < 0 || x < 0.0) throw DomainError("psi_oscillator_standard: require nu >= 0, x >= 0");
  const Polynomial poly = classical_laguerre(nu, p.l + 0.5);
  return std::pow(x, p.l + 1) * std::exp(-0.25 * p.omega * x * x) * poly(0.5 * p.omega * x * x);
}

double psi_scarf(int nu, const ScarfParams& p, double x) {
  p.validate();
  if (nu < 0 || !(std::abs(x) <= kHalfPi)) throw DomainError("psi_scarf: require nu >= 0, |x| <= pi/2");
  const Polynomial poly = x1_jacobi(nu + 1, p.x1());
  const double s = std::sin(x);
  return scarf_envelope(p, x) / (2.0 * p.A - 1.0 - 2.0 * p.B * s) * poly(s);
}

double psi_scarf_standard(int nu, const ScarfParams& p, double x) {
  p.validate();
  if (nu < 0 || !(std::abs(x) <= kHalfPi))
    throw DomainError("psi_scarf_standard: require nu >= 0, |x| <= pi/2");
  const auto j = p.x1();
  const Polynomial poly = classical_jacobi(nu, j.alpha, j.beta);
  return scarf_envelope(p, x) * poly(std::sin(x));
}

GroundStateFactors ground_state_factorized(const OscillatorParams& p, double x) {
  p.validate();
  if (!(x >= 0.0)) throw DomainError("ground_state_factorized: x must lie on the half line");
  const double w = p.omega;
  return {std::pow(x, p.l + 1) * std::exp(-0.25 * w * x * x), 1.0 + 2.0 / (w * x * x + 2.0 * p.l + 1.0)};
}

GroundStateFactors ground_state_factorized(const ScarfParams& p, double x) {
  p.validate();
  if (!(std::abs(x) <= kHalfPi)) throw DomainError("ground_state_factorized: x must lie in [-pi/2, pi/2]");
  return {scarf_envelope(p, x), 1.0 + 2.0 / (2.0 * p.A - 1.0 - 2.0 * p.B * std::sin(x))};
}

BoundStateProblem make_problem(const OscillatorParams& p, PotentialKind kind) {
  p.validate();
  BoundStateProblem out;
  out.name = std::string("oscillator-") + to_string(kind);
  out.lo = 0.0;
  out.hi = std::numeric_limits<double>::infinity();
  out.energy = [p](int nu) { return energy_oscillator(nu, p); };
  if (kind == PotentialKind::extended) {
    out.potential = [p](double x) { return v_oscillator_extended(x, p); };
    auto polys = cache_polys([&](int nu) { return x1_laguerre(nu + 1, p.x1()); });
    out.wavefunction = [p, polys](int nu, double x) {
      if (nu >= kCachedLevels) return psi_oscillator(nu, p, x);
      return oscillator_extended_prefactor(p, x) * (*polys)[nu](0.5 * p.omega * x * x);
    };
  } else {
    out.potential = [p](double x) { return v_oscillator_standard(x, p); };
    auto polys = cache_polys([&](int nu) { return classical_laguerre(nu, p.l + 0.5); });
    out.wavefunction = [p, polys](int nu, double x) {
      if (nu >= kCachedLevels) return psi_oscillator_standard(nu, p, x);
      return std::pow(x, p.l + 1) * std::exp(-0.25 * p.omega * x * x) * (*polys)[nu](0.5 * p.omega * x * x);
    };
  }
  return out;
}

BoundStateProblem make_problem(const ScarfParams& p, PotentialKind kind) {
  p.validate();
  BoundStateProblem out;
  out.name = std::string("scarf-") + to_string(kind);
  out.lo = -kHalfPi;
  out.hi = kHalfPi;
  out.energy = [p](int nu) { return energy_scarf(nu, p); };
  const auto j = p.x1();
  if (kind == PotentialKind::extended) {
    out.potential = [p](double x) { return v_scarf_extended(x, p); };
    auto polys = cache_polys([&](int nu) { return x1_jacobi(nu + 1, j); });
    out.wavefunction = [p, polys](int nu, double x) {
      if (nu >= kCachedLevels) return psi_scarf(nu, p, x);
      const double s = std::sin(x);
      return scarf_envelope(p, x) / (2.0 * p.A - 1.0 - 2.0 * p.B * s) * (*polys)[nu](s);
    };
  } else {
    out.potential = [p](double x) { return v_scarf_standard(x, p); };
    auto polys = cache_polys([&](int nu) { return classical_jacobi(nu, j.alpha, j.beta); });
    out.wavefunction = [p, polys](int nu, double x) {
      if (nu >= kCachedLevels) return psi_scarf_standard(nu, p, x);
      return scarf_envelope(p, x) * (*polys)[nu](std::sin(x));
    };
  }
  return out;
}

double oscillator_support(const OscillatorParams& p, int nu_max) {
  p.validate();
  const double e_max = energy_oscillator(nu_max, p);
  return std::max(10.0, std::sqrt(4.0 * e_max / p.omega) + 6.0 / std::sqrt(p.omega));
}

WavefunctionTable sample_wavefunction(const BoundStateProblem& problem, int nu, double lo, double hi,
                                      int points) {
  if (points < 2 || !(lo < hi)) throw DomainError("sample_wavefunction: need lo < hi and >= 2 points");
  WavefunctionTable t;
  t.nu = nu;
  t.xs.resize(points);
  t.values.resize(points);
  for (int i = 0; i < points; ++i) {
    const double x = (i + 1 == points) ? hi : lo + (hi - lo) * i / (points - 1);
    t.xs[i] = x;
    t.values[i] = problem.wavefunction(nu, x);
  }
  return t;
}

int count_nodes(const WavefunctionTable& table) {
  if (table.values.size() < 2) throw DomainError("count_nodes: need at least two samples");
  int nodes = 0;
  double prev = 0.0;
  for (double v : table.values) {
    if (v == 0.0) continue;
    if (prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++nodes;
    prev = v;
  }
  return nodes;
}

double table_inner_product(const WavefunctionTable& a, const WavefunctionTable& b) {
  if (a.xs != b.xs) throw DomainError("table_inner_product: tables sampled on different grids");
  std::vector<double> prod(a.values.size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a.values[i] * b.values[i];
  return integrate_samples(a.xs, prod);
}

WavefunctionTable normalize(const WavefunctionTable& table) {
  const double norm2 = table_inner_product(table, table);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw DegenerateInputError("normalize: zero norm");
  WavefunctionTable out = table;
  const double s = 1.0 / std::sqrt(norm2);
  for (double& v : out.values) v *= s;
  out.normalized = true;
  return out;
}

double schrodinger_residual(const BoundStateProblem& problem, int nu, const std::vector<double>& xs,
                            double energy_shift) {
  if (xs.empty()) throw DegenerateInputError("schrodinger_residual: no sample points");
  const double e = problem.energy(nu);
  auto psi = [&](double x) { return problem.wavefunction(nu, x); };
  double worst = 0.0, scale = 0.0;
  for (double x : xs) {
    if (!(x > problem.lo && x < problem.hi)) throw DomainError("schrodinger_residual: point outside the domain");
    const double edge = std::min(x - problem.lo, problem.hi - x);
    const double psi_xx = fd_derivative(psi, x, 2, edge / 10.0);
    const double v = psi(x);
    worst = std::max(worst, std::abs(-psi_xx + (problem.potential(x) - e - energy_shift) * v));
    scale = std::max(scale, std::abs(e * v));
  }
  if (scale == 0.0) throw DegenerateInputError("schrodinger_residual: wavefunction vanishes on all samples");
  return worst / scale;
}

}  // namespace xsusy
