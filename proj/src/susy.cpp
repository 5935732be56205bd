#include "xsusy/susy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xsusy/errors.hpp"
#include "xsusy/numerics.hpp"

namespace xsusy {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

void check_oscillator_interior(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("susy: oscillator point must satisfy x > 0");
}

void check_scarf_interior(double x) {
  if (!(std::abs(x) < kHalfPi)) throw DomainError("susy: Scarf point must lie in (-pi/2, pi/2)");
}

template <class Params, class Potential>
ShapeInvarianceReport shape_report(const Params& p, const std::vector<double>& xs, Potential v_plus) {
  if (xs.size() < 20) throw DomainError("shape_invariance_report: need at least 20 samples");
  const Params shifted = shifted_parameters(p);
  const double e0 = factorization_energy(p), e0_shifted = factorization_energy(shifted);
  std::vector<double> rem(xs.size());
  double mean = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    rem[i] = (partner_potential(p, xs[i]) - e0) - (v_plus(xs[i], shifted) - e0_shifted);
    mean += rem[i];
  }
  mean /= static_cast<double>(xs.size());
  double dev = 0.0;
  for (double r : rem) dev = std::max(dev, std::abs(r - mean));
  return {mean, dev, mean + e0 - e0_shifted};
}

}  // namespace

double factorization_energy(const OscillatorParams& p) { return energy_oscillator(0, p); }
double factorization_energy(const ScarfParams& p) { return energy_scarf(0, p); }

SuperpotentialParts superpotential_closed(const OscillatorParams& p, double x) {
  p.validate();
  check_oscillator_interior(x);
  const double w = p.omega, u = w * x * x + 2.0 * p.l + 1.0;
  return {0.5 * w * x - (p.l + 1.0) / x, 2.0 * w * x * (1.0 / u - 1.0 / (u + 2.0))};
}

SuperpotentialParts superpotential_closed(const ScarfParams& p, double x) {
  p.validate();
  check_scarf_interior(x);
  const double den = 2.0 * p.A - 1.0 - 2.0 * p.B * std::sin(x);
  const double c = std::cos(x);
  return {p.A * std::tan(x) - p.B / c, -2.0 * p.B * c * (1.0 / den - 1.0 / (den + 2.0))};
}

SuperpotentialParts superpotential_derivative(const OscillatorParams& p, double x) {
  p.validate();
  check_oscillator_interior(x);
  const double w = p.omega, u = w * x * x + 2.0 * p.l + 1.0, v = u + 2.0;
  const double w1 = 0.5 * w + (p.l + 1.0) / (x * x);
  const double w2 = 2.0 * w * (1.0 / u - 1.0 / v) - 4.0 * w * w * x * x * (1.0 / (u * u) - 1.0 / (v * v));
  return {w1, w2};
}

SuperpotentialParts superpotential_derivative(const ScarfParams& p, double x) {
  p.validate();
  check_scarf_interior(x);
  const double s = std::sin(x), c = std::cos(x), sec = 1.0 / c;
  const double den = 2.0 * p.A - 1.0 - 2.0 * p.B * s, den2 = den + 2.0;
  const double w1 = p.A * sec * sec - p.B * sec * std::tan(x);
  const double w2 = 2.0 * p.B * s * (1.0 / den - 1.0 / den2) -
                    4.0 * p.B * p.B * c * c * (1.0 / (den * den) - 1.0 / (den2 * den2));
  return {w1, w2};
}

double superpotential_from_ground_state(const OscillatorParams& p, double x) {
  p.validate();
  check_oscillator_interior(x);
  auto psi0 = [&p](double y) { return ground_state_factorized(p, y).product(); };
  return -fd_derivative(psi0, x, 1, x / 10.0) / psi0(x);
}

double superpotential_from_ground_state(const ScarfParams& p, double x) {
  p.validate();
  check_scarf_interior(x);
  auto psi0 = [&p](double y) { return ground_state_factorized(p, y).product(); };
  return -fd_derivative(psi0, x, 1, (kHalfPi - std::abs(x)) / 10.0) / psi0(x);
}

double partner_potential(const OscillatorParams& p, double x) {
  return v_oscillator_extended(x, p) + 2.0 * superpotential_derivative(p, x).total();
}

double partner_potential(const ScarfParams& p, double x) {
  return v_scarf_extended(x, p) + 2.0 * superpotential_derivative(p, x).total();
}

OscillatorParams shifted_parameters(const OscillatorParams& p) { return {p.omega, p.l + 1}; }
ScarfParams shifted_parameters(const ScarfParams& p) { return {p.A + 1.0, p.B}; }

ShapeInvarianceReport shape_invariance_report(const OscillatorParams& p, const std::vector<double>& xs) {
  return shape_report(p, xs, [](double x, const OscillatorParams& q) { return v_oscillator_extended(x, q); });
}

ShapeInvarianceReport shape_invariance_report(const ScarfParams& p, const std::vector<double>& xs) {
  return shape_report(p, xs, [](double x, const ScarfParams& q) { return v_scarf_extended(x, q); });
}

}  // namespace xsusy
