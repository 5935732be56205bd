#pragma once

#include <vector>

#include "xsusy/models.hpp"

namespace xsusy {

// Exact SUSY with the extended potential as V+ and the factorization energy
// at its ground level: V± = W^2 ∓ W' + E0, W = -psi0'/psi0.

/// E0 = omega (l + 3/2) or A^2.
double factorization_energy(const OscillatorParams& p);
double factorization_energy(const ScarfParams& p);

/// W = w1 + w2: w1 belongs to the standard potential, w2 to the rational terms.
struct SuperpotentialParts {
  double w1;
  double w2;
  double total() const { return w1 + w2; }
};

SuperpotentialParts superpotential_closed(const OscillatorParams& p, double x);
SuperpotentialParts superpotential_closed(const ScarfParams& p, double x);

/// x-derivatives of the two closed-form parts.
SuperpotentialParts superpotential_derivative(const OscillatorParams& p, double x);
SuperpotentialParts superpotential_derivative(const ScarfParams& p, double x);

/// -psi0'/psi0 by finite differences of the analytic ground state.
double superpotential_from_ground_state(const OscillatorParams& p, double x);
double superpotential_from_ground_state(const ScarfParams& p, double x);

/// V- = V+ + 2 W'.
double partner_potential(const OscillatorParams& p, double x);
double partner_potential(const ScarfParams& p, double x);

/// (omega, l + 1) and (A + 1, B).
OscillatorParams shifted_parameters(const OscillatorParams& p);
ScarfParams shifted_parameters(const ScarfParams& p);

struct ShapeInvarianceReport {
  /// Remainder R(a0) = [V-(x; a0) - E0(a0)] - [V+(x; a1) - E0(a1)], averaged.
  double gap;
  /// max |remainder(x) - gap| over the samples.
  double max_dev;
  /// Plain mean of V-(x; a0) - V+(x; a1), i.e. gap - E0(a0) + E0(a1).
  double offset;
};

/// Requires at least 20 interior samples.
ShapeInvarianceReport shape_invariance_report(const OscillatorParams& p, const std::vector<double>& xs);
ShapeInvarianceReport shape_invariance_report(const ScarfParams& p, const std::vector<double>& xs);

}  // namespace xsusy
