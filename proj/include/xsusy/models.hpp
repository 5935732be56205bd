#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xsusy/xpoly.hpp"

namespace xsusy {

// Units: hbar = 2m = 1, so H = -d^2/dx^2 + V(x).

/// Radial oscillator on (0, inf): omega > 0, l = 0, 1, 2, ...
struct OscillatorParams {
  double omega = 1.0;
  int l = 0;
  void validate() const;
  /// alpha = l + 1/2 of the underlying Laguerre X1 family.
  LaguerreX1Params x1() const { return {l + 0.5}; }
};

/// Scarf I on (-pi/2, pi/2): 0 < B < A - 1.
struct ScarfParams {
  double A = 3.0;
  double B = 1.0;
  void validate() const;
  /// alpha = A - B - 1/2, beta = A + B - 1/2.
  JacobiX1Params x1() const { return {A - B - 0.5, A + B - 0.5}; }
};

enum class PotentialKind { standard, extended };

const char* to_string(PotentialKind kind);

double v_oscillator_standard(double x, const OscillatorParams& p);
double v_oscillator_extended(double x, const OscillatorParams& p);
double v_scarf_standard(double x, const ScarfParams& p);
double v_scarf_extended(double x, const ScarfParams& p);

/// omega (2 nu + l + 3/2); shared by both potentials.
double energy_oscillator(int nu, const OscillatorParams& p);
/// (nu + A)^2; shared by both potentials.
double energy_scarf(int nu, const ScarfParams& p);

// Unnormalized bound states. Extended states use the monic X1 polynomial of
// degree nu + 1; standard states use the classical polynomial of degree nu.
double psi_oscillator(int nu, const OscillatorParams& p, double x);
double psi_oscillator_standard(int nu, const OscillatorParams& p, double x);
double psi_scarf(int nu, const ScarfParams& p, double x);
double psi_scarf_standard(int nu, const ScarfParams& p, double x);

/// psi_0 = const * psi10 * (1 + phi) for the extended potentials.
struct GroundStateFactors {
  double psi10;
  double one_plus_phi;
  double product() const { return psi10 * one_plus_phi; }
};
GroundStateFactors ground_state_factorized(const OscillatorParams& p, double x);
GroundStateFactors ground_state_factorized(const ScarfParams& p, double x);

/// Family-agnostic view of one potential: its open domain, V, psi_nu, E_nu.
struct BoundStateProblem {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;  // +inf for the half line
  std::function<double(double)> potential;
  std::function<double(int, double)> wavefunction;
  std::function<double(int)> energy;
};

BoundStateProblem make_problem(const OscillatorParams& p, PotentialKind kind);
BoundStateProblem make_problem(const ScarfParams& p, PotentialKind kind);

/// Effective support end of the oscillator states nu <= nu_max:
/// max(10, sqrt(4 E_max / omega) + 6 / sqrt(omega)).
double oscillator_support(const OscillatorParams& p, int nu_max);

struct WavefunctionTable {
  std::vector<double> xs;
  std::vector<double> values;
  int nu = 0;
  bool normalized = false;
};

/// Samples psi_nu at `points` equally spaced abscissae covering [lo, hi].
WavefunctionTable sample_wavefunction(const BoundStateProblem& problem, int nu, double lo, double hi,
                                      int points);

/// Sign changes between consecutive samples; exact zeros are skipped so a
/// zero sitting on a grid point is counted once.
int count_nodes(const WavefunctionTable& table);

/// Composite quadrature of psi_a * psi_b over the shared abscissae.
double table_inner_product(const WavefunctionTable& a, const WavefunctionTable& b);

/// Rescales so the composite-quadrature norm is 1.
WavefunctionTable normalize(const WavefunctionTable& table);

/// max_x |-psi'' + V psi - E psi| / max_x |E psi| with psi'' from Richardson
/// finite differences of the analytic psi_nu. `energy_shift` perturbs E.
double schrodinger_residual(const BoundStateProblem& problem, int nu, const std::vector<double>& xs,
                            double energy_shift = 0.0);

}  // namespace xsusy
