#pragma once

#include <functional>
#include <vector>

#include "xsusy/models.hpp"
#include "xsusy/xpoly.hpp"

namespace xsusy {

/// Coefficients of F'' + Q(g) F' + R_n(g) F = 0 (derivatives in g).
struct CoefficientFunctions {
  std::function<double(double)> q;
  std::function<double(double)> q_dot;
  std::function<double(double, int)> r;  // (g, level n)
  std::vector<double> poles;
  double anchor = 0.0;  // pole-free start of the Q antiderivative
};

/// g(x) with its first three x-derivatives on the open interval (lo, hi).
struct ChangeOfVariable {
  std::function<double(double)> g, g1, g2, g3;
  double lo = 0.0;
  double hi = 0.0;
};

CoefficientFunctions laguerre_x1_coefficients(const LaguerreX1Params& p);
CoefficientFunctions jacobi_x1_coefficients(const JacobiX1Params& p);

/// g = omega x^2 / 2 on (0, inf).
ChangeOfVariable oscillator_change_of_variable(double omega);
/// g = sin x on (-pi/2, pi/2).
ChangeOfVariable scarf_change_of_variable();

/// R - Q'/2 - Q^2/4 evaluated from the coefficient functions.
double normal_form(const CoefficientFunctions& cf, double g, int n);

/// E - V(x) = g'''/(2g') - 3/4 (g''/g')^2 + g'^2 (R - Q'/2 - Q^2/4) at g(x).
double pct_rhs(const CoefficientFunctions& cf, const ChangeOfVariable& cv, int n, double x);

/// f(x) = g'^{-1/2} exp(1/2 int_{anchor}^{g(x)} Q) up to one global constant.
std::vector<double> pct_prefactor(const CoefficientFunctions& cf, const ChangeOfVariable& cv,
                                  const std::vector<double>& xs);

/// Closed-form normal form of the Laguerre X1 equation.
double laguerre_expansion(double g, double alpha, int n);

struct JacobiExpansionConstants {
  double C, D, G, J, K, L;
};

/// Constants of
///   (Cg+D)/(1-g^2) + (Gg+J)/(1-g^2)^2 + K/d + L/d^2,  d = (beta-alpha)g - (beta+alpha).
/// Singular when alpha * beta = 0.
JacobiExpansionConstants jacobi_expansion_constants(double alpha, double beta, int n);

/// The partial-fraction form above evaluated at g.
double jacobi_expansion(double g, double alpha, double beta, int n);

struct EnergyEstimate {
  double energy;
  double max_dev;
};

/// Mean and max deviation of pct_rhs(x) + potential(x) over xs (>= 10 points).
EnergyEstimate energy_extract(const CoefficientFunctions& cf, const ChangeOfVariable& cv, int n,
                              const std::vector<double>& xs, const std::function<double(double)>& potential);

}  // namespace xsusy
