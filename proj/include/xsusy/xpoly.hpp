#pragma once

#include "xsusy/polynomial.hpp"

namespace xsusy {

/// Parameter of the Laguerre-type X1 family, alpha > 0.
struct LaguerreX1Params {
  double alpha = 1.0;
  void validate() const;
};

/// Parameters of the Jacobi-type X1 family, alpha, beta > -1, alpha != beta.
struct JacobiX1Params {
  double alpha = 0.0;
  double beta = 1.0;
  void validate() const;
  /// Location of the rational pole (beta + alpha) / (beta - alpha).
  double exceptional_pole() const { return (beta + alpha) / (beta - alpha); }
};

/// L_n^{(alpha)} with L_n^{(alpha)}(0) = Gamma(n+alpha+1) / (n! Gamma(alpha+1)).
Polynomial classical_laguerre(int n, double alpha);

/// P_n^{(alpha,beta)} with P_n(1) = binom(n+alpha, n).
Polynomial classical_jacobi(int n, double alpha, double beta);

/// Monic degree-n (n >= 1) polynomial solution of the Laguerre X1 equation
///   F'' + Q F' + R_n F = 0,
///   Q = -1 + (alpha+1)/g - 2/(g+alpha),  R_n = (n-2)/g + 2/(g+alpha).
/// Built by clearing denominators with g(g+alpha) and matching powers of g.
Polynomial x1_laguerre(int n, const LaguerreX1Params& p);

/// Monic degree-n (n >= 1) polynomial solution of the Jacobi X1 equation
/// with the denominators (1-g^2)[(beta-alpha)g - (beta+alpha)] cleared.
Polynomial x1_jacobi(int n, const JacobiX1Params& p);

/// F'' + Q F' + R_n F at g. Throws DomainError at poles of Q or R.
double ode_residual(const Polynomial& poly, const LaguerreX1Params& p, int n, double g);
double ode_residual(const Polynomial& poly, const JacobiX1Params& p, int n, double g);

/// Orthogonality weights: g^alpha e^{-g} / (g+alpha)^2 on (0, inf) and
/// (1-g)^alpha (1+g)^beta / [(beta-alpha)g - (beta+alpha)]^2 on (-1, 1).
double x1_weight(const LaguerreX1Params& p, double g);
double x1_weight(const JacobiX1Params& p, double g);

/// Weighted inner product of the monic X1 polynomials of degrees m and n.
double x1_inner_product(const LaguerreX1Params& p, int m, int n);
double x1_inner_product(const JacobiX1Params& p, int m, int n);

/// Upper end of the truncated Laguerre integration range for degrees m, n.
double laguerre_truncation(const LaguerreX1Params& p, int m, int n);

}  // namespace xsusy
