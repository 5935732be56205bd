#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace xsusy {

using RealFunction = std::function<double(double)>;

/// Uniform grid on [a, b] with `n_interior` points strictly inside.
/// Endpoints carry Dirichlet data and are not unknowns.
struct Grid {
  double a = 0.0;
  double b = 1.0;
  int n_interior = 1;

  static Grid make(double a, double b, int n_interior);

  double h() const noexcept { return (b - a) / (n_interior + 1); }
  /// i = 1..n_interior
  double point(int i) const noexcept { return a + i * h(); }
  /// Same interval, spacing halved.
  Grid halved() const { return make(a, b, 2 * n_interior + 1); }
};

/// Real symmetric tridiagonal matrix.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;  // size diag.size() - 1

  int size() const noexcept { return static_cast<int>(diag.size()); }
};

/// Three-point discretization of -d^2/dx^2 + V with Dirichlet ends.
TridiagonalMatrix build_hamiltonian(const RealFunction& potential, const Grid& grid);

/// Number of eigenvalues strictly below `lambda` (Sturm sequence / LDL^T inertia).
int sturm_count(const TridiagonalMatrix& m, double lambda);

/// Gershgorin enclosure [lo, hi] of the spectrum.
std::pair<double, double> gershgorin_bounds(const TridiagonalMatrix& m);

/// The k smallest eigenvalues in ascending order, by bisection on the Sturm
/// count to 1e-10 * max(1, |lambda|).
std::vector<double> eigen_lowest(const TridiagonalMatrix& m, int k);

/// Unit-norm eigenvector for an (accurate) eigenvalue by inverse iteration.
std::vector<double> eigenvector(const TridiagonalMatrix& m, double lambda);

struct SpectrumOptions {
  int n_interior = 8000;
  bool refine = true;  // Richardson over h and h/2
};

/// Lowest k Dirichlet eigenvalues of -d^2/dx^2 + V on (a, b).
/// With refine, returns (4 E_{h/2} - E_h) / 3.
std::vector<double> solve_spectrum(const RealFunction& potential, double a, double b, int k,
                                   const SpectrumOptions& opts = {});

struct QuadOptions {
  int initial_panels = 1;
  double rel_tol = 1e-12;
  int max_depth = 50;
};

/// Adaptive composite 16-point Gauss-Legendre quadrature.
///
/// Panels are halved until the panel estimate and the sum over its halves
/// agree to rel_tol relative to the integral of |f|. Only interior nodes are
/// evaluated, so integrable endpoint singularities are allowed.
/// Throws NumericError (carrying the estimate) past max_depth.
double quad(const RealFunction& f, double a, double b, const QuadOptions& opts = {});

/// Derivative of order 1, 2 or 3 by central differences with Richardson
/// (Ridders) extrapolation. No sample is taken farther than `max_offset`
/// from x.
double fd_derivative(const RealFunction& f, double x, int order,
                     double max_offset = std::numeric_limits<double>::infinity());

/// n equally spaced points from a to b inclusive.
std::vector<double> linspace(double a, double b, int n);

/// Composite Simpson on uniform samples (3/8 rule on the last cells when the
/// interval count is odd); trapezoid for non-uniform abscissae.
double integrate_samples(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace xsusy
