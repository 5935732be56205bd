#include "xsusy/xpoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "xsusy/errors.hpp"
#include "xsusy/numerics.hpp"

namespace xsusy {

namespace {

// Second-order operator P2 F'' + P1 F' + P0 F with polynomial coefficients.
struct PolyOperator {
  Polynomial p2, p1, p0;

  Polynomial apply(const Polynomial& f) const {
    const Polynomial d1 = f.derivative();
    return p2 * d1.derivative() + p1 * d1 + p0 * f;
  }
};

PolyOperator laguerre_operator(double a, int n) {
  // g(g+a) F'' - (g^2 + g - a(a+1)) F' + (n g + a(n-2)) F
  return {Polynomial{0.0, a, 1.0}, Polynomial{a * (a + 1.0), -1.0, -1.0},
          Polynomial{a * (n - 2.0), static_cast<double>(n)}};
}

PolyOperator jacobi_operator(double a, double b, int n) {
  const double s = b + a, t = b - a;
  const Polynomial one_minus_g2{1.0, 0.0, -1.0};
  const Polynomial d{-s, t};
  const double level = (n - 1.0) * (n + s);
  return {one_minus_g2 * d,
          Polynomial{t, -(s + 2.0)} * d - 2.0 * t * one_minus_g2,
          Polynomial{level, -t} * d - t * t * one_minus_g2};
}

// Monic degree-n kernel element of `op`, found by partial-pivot elimination on
// the (rows x n) coefficient-matching system for the non-leading coefficients.
Polynomial monic_polynomial_solution(const PolyOperator& op, int n, const char* who) {
  std::vector<Polynomial> columns;
  columns.reserve(n + 1);
  int rows = 1;
  for (int k = 0; k <= n; ++k) {
    columns.push_back(op.apply(Polynomial::monomial(k)));
    rows = std::max(rows, columns.back().degree() + 1);
  }

  // Extended precision: coefficients span ~10 decades by degree 12.
  using Wide = long double;
  std::vector<std::vector<Wide>> system(rows, std::vector<Wide>(n + 1, 0.0L));
  double scale = 0.0;
  for (int r = 0; r < rows; ++r) {
    for (int k = 0; k < n; ++k) {
      system[r][k] = columns[k].coeff(r);
      scale = std::max(scale, std::abs(columns[k].coeff(r)));
    }
    system[r][n] = -columns[n].coeff(r);
    scale = std::max(scale, std::abs(columns[n].coeff(r)));
  }
  if (scale == 0.0) scale = 1.0;

  // Partial-pivot elimination on the augmented matrix, leftover rows ignored.
  auto solve = [&](std::vector<std::vector<Wide>> a) {
    for (int col = 0; col < n; ++col) {
      int piv = col;
      for (int r = col + 1; r < rows; ++r)
        if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
      if (std::abs(a[piv][col]) <= 1e-13L * scale) {
        std::ostringstream os;
        os << who << ": singular ansatz system at column " << col << " (degree " << n << ")";
        throw ConstructionError(os.str());
      }
      std::swap(a[piv], a[col]);
      for (int r = col + 1; r < rows; ++r) {
        const Wide f = a[r][col] / a[col][col];
        if (f == 0.0L) continue;
        for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
      }
    }
    std::vector<Wide> x(n, 0.0L);
    for (int i = n - 1; i >= 0; --i) {
      Wide s = a[i][n];
      for (int k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
      x[i] = s / a[i][i];
    }
    return x;
  };

  std::vector<Wide> sol = solve(system);
  // One step of iterative refinement.
  auto correction = system;
  for (int r = 0; r < rows; ++r) {
    Wide s = system[r][n];
    for (int k = 0; k < n; ++k) s -= system[r][k] * sol[k];
    correction[r][n] = s;
  }
  const std::vector<Wide> delta = solve(std::move(correction));
  for (int k = 0; k < n; ++k) sol[k] += delta[k];

  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  for (int k = 0; k < n; ++k) c[k] = static_cast<double>(sol[k]);

  // Leftover rows are the consistency conditions of the exceptional family;
  // check them through the full residual polynomial.
  const Polynomial poly(c);
  const Polynomial res = op.apply(poly);
  double res_max = 0.0, mag = 0.0;
  for (int r = 0; r < rows; ++r) {
    double row_mag = 0.0;
    for (int k = 0; k <= n; ++k) row_mag += std::abs(columns[k].coeff(r) * c[k]);
    mag = std::max(mag, row_mag);
  }
  for (double v : res.coeffs()) res_max = std::max(res_max, std::abs(v));
  if (res_max > 1e-9 * std::max(mag, 1.0)) {
    std::ostringstream os;
    os << who << ": inconsistent ansatz system for degree " << n << " (residual " << res_max
       << ", scale " << mag << ")";
    throw ConstructionError(os.str());
  }
  return poly;
}

void check_pole(double denom, double scale, const char* what) {
  if (std::abs(denom) <= 1e-14 * std::max(1.0, scale)) throw DomainError(what);
}

}  // namespace

void LaguerreX1Params::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("Laguerre X1: require alpha > 0");
}

void JacobiX1Params::validate() const {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw DomainError("Jacobi X1: require alpha, beta > -1");
  if (alpha == beta) throw DomainError("Jacobi X1: degenerate family, alpha == beta");
}

Polynomial classical_laguerre(int n, double alpha) {
  if (n < 0) throw DomainError("classical_laguerre: n must be nonnegative");
  if (!(alpha > -1.0)) throw DomainError("classical_laguerre: require alpha > -1");
  Polynomial prev{1.0};
  if (n == 0) return prev;
  Polynomial cur{alpha + 1.0, -1.0};
  for (int k = 2; k <= n; ++k) {
    // k L_k = (2k-1+alpha-g) L_{k-1} - (k-1+alpha) L_{k-2}
    Polynomial next = (Polynomial{2.0 * k - 1.0 + alpha, -1.0} * cur - (k - 1.0 + alpha) * prev) * (1.0 / k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial classical_jacobi(int n, double alpha, double beta) {
  if (n < 0) throw DomainError("classical_jacobi: n must be nonnegative");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("classical_jacobi: require alpha, beta > -1");
  Polynomial prev{1.0};
  if (n == 0) return prev;
  const double ab = alpha + beta;
  Polynomial cur{0.5 * (alpha - beta), 0.5 * (ab + 2.0)};
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + ab;
    const double a1 = 2.0 * k * (k + ab) * (c - 2.0);
    const Polynomial lin{(c - 1.0) * (alpha * alpha - beta * beta), (c - 1.0) * c * (c - 2.0)};
    const double a3 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c;
    Polynomial next = (lin * cur - a3 * prev) * (1.0 / a1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial x1_laguerre(int n, const LaguerreX1Params& p) {
  p.validate();
  if (n < 1) throw DomainError("x1_laguerre: X1 family starts at degree 1");
  return monic_polynomial_solution(laguerre_operator(p.alpha, n), n, "x1_laguerre");
}

Polynomial x1_jacobi(int n, const JacobiX1Params& p) {
  p.validate();
  if (n < 1) throw DomainError("x1_jacobi: X1 family starts at degree 1");
  return monic_polynomial_solution(jacobi_operator(p.alpha, p.beta, n), n, "x1_jacobi");
}

double ode_residual(const Polynomial& poly, const LaguerreX1Params& p, int n, double g) {
  p.validate();
  const double a = p.alpha;
  check_pole(g, 1.0, "ode_residual: g = 0 is a pole");
  check_pole(g + a, a, "ode_residual: g = -alpha is a pole");
  const Polynomial d1 = poly.derivative();
  const double q = -1.0 + (a + 1.0) / g - 2.0 / (g + a);
  const double r = (n - 2.0) / g + 2.0 / (g + a);
  return d1.derivative()(g) + q * d1(g) + r * poly(g);
}

double ode_residual(const Polynomial& poly, const JacobiX1Params& p, int n, double g) {
  p.validate();
  const double s = p.beta + p.alpha, t = p.beta - p.alpha;
  const double one_m = 1.0 - g * g;
  const double d = t * g - s;
  check_pole(one_m, 1.0, "ode_residual: g = +-1 is a pole");
  check_pole(d, std::abs(s) + std::abs(t), "ode_residual: g = (beta+alpha)/(beta-alpha) is a pole");
  const Polynomial d1 = poly.derivative();
  const double q = -((s + 2.0) * g - t) / one_m - 2.0 * t / d;
  const double r = -(t * g - (n - 1.0) * (n + s)) / one_m - t * t / d;
  return d1.derivative()(g) + q * d1(g) + r * poly(g);
}

double x1_weight(const LaguerreX1Params& p, double g) {
  if (g < 0.0) return 0.0;
  const double a = p.alpha;
  return std::pow(g, a) * std::exp(-g) / ((g + a) * (g + a));
}

double x1_weight(const JacobiX1Params& p, double g) {
  if (g <= -1.0 || g >= 1.0) return 0.0;
  const double d = (p.beta - p.alpha) * g - (p.beta + p.alpha);
  return std::pow(1.0 - g, p.alpha) * std::pow(1.0 + g, p.beta) / (d * d);
}

double laguerre_truncation(const LaguerreX1Params& p, int m, int n) {
  const Polynomial pm = x1_laguerre(m, p), pn = x1_laguerre(n, p);
  auto integrand = [&](double g) { return std::abs(x1_weight(p, g) * pm(g) * pn(g)); };
  double gmax = std::max(50.0, 10.0 * (p.alpha + std::max(m, n)));
  double peak = 0.0;
  for (int i = 1; i <= 400; ++i) peak = std::max(peak, integrand(gmax * i / 400.0));
  while (integrand(gmax) >= 1e-16 * std::max(peak, 1.0)) gmax += 10.0;
  return gmax;
}

double x1_inner_product(const LaguerreX1Params& p, int m, int n) {
  if (m < 1 || n < 1) throw DomainError("x1_inner_product: degrees start at 1");
  const Polynomial pm = x1_laguerre(m, p), pn = x1_laguerre(n, p);
  const double gmax = laguerre_truncation(p, m, n);
  QuadOptions opts;
  opts.initial_panels = static_cast<int>(std::ceil(gmax));
  return quad([&](double g) { return x1_weight(p, g) * pm(g) * pn(g); }, 0.0, gmax, opts);
}

double x1_inner_product(const JacobiX1Params& p, int m, int n) {
  if (m < 1 || n < 1) throw DomainError("x1_inner_product: degrees start at 1");
  const Polynomial pm = x1_jacobi(m, p), pn = x1_jacobi(n, p);
  const double pole = p.exceptional_pole();
  if (std::abs(pole) <= 1.0) throw DomainError("x1_inner_product: weight pole inside (-1, 1)");
  QuadOptions opts;
  opts.initial_panels = 8;
  return quad([&](double g) { return x1_weight(p, g) * pm(g) * pn(g); }, -1.0, 1.0, opts);
}

}  // namespace xsusy
