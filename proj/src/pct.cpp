#include "xsusy/pct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "xsusy/errors.hpp"
#include "xsusy/numerics.hpp"

namespace xsusy {

namespace {

void check_not_pole(const CoefficientFunctions& cf, double g) {
  for (double pole : cf.poles)
    if (std::abs(g - pole) <= 1e-12 * std::max(1.0, std::abs(pole)))
      throw DomainError("pct: g(x) sits on a pole of Q or R");
}

}  // namespace

CoefficientFunctions laguerre_x1_coefficients(const LaguerreX1Params& p) {
  p.validate();
  const double a = p.alpha;
  CoefficientFunctions cf;
  cf.q = [a](double g) { return -1.0 + (a + 1.0) / g - 2.0 / (g + a); };
  cf.q_dot = [a](double g) { return -(a + 1.0) / (g * g) + 2.0 / ((g + a) * (g + a)); };
  cf.r = [a](double g, int n) { return (n - 2.0) / g + 2.0 / (g + a); };
  cf.poles = {0.0, -a};
  cf.anchor = 1.0;
  return cf;
}

CoefficientFunctions jacobi_x1_coefficients(const JacobiX1Params& p) {
  p.validate();
  const double s = p.beta + p.alpha, t = p.beta - p.alpha;
  CoefficientFunctions cf;
  cf.q = [s, t](double g) { return -((s + 2.0) * g - t) / (1.0 - g * g) - 2.0 * t / (t * g - s); };
  cf.q_dot = [s, t](double g) {
    const double one_m = 1.0 - g * g, d = t * g - s;
    return -((s + 2.0) * (1.0 + g * g) - 2.0 * t * g) / (one_m * one_m) + 2.0 * t * t / (d * d);
  };
  cf.r = [s, t](double g, int n) {
    return -(t * g - (n - 1.0) * (n + s)) / (1.0 - g * g) - t * t / (t * g - s);
  };
  cf.poles = {-1.0, 1.0, s / t};
  cf.anchor = 0.0;
  return cf;
}

ChangeOfVariable oscillator_change_of_variable(double omega) {
  if (!(omega > 0.0)) throw DomainError("oscillator_change_of_variable: require omega > 0");
  ChangeOfVariable cv;
  cv.g = [omega](double x) { return 0.5 * omega * x * x; };
  cv.g1 = [omega](double x) { return omega * x; };
  cv.g2 = [omega](double) { return omega; };
  cv.g3 = [](double) { return 0.0; };
  cv.lo = 0.0;
  cv.hi = std::numeric_limits<double>::infinity();
  return cv;
}

ChangeOfVariable scarf_change_of_variable() {
  ChangeOfVariable cv;
  cv.g = [](double x) { return std::sin(x); };
  cv.g1 = [](double x) { return std::cos(x); };
  cv.g2 = [](double x) { return -std::sin(x); };
  cv.g3 = [](double x) { return -std::cos(x); };
  cv.lo = -0.5 * std::numbers::pi;
  cv.hi = 0.5 * std::numbers::pi;
  return cv;
}

double normal_form(const CoefficientFunctions& cf, double g, int n) {
  check_not_pole(cf, g);
  const double q = cf.q(g);
  return cf.r(g, n) - 0.5 * cf.q_dot(g) - 0.25 * q * q;
}

double pct_rhs(const CoefficientFunctions& cf, const ChangeOfVariable& cv, int n, double x) {
  if (!(x > cv.lo && x < cv.hi)) throw DomainError("pct_rhs: x outside the change-of-variable domain");
  const double g1 = cv.g1(x);
  if (g1 == 0.0) throw DomainError("pct_rhs: g'(x) = 0");
  const double g2 = cv.g2(x), g3 = cv.g3(x);
  const double ratio = g2 / g1;
  return g3 / (2.0 * g1) - 0.75 * ratio * ratio + g1 * g1 * normal_form(cf, cv.g(x), n);
}

std::vector<double> pct_prefactor(const CoefficientFunctions& cf, const ChangeOfVariable& cv,
                                  const std::vector<double>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (!(x > cv.lo && x < cv.hi)) throw DomainError("pct_prefactor: x outside the domain");
    const double g = cv.g(x);
    const double lo = std::min(cf.anchor, g), hi = std::max(cf.anchor, g);
    for (double pole : cf.poles)
      if (pole >= lo && pole <= hi) throw DomainError("pct_prefactor: pole of Q on the integration path");
    const double integral = quad(cf.q, cf.anchor, g);
    const double g1 = cv.g1(x);
    if (!(g1 > 0.0)) throw DomainError("pct_prefactor: require g' > 0");
    out.push_back(std::exp(0.5 * integral) / std::sqrt(g1));
  }
  return out;
}

double laguerre_expansion(double g, double alpha, int n) {
  if (g == 0.0 || g + alpha == 0.0) throw DomainError("laguerre_expansion: pole at g = 0 or g = -alpha");
  const double a = alpha, ga = g + a;
  return -0.25 + (2.0 * a * n + a * a - a + 2.0) / (2.0 * a * g) - 1.0 / (a * ga) -
         (a + 1.0) * (a - 1.0) / (4.0 * g * g) - 2.0 / (ga * ga);
}

JacobiExpansionConstants jacobi_expansion_constants(double alpha, double beta, int n) {
  // TODO: add the alpha * beta -> 0 limit, where C, D and K diverge separately
  // but the normal form stays finite.
  if (alpha * beta == 0.0) throw DomainError("jacobi_expansion_constants: singular at alpha * beta = 0");
  if (alpha == beta) throw DomainError("jacobi_expansion_constants: require alpha != beta");
  const double a = alpha, b = beta, s = a + b, t = b - a, ab2 = 2.0 * a * b;
  JacobiExpansionConstants c{};
  c.C = t * s / ab2;
  c.D = n * n + (s - 1.0) * n + 0.25 * (s * s - 2.0 * s - 4.0) + (b * b + a * a) / ab2;
  c.G = 0.5 * t * s;
  c.J = -0.5 * (b * b + a * a - 2.0);
  c.K = t * t * s / ab2;
  c.L = -2.0 * t * t;
  return c;
}

double jacobi_expansion(double g, double alpha, double beta, int n) {
  const auto c = jacobi_expansion_constants(alpha, beta, n);
  const double one_m = 1.0 - g * g;
  const double d = (beta - alpha) * g - (beta + alpha);
  if (one_m == 0.0 || d == 0.0) throw DomainError("jacobi_expansion: pole");
  return (c.C * g + c.D) / one_m + (c.G * g + c.J) / (one_m * one_m) + c.K / d + c.L / (d * d);
}

EnergyEstimate energy_extract(const CoefficientFunctions& cf, const ChangeOfVariable& cv, int n,
                              const std::vector<double>& xs, const std::function<double(double)>& potential) {
  if (xs.size() < 10) throw DomainError("energy_extract: need at least 10 sample points");
  std::vector<double> e(xs.size());
  double mean = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    e[i] = pct_rhs(cf, cv, n, xs[i]) + potential(xs[i]);
    mean += e[i];
  }
  mean /= static_cast<double>(xs.size());
  double dev = 0.0;
  for (double v : e) dev = std::max(dev, std::abs(v - mean));
  return {mean, dev};
}

}  // namespace xsusy
