#include "xsusy/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xsusy/errors.hpp"

namespace xsusy {

namespace {

constexpr int kGaussNodes = 16;

struct GaussRule {
  std::array<double, kGaussNodes> x{};
  std::array<double, kGaussNodes> w{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_16.
GaussRule make_gauss_legendre() {
  GaussRule rule;
  const int n = kGaussNodes;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    rule.x[i] = -z;
    rule.x[n - 1 - i] = z;
    rule.w[i] = rule.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_legendre();
  return rule;
}

struct PanelSums {
  double value;
  double abs_value;
};

PanelSums gauss_panel(const RealFunction& f, double a, double b) {
  const auto& rule = gauss_rule();
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double s = 0.0, sa = 0.0;
  for (int i = 0; i < kGaussNodes; ++i) {
    const double v = f(mid + half * rule.x[i]);
    s += rule.w[i] * v;
    sa += rule.w[i] * std::abs(v);
  }
  return {s * half, sa * std::abs(half)};
}

}  // namespace

Grid Grid::make(double a, double b, int n_interior) {
  if (!(a < b)) throw DomainError("Grid: require a < b");
  if (n_interior < 1) throw DomainError("Grid: need at least one interior point");
  return Grid{a, b, n_interior};
}

TridiagonalMatrix build_hamiltonian(const RealFunction& potential, const Grid& grid) {
  const int n = grid.n_interior;
  const double h = grid.h();
  const double inv_h2 = 1.0 / (h * h);
  TridiagonalMatrix m;
  m.diag.resize(n);
  m.offdiag.assign(n > 0 ? n - 1 : 0, -inv_h2);
  for (int i = 1; i <= n; ++i) {
    const double x = grid.point(i);
    const double v = potential(x);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "build_hamiltonian: non-finite potential at grid point " << i << " (x = " << x << ")";
      throw DomainError(os.str());
    }
    m.diag[i - 1] = 2.0 * inv_h2 + v;
  }
  return m;
}

int sturm_count(const TridiagonalMatrix& m, double lambda) {
  const int n = m.size();
  if (n == 0) return 0;
  double scale = 0.0;
  for (double d : m.diag) scale = std::max(scale, std::abs(d));
  for (double e : m.offdiag) scale = std::max(scale, std::abs(e));
  const double pivmin = std::max(scale, 1.0) * std::numeric_limits<double>::min() * 1e4;

  int count = 0;
  double q = m.diag[0] - lambda;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++count;
  for (int i = 1; i < n; ++i) {
    const double e = m.offdiag[i - 1];
    q = m.diag[i] - lambda - e * e / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::pair<double, double> gershgorin_bounds(const TridiagonalMatrix& m) {
  const int n = m.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(m.offdiag[i - 1]);
    if (i + 1 < n) r += std::abs(m.offdiag[i]);
    lo = std::min(lo, m.diag[i] - r);
    hi = std::max(hi, m.diag[i] + r);
  }
  const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  return {lo - pad, hi + pad};
}

std::vector<double> eigen_lowest(const TridiagonalMatrix& m, int k) {
  if (k < 1 || k > m.size()) throw DomainError("eigen_lowest: require 1 <= k <= n");
  const auto [glo, ghi] = gershgorin_bounds(m);
  std::vector<double> out;
  out.reserve(k);
  double lo_start = glo;
  for (int j = 0; j < k; ++j) {
    // Smallest lambda with more than j eigenvalues below it.
    double lo = lo_start, hi = ghi;
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (hi - lo <= 1e-10 * std::max(1.0, std::abs(mid)) || mid == lo || mid == hi) break;
      if (sturm_count(m, mid) > j) hi = mid;
      else lo = mid;
    }
    const double lambda = 0.5 * (lo + hi);
    out.push_back(lambda);
    lo_start = lo;
  }
  return out;
}

std::vector<double> eigenvector(const TridiagonalMatrix& m, double lambda) {
  const int n = m.size();
  if (n == 0) throw DegenerateInputError("eigenvector: empty matrix");
  double scale = 1.0;
  for (double d : m.diag) scale = std::max(scale, std::abs(d));
  const double shift = lambda + 1e-13 * scale;

  // LU with partial pivoting of (T - shift); U has two superdiagonals.
  std::vector<double> d(n), du(n, 0.0), du2(n, 0.0), dl(n, 0.0);
  std::vector<char> swapped(n, 0);
  for (int i = 0; i < n; ++i) {
    d[i] = m.diag[i] - shift;
    if (i + 1 < n) du[i] = m.offdiag[i];
  }
  std::vector<double> sub(m.offdiag.begin(), m.offdiag.end());
  for (int i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(sub[i])) {
      if (d[i] == 0.0) d[i] = 1e-300;
      const double f = sub[i] / d[i];
      dl[i] = f;
      d[i + 1] -= f * du[i];
    } else {
      const double f = d[i] / sub[i];
      swapped[i] = 1;
      dl[i] = f;
      d[i] = sub[i];
      const double tmp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = tmp - f * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -f * du[i + 1];
      }
    }
  }
  if (d[n - 1] == 0.0) d[n - 1] = 1e-300;

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int iter = 0; iter < 3; ++iter) {
    // forward: apply L^{-1} with the recorded row swaps
    for (int i = 0; i + 1 < n; ++i) {
      if (swapped[i]) {
        const double t = v[i];
        v[i] = v[i + 1];
        v[i + 1] = t - dl[i] * v[i + 1];
      } else {
        v[i + 1] -= dl[i] * v[i];
      }
    }
    // back substitution
    for (int i = n - 1; i >= 0; --i) {
      double s = v[i];
      if (i + 1 < n) s -= du[i] * v[i + 1];
      if (i + 2 < n) s -= du2[i] * v[i + 2];
      v[i] = s / d[i];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
  }
  return v;
}

std::vector<double> solve_spectrum(const RealFunction& potential, double a, double b, int k,
                                   const SpectrumOptions& opts) {
  const Grid coarse = Grid::make(a, b, opts.n_interior);
  auto ev = eigen_lowest(build_hamiltonian(potential, coarse), k);
  if (!opts.refine) return ev;
  const auto fine = eigen_lowest(build_hamiltonian(potential, coarse.halved()), k);
  for (int i = 0; i < k; ++i) ev[i] = (4.0 * fine[i] - ev[i]) / 3.0;
  return ev;
}

double quad(const RealFunction& f, double a, double b, const QuadOptions& opts) {
  if (a == b) return 0.0;
  if (opts.initial_panels < 1) throw DomainError("quad: initial_panels must be positive");
  if (b < a) return -quad(f, b, a, opts);

  struct Panel {
    double a, b, estimate;
    int depth;
  };
  std::vector<Panel> stack;
  const double width = (b - a) / opts.initial_panels;
  double abs_scale = 0.0;
  for (int i = 0; i < opts.initial_panels; ++i) {
    const double pa = a + i * width;
    const double pb = (i + 1 == opts.initial_panels) ? b : pa + width;
    const auto s = gauss_panel(f, pa, pb);
    abs_scale += s.abs_value;
    stack.push_back({pa, pb, s.value, 0});
  }

  double total = 0.0;
  bool converged = true;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    const auto left = gauss_panel(f, p.a, mid);
    const auto right = gauss_panel(f, mid, p.b);
    const double refined = left.value + right.value;
    const double tol = opts.rel_tol * abs_scale;
    if (!std::isfinite(refined)) throw NumericError("quad: non-finite integrand", total);
    if (std::abs(refined - p.estimate) <= tol || std::abs(refined - p.estimate) <= 4e-16 * std::abs(refined)) {
      total += refined;
    } else if (p.depth >= opts.max_depth) {
      converged = false;
      total += refined;
    } else {
      stack.push_back({p.a, mid, left.value, p.depth + 1});
      stack.push_back({mid, p.b, right.value, p.depth + 1});
    }
  }
  if (!converged) {
    std::ostringstream os;
    os.precision(17);
    os << "quad: no convergence on [" << a << ", " << b << "], estimate " << total;
    throw NumericError(os.str(), total);
  }
  return total;
}

double fd_derivative(const RealFunction& f, double x, int order, double max_offset) {
  if (order < 1 || order > 3) throw DomainError("fd_derivative: order must be 1, 2 or 3");
  const double reach = (order == 3) ? 2.0 : 1.0;
  double h = std::min(0.01 * (1.0 + std::abs(x)), max_offset / reach);
  if (!(h > 0.0)) throw NumericError("fd_derivative: step underflow", 0.0);

  auto stencil = [&](double s) {
    switch (order) {
      case 1:
        return (f(x + s) - f(x - s)) / (2.0 * s);
      case 2:
        return (f(x + s) - 2.0 * f(x) + f(x - s)) / (s * s);
      default:
        return (f(x + 2.0 * s) - 2.0 * f(x + s) + 2.0 * f(x - s) - f(x - 2.0 * s)) / (2.0 * s * s * s);
    }
  };

  constexpr int kTable = 10;
  constexpr double kShrink = 1.4;
  constexpr double kShrink2 = kShrink * kShrink;
  double table[kTable][kTable];
  table[0][0] = stencil(h);
  double best = table[0][0];
  double err = std::numeric_limits<double>::max();
  for (int i = 1; i < kTable; ++i) {
    h /= kShrink;
    table[0][i] = stencil(h);
    double fac = kShrink2;
    for (int j = 1; j <= i; ++j) {
      table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
      fac *= kShrink2;
      const double e = std::max(std::abs(table[j][i] - table[j - 1][i]),
                                std::abs(table[j][i] - table[j - 1][i - 1]));
      if (e <= err) {
        err = e;
        best = table[j][i];
      }
    }
    if (std::abs(table[i][i] - table[i - 1][i - 1]) >= 2.0 * err) break;
  }
  return best;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 2) throw DomainError("linspace: need at least two points");
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = a + (b - a) * i / (n - 1);
  xs.back() = b;
  return xs;
}

double integrate_samples(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  if (n != ys.size()) throw DomainError("integrate_samples: length mismatch");
  if (n < 2) throw DegenerateInputError("integrate_samples: need at least two samples");

  const double h = (xs.back() - xs.front()) / static_cast<double>(n - 1);
  bool uniform = n >= 4;
  for (std::size_t i = 0; uniform && i + 1 < n; ++i)
    uniform = std::abs((xs[i + 1] - xs[i]) - h) <= 1e-9 * std::abs(h);

  if (!uniform) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) s += 0.5 * (xs[i + 1] - xs[i]) * (ys[i] + ys[i + 1]);
    return s;
  }

  const std::size_t cells = n - 1;
  const std::size_t simpson_cells = (cells % 2 == 0) ? cells : cells - 3;
  double s = 0.0;
  for (std::size_t i = 0; i + 2 <= simpson_cells; i += 2) s += ys[i] + 4.0 * ys[i + 1] + ys[i + 2];
  s *= h / 3.0;
  if (simpson_cells != cells) {
    const std::size_t i = simpson_cells;
    s += 3.0 * h / 8.0 * (ys[i] + 3.0 * ys[i + 1] + 3.0 * ys[i + 2] + ys[i + 3]);
  }
  return s;
}

}  // namespace xsusy
