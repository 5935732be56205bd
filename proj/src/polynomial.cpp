#include "xsusy/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "xsusy/errors.hpp"

namespace xsusy {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("Polynomial: non-finite coefficient");
  }
  trim();
}

Polynomial Polynomial::monomial(int k, double scale) {
  if (k < 0) throw DomainError("Polynomial::monomial: negative power");
  std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
  c.back() = scale;
  return Polynomial(std::move(c));
}

double Polynomial::coeff(int k) const noexcept {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::operator()(double g) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * g + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double eval_poly(const Polynomial& poly, double g) noexcept { return poly(g); }

int count_sign_changes(const Polynomial& poly, double lo, double hi, int samples) {
  if (!(lo < hi) || samples < 2) throw DomainError("count_sign_changes: need lo < hi and >= 2 samples");
  int changes = 0;
  double prev = 0.0;
  const double step = (hi - lo) / samples;
  // open interval: sample midpoints of `samples` cells
  for (int i = 0; i < samples; ++i) {
    const double v = poly(lo + (i + 0.5) * step);
    if (v == 0.0) continue;
    if (prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++changes;
    prev = v;
  }
  return changes;
}

double cauchy_root_bound(const Polynomial& poly) {
  double m = 0.0;
  for (int k = 0; k < poly.degree(); ++k) m = std::max(m, std::abs(poly.coeff(k) / poly.leading()));
  return 1.0 + m;
}

}  // namespace xsusy
