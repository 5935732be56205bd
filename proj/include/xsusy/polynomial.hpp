#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace xsusy {

/// Dense real polynomial in the monomial basis; coeffs()[k] multiplies g^k.
///
/// Trailing zeros are trimmed on construction, so the last coefficient is
/// nonzero for every polynomial except the zero polynomial, which is stored
/// as the single coefficient 0 with degree 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs)
      : Polynomial(std::vector<double>(coeffs)) {}

  static Polynomial monomial(int k, double scale = 1.0);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(int k) const noexcept;
  double leading() const noexcept { return coeffs_.back(); }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  bool is_monic() const noexcept { return leading() == 1.0; }

  double operator()(double g) const noexcept;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// Horner evaluation.
double eval_poly(const Polynomial& poly, double g) noexcept;

/// Number of sign changes of `poly` on a uniform sampling of (lo, hi).
///
/// Counts simple real roots in the open interval when `samples` resolves the
/// root spacing; callers validate by doubling `samples`.
int count_sign_changes(const Polynomial& poly, double lo, double hi, int samples);

/// Cauchy bound: every real root r satisfies |r| < 1 + max_k |c_k / c_n|.
double cauchy_root_bound(const Polynomial& poly);

}  // namespace xsusy
