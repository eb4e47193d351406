#pragma once

// Dense univariate polynomials over an exact field, lowest degree first.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qmhs/exactnum.hpp"

namespace qmhs {

namespace detail {
// Unqualified so that ADL finds is_zero for field types declared later.
template <class F>
bool coeff_is_zero(const F& c) {
  return is_zero(c);
}
}  // namespace detail

template <class F>
class Poly {
 public:
  Poly() = default;
  Poly(F constant) : coeffs_{std::move(constant)} { trim(); }  // NOLINT(implicit)
  explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly monomial(F c, std::size_t degree) {
    std::vector<F> v(degree + 1, F(0));
    v[degree] = std::move(c);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(F(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<F>& coefficients() const { return coeffs_; }

  F coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : F(0); }
  const F& leading() const { return coeffs_.back(); }

  /// Evaluates by Horner's rule; the point may live in any ring F embeds into.
  template <class G>
  G eval(const G& t) const {
    G acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + G(*it);
    return acc;
  }
  F operator()(const F& t) const { return eval<F>(t); }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<F> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * F(static_cast<long>(i));
    return Poly(std::move(d));
  }

  /// Keeps the coefficients of degree < order.
  Poly truncated(std::size_t order) const {
    if (coeffs_.size() <= order) return *this;
    return Poly(std::vector<F>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(order)));
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> out(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (qmhs_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }

  /// Euclidean division; throws std::domain_error on a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {Poly{}, num};
    std::vector<F> rem = num.coeffs_;
    std::vector<F> quot(num.coeffs_.size() - den.coeffs_.size() + 1, F(0));
    const F lead_inv = F(1) / den.leading();
    for (std::size_t i = quot.size(); i-- > 0;) {
      const F c = rem[i + den.coeffs_.size() - 1] * lead_inv;
      quot[i] = c;
      if (qmhs_is_zero(c)) continue;
      for (std::size_t j = 0; j < den.coeffs_.size(); ++j) rem[i + j] = rem[i + j] - c * den.coeffs_[j];
    }
    rem.resize(den.coeffs_.size() - 1);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

 private:
  static bool qmhs_is_zero(const F& c) { return detail::coeff_is_zero(c); }
  void trim() {
    while (!coeffs_.empty() && qmhs_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

template <class F>
bool is_zero(const Poly<F>& p) {
  return p.is_zero();
}

using RatPoly = Poly<Rational>;

/// Quotient of an exact division; throws ContractViolation on a remainder.
template <class F>
Poly<F> exact_quotient(const Poly<F>& num, const Poly<F>& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw ContractViolation("polynomial division is not exact");
  return q;
}

/// First `order` coefficients of 1/a as a power series; a(0) must be nonzero.
template <class F>
Poly<F> series_inverse(const Poly<F>& a, std::size_t order) {
  if (a.is_zero() || detail::coeff_is_zero(a.coeff(0)))
    throw std::domain_error("series inverse needs a nonzero constant term");
  const F c0_inv = F(1) / a.coeff(0);
  std::vector<F> out(order, F(0));
  for (std::size_t k = 0; k < order; ++k) {
    F acc = k == 0 ? F(1) : F(0);
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc = acc - a.coeff(j) * out[k - j];
    out[k] = acc * c0_inv;
  }
  return Poly<F>(std::move(out));
}

/// Binomial (1 + x)^n as a rational polynomial.
inline RatPoly one_plus_x_pow(long n) {
  std::vector<Rational> c;
  for (long j = 0; j <= n; ++j) c.emplace_back(binomial(n, j));
  return RatPoly(std::move(c));
}

}  // namespace qmhs
