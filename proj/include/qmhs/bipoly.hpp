#pragma once

// Sparse bivariate polynomials over Q in (X, Y), and fraction-free
// (Bareiss) determinants over exact polynomial rings.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmhs/exactnum.hpp"
#include "qmhs/poly.hpp"

namespace qmhs {

class BiPoly {
 public:
  /// (deg_X, deg_Y).
  using Key = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(const Rational& c) { add_term(0, 0, c); }  // NOLINT(implicit)
  BiPoly(long c) : BiPoly(Rational(c)) {}          // NOLINT(implicit)

  static BiPoly X() { return monomial(1, 0); }
  static BiPoly Y() { return monomial(0, 1); }
  static BiPoly monomial(int dx, int dy, const Rational& c = Rational(1)) {
    BiPoly p;
    p.add_term(dx, dy, c);
    return p;
  }
  /// Embeds a polynomial in X.
  static BiPoly from_x(const RatPoly& p) {
    BiPoly out;
    for (std::size_t i = 0; i < p.size(); ++i) out.add_term(static_cast<int>(i), 0, p.coeff(i));
    return out;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  int degree_y() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
  }
  int degree_x() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
  }

  void add_term(int dx, int dy, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.emplace(Key{dx, dy}, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  /// Substitutes X = 0.
  RatPoly at_x_zero() const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_y() + 1)), Rational(0));
    for (const auto& [k, v] : terms_)
      if (k.first == 0) c[static_cast<std::size_t>(k.second)] = v;
    return RatPoly(std::move(c));
  }

  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, c);
    return a;
  }
  friend BiPoly operator-(const BiPoly& a) {
    BiPoly out;
    for (const auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
    return out;
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
  }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// Exact quotient a / b by lexicographic (Y, then X) long division.
  /// Throws ContractViolation if b does not divide a.
  friend BiPoly exact_divide(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw std::domain_error("bivariate division by zero");
    const auto lead = [](const BiPoly& p) {
      auto best = p.terms_.begin();
      for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it)
        if (std::pair{it->first.second, it->first.first} > std::pair{best->first.second, best->first.first}) best = it;
      return *best;
    };
    const auto [lk, lc] = lead(b);
    BiPoly rem = a, quot;
    while (!rem.is_zero()) {
      const auto [rk, rc] = lead(rem);
      if (rk.first < lk.first || rk.second < lk.second) throw ContractViolation("bivariate division is not exact");
      BiPoly t = monomial(rk.first - lk.first, rk.second - lk.second, rc / lc);
      quot = quot + t;
      rem = rem - t * b;
    }
    return quot;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.get_str() + ")";
      if (k.first) out += "*X^" + std::to_string(k.first);
      if (k.second) out += "*Y^" + std::to_string(k.second);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::map<Key, Rational> terms_;
};

inline bool is_zero(const BiPoly& p) { return p.is_zero(); }

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Determinant over an exact integral domain by Bareiss elimination with row
/// pivoting. `divide` must perform exact division in R.
template <class R, class Divide>
R bareiss_determinant(Matrix<R> m, Divide divide) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  R prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::coeff_is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && detail::coeff_is_zero(m[p][k])) ++p;
      if (p == n) return R(0);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = R(0);
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? R(-det) : det;
}

inline RatPoly determinant(const Matrix<RatPoly>& m) {
  return bareiss_determinant(m, [](const RatPoly& a, const RatPoly& b) { return exact_quotient(a, b); });
}

inline BiPoly determinant(const Matrix<BiPoly>& m) {
  return bareiss_determinant(m, [](const BiPoly& a, const BiPoly& b) { return exact_divide(a, b); });
}

}  // namespace qmhs
