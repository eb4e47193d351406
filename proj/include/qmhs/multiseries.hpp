#pragma once

// Power series in three variables (x, y, z) with weights (1, 1, 2), truncated
// at a weighted total degree. Monomials of weight above the cap are never
// stored; neither are zero coefficients.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qmhs/exactnum.hpp"
#include "qmhs/poly.hpp"

namespace qmhs {

using Exponent = std::array<int, 3>;

inline constexpr Exponent kVariableWeights{1, 1, 2};

inline int weight_of(const Exponent& e) { return e[0] * kVariableWeights[0] + e[1] * kVariableWeights[1] + e[2] * kVariableWeights[2]; }

template <class F>
class MultiSeries {
 public:
  explicit MultiSeries(int cap) : cap_(cap) {
    if (cap < 0) throw std::invalid_argument("weight cap must be non-negative");
  }

  static MultiSeries constant(const F& c, int cap) { return monomial(c, {0, 0, 0}, cap); }
  static MultiSeries monomial(const F& c, const Exponent& e, int cap) {
    MultiSeries s(cap);
    s.add_term(e, c);
    return s;
  }
  /// 0 = x, 1 = y, 2 = z.
  static MultiSeries variable(int which, int cap) {
    Exponent e{0, 0, 0};
    e.at(static_cast<std::size_t>(which)) = 1;
    return monomial(F(1), e, cap);
  }

  int cap() const { return cap_; }
  const std::map<Exponent, F>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  F coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }
  F constant_term() const { return coeff({0, 0, 0}); }

  /// Lowest weight carrying a nonzero coefficient; cap + 1 for zero.
  int min_weight() const {
    int w = cap_ + 1;
    for (const auto& [e, c] : terms_) w = std::min(w, weight_of(e));
    return w;
  }
  int max_weight() const {
    int w = -1;
    for (const auto& [e, c] : terms_) w = std::max(w, weight_of(e));
    return w;
  }

  /// Adds c * monomial(e); silently dropped above the cap.
  void add_term(const Exponent& e, const F& c) {
    if (weight_of(e) > cap_ || detail::coeff_is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second = it->second + c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiSeries truncated(int new_cap) const {
    if (new_cap > cap_) throw std::invalid_argument("cannot raise the weight cap of a truncated series");
    MultiSeries out(new_cap);
    for (const auto& [e, c] : terms_) out.add_term(e, c);
    return out;
  }

  template <class Fn>
  auto map_coefficients(Fn&& fn) const {
    using G = std::decay_t<decltype(fn(std::declval<const F&>()))>;
    MultiSeries<G> out(cap_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

  /// f(sx * x, sy * y, sz * z) for scalars; (1, -1, -1) gives f(x, -y, -z).
  MultiSeries scale_variables(const F& sx, const F& sy, const F& sz) const {
    MultiSeries out(cap_);
    for (const auto& [e, c] : terms_) {
      F f = c;
      for (int i = 0; i < e[0]; ++i) f = f * sx;
      for (int i = 0; i < e[1]; ++i) f = f * sy;
      for (int i = 0; i < e[2]; ++i) f = f * sz;
      out.add_term(e, f);
    }
    return out;
  }

  MultiSeries& operator+=(const MultiSeries& o) {
    require_same_cap(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiSeries& operator-=(const MultiSeries& o) {
    require_same_cap(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator-(const MultiSeries& a) {
    MultiSeries out(a.cap_);
    for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
    return out;
  }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.require_same_cap(b);
    MultiSeries out(a.cap_);
    for (const auto& [ea, ca] : a.terms_) {
      const int wa = weight_of(ea);
      for (const auto& [eb, cb] : b.terms_) {
        if (wa + weight_of(eb) > a.cap_) continue;
        out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
      }
    }
    return out;
  }
  friend MultiSeries operator*(const F& s, const MultiSeries& a) {
    MultiSeries out(a.cap_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
    return out;
  }
  MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    if (a.cap_ != b.cap_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [e, c] : a.terms_) {
      auto it = b.terms_.find(e);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

 private:
  void require_same_cap(const MultiSeries& o) const {
    if (o.cap_ != cap_) throw std::invalid_argument("series weight caps differ");
  }

  int cap_;
  std::map<Exponent, F> terms_;
};

template <class F>
MultiSeries<F> pow(const MultiSeries<F>& base, int e) {
  MultiSeries<F> out = MultiSeries<F>::constant(F(1), base.cap());
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

/// Multiplicative inverse; the constant term must be invertible.
template <class F>
MultiSeries<F> invert(const MultiSeries<F>& a) {
  const F c0 = a.constant_term();
  if (detail::coeff_is_zero(c0)) throw std::domain_error("series with zero constant term is not invertible");
  const F c0_inv = F(1) / c0;
  // a = c0 (1 - h) with h of positive weight, so 1/a = c0^{-1} sum_m h^m.
  MultiSeries<F> h = MultiSeries<F>::constant(F(1), a.cap()) - c0_inv * a;
  MultiSeries<F> sum = MultiSeries<F>::constant(F(1), a.cap());
  MultiSeries<F> term = sum;
  for (int m = 1; m <= a.cap(); ++m) {
    term *= h;
    if (term.is_zero()) break;
    sum += term;
  }
  return c0_inv * sum;
}

/// f(u, v, w) with u, v, w replaced by series in (x, y, z). Each image must
/// have weight at least that of the variable it replaces (1, 1, 2), so that
/// terms of f beyond the cap cannot reach below it. With f_is_polynomial set,
/// f is taken as an exact polynomial and that requirement is lifted.
template <class F>
MultiSeries<F> substitute(const MultiSeries<F>& f, const MultiSeries<F>& u, const MultiSeries<F>& v,
                          const MultiSeries<F>& w, bool f_is_polynomial = false) {
  const std::array<const MultiSeries<F>*, 3> images{&u, &v, &w};
  const int cap = u.cap();
  if (v.cap() != cap || w.cap() != cap) throw std::invalid_argument("substituted series weight caps differ");
  std::array<int, 3> max_exp{0, 0, 0};
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < 3; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
  for (std::size_t i = 0; i < 3; ++i) {
    if (max_exp[i] == 0 || f_is_polynomial) continue;
    if (images[i]->min_weight() < kVariableWeights[i])
      throw std::invalid_argument("substituted series has weight below its variable; composition would not be truncation-safe");
  }
  std::array<std::vector<MultiSeries<F>>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    powers[i].push_back(MultiSeries<F>::constant(F(1), cap));
    for (int k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * *images[i]);
  }
  MultiSeries<F> out(cap);
  for (const auto& [e, c] : f.terms())
    out += c * (powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
                powers[2][static_cast<std::size_t>(e[2])]);
  return out;
}

/// numerator / (xy - z). The quotient is determined only up to weight cap - 2,
/// so the result carries that cap. The remainder numerator(x, y, xy) must
/// vanish identically up to the numerator's cap, else ContractViolation.
template <class F>
MultiSeries<F> divide_by_xy_minus_z(const MultiSeries<F>& numerator) {
  const int cap = numerator.cap();
  if (cap < 2) throw std::invalid_argument("divide_by_xy_minus_z needs a weight cap of at least 2");
  int top = 0;
  for (const auto& [e, c] : numerator.terms()) top = std::max(top, e[2]);
  // Slices N_c(x, y), keyed by (e_x, e_y).
  using Slice = std::map<std::pair<int, int>, F>;
  std::vector<Slice> slices(static_cast<std::size_t>(top) + 1);
  for (const auto& [e, c] : numerator.terms()) slices[static_cast<std::size_t>(e[2])][{e[0], e[1]}] = c;

  auto shift_xy_add = [](const Slice& q, const Slice& n) {
    Slice out = n;
    for (const auto& [k, c] : q) {
      auto [it, fresh] = out.emplace(std::pair{k.first + 1, k.second + 1}, c);
      if (!fresh) it->second = it->second + c;
    }
    return out;
  };
  // Synthetic division by (z - xy): Q_{c-1} = N_c + xy Q_c, remainder N_0 + xy Q_0.
  std::vector<Slice> quot(static_cast<std::size_t>(top) + 1);
  Slice carry;
  for (int c = top; c >= 1; --c) {
    carry = shift_xy_add(carry, slices[static_cast<std::size_t>(c)]);
    quot[static_cast<std::size_t>(c - 1)] = carry;
  }
  Slice remainder = shift_xy_add(carry, slices[0]);
  for (const auto& [k, c] : remainder)
    if (k.first + k.second <= cap && !detail::coeff_is_zero(c))
      throw ContractViolation("numerator is not divisible by (xy - z)");

  MultiSeries<F> out(cap - 2);
  for (std::size_t c = 0; c < quot.size(); ++c)
    for (const auto& [k, v] : quot[c]) out.add_term({k.first, k.second, static_cast<int>(c)}, -v);
  return out;
}

/// Univariate polynomial p placed on variable `which`.
template <class F>
MultiSeries<F> from_univariate(const Poly<F>& p, int which, int cap) {
  MultiSeries<F> out(cap);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Exponent e{0, 0, 0};
    e.at(static_cast<std::size_t>(which)) = static_cast<int>(i);
    out.add_term(e, p.coeff(i));
  }
  return out;
}

// Kernels over the rationals.

/// e^{y/2}.
inline MultiSeries<Rational> exp_half_y(int cap) {
  MultiSeries<Rational> out(cap);
  for (int m = 0; m <= cap; ++m)
    out.add_term({0, m, 0}, Rational(1) / (Rational(factorial(static_cast<unsigned long>(m))) * pow(Rational(2), static_cast<unsigned>(m))));
  return out;
}

/// x / sinh(x/2) = 2 / sum_m (x/2)^{2m} / (2m+1)!.
inline MultiSeries<Rational> x_over_sinh_half_x(int cap) {
  MultiSeries<Rational> den(cap);
  for (int m = 0; 2 * m <= cap; ++m)
    den.add_term({2 * m, 0, 0}, Rational(1) / (Rational(factorial(static_cast<unsigned long>(2 * m + 1))) *
                                               pow(Rational(2), static_cast<unsigned>(2 * m))));
  return Rational(2) * invert(den);
}

/// cosh(sqrt(w) / 2) = sum_m w^m / (4^m (2m)!), an even function of sqrt(w),
/// so no square root is taken. w must have zero constant term.
inline MultiSeries<Rational> cosh_half_sqrt(const MultiSeries<Rational>& w) {
  if (!is_zero(w.constant_term())) throw std::invalid_argument("cosh_half_sqrt: argument must have zero constant term");
  MultiSeries<Rational> out = MultiSeries<Rational>::constant(Rational(1), w.cap());
  MultiSeries<Rational> power = out;
  for (int m = 1; m <= w.cap(); ++m) {
    power *= w;
    if (power.is_zero()) break;
    out += (Rational(1) / (pow(Rational(4), static_cast<unsigned>(m)) * Rational(factorial(static_cast<unsigned long>(2 * m))))) * power;
  }
  return out;
}

/// Renders terms in ascending weight, e.g. "1 + 1/2*y - 1/4*z".
template <class F>
std::string to_string(const MultiSeries<F>& s, const std::function<std::string(const F&)>& coeff_str) {
  std::vector<std::pair<Exponent, F>> ordered(s.terms().begin(), s.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return weight_of(a.first) < weight_of(b.first); });
  std::string out;
  static const char* names[3] = {"x", "y", "z"};
  for (const auto& [e, c] : ordered) {
    std::string mono;
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = coeff_str(c);
    if (!out.empty()) out += " + ";
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += "(" + cs + ")*" + mono;
  }
  return out.empty() ? "0" : out;
}

inline std::string to_string(const MultiSeries<Rational>& s) {
  return to_string<Rational>(s, [](const Rational& q) { return q.get_str(); });
}

}  // namespace qmhs
