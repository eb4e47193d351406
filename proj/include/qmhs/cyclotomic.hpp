#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n), elements stored as
// coefficient vectors reduced modulo the n-th cyclotomic polynomial.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmhs/exactnum.hpp"
#include "qmhs/poly.hpp"

namespace qmhs {

/// n-th cyclotomic polynomial, (x^n - 1) / prod_{d | n, d < n} Phi_d. Cached.
inline RatPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  static std::mutex mutex;
  static std::map<int, RatPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  RatPoly num = RatPoly::monomial(Rational(1), static_cast<std::size_t>(n)) - RatPoly(Rational(1));
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = exact_quotient(num, cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(num)).first->second;
}

class CycloField;
using FieldPtr = std::shared_ptr<const CycloField>;

/// The field Q(zeta_n). Immutable once built; obtain shared instances via get().
class CycloField {
 public:
  static FieldPtr get(int n) {
    if (n < 1) throw std::invalid_argument("CycloField: n must be >= 1");
    static std::mutex mutex;
    static std::map<int, FieldPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::shared_ptr<const CycloField>(new CycloField(n));
    return slot;
  }

  int order() const { return n_; }
  int degree() const { return degree_; }
  const RatPoly& modulus() const { return phi_; }

  /// zeta^j reduced, for any integer j.
  const std::vector<Rational>& power(long j) const {
    long r = j % n_;
    if (r < 0) r += n_;
    return powers_[static_cast<std::size_t>(r)];
  }

 private:
  explicit CycloField(int n) : n_(n), phi_(cyclotomic_polynomial(n)), degree_(phi_.degree()) {
    // zeta^j for j < degree is the unit vector; beyond that, multiply by zeta
    // and fold the overflow coefficient back through Phi_n.
    const auto d = static_cast<std::size_t>(degree_);
    std::vector<Rational> cur(d, Rational(0));
    cur[0] = 1;
    powers_.push_back(cur);
    for (int j = 1; j < n_; ++j) {
      Rational carry = cur[d - 1];
      for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (sgn(carry) != 0)
        for (std::size_t i = 0; i < d; ++i) cur[i] -= carry * phi_.coeff(i);
      powers_.push_back(cur);
    }
  }

  int n_;
  RatPoly phi_;
  int degree_;
  std::vector<std::vector<Rational>> powers_;
};

/// Element of Q(zeta_n). An element built from a rational alone carries no
/// field and acts as that rational in every cyclotomic field; mixing elements
/// of two different fields is an error.
class CycloElem {
 public:
  CycloElem() : coeffs_{Rational(0)} {}
  CycloElem(const Rational& q) : coeffs_{q} {}       // NOLINT(implicit)
  CycloElem(long q) : coeffs_{Rational(q)} {}        // NOLINT(implicit)
  CycloElem(int q) : coeffs_{Rational(q)} {}         // NOLINT(implicit)

  /// Builds sum_j coeffs[j] zeta^j, reducing any length modulo Phi_n.
  CycloElem(FieldPtr field, const std::vector<Rational>& coeffs) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("CycloElem: null field");
    coeffs_ = reduce(*field_, coeffs);
  }

  static CycloElem zeta_power(const FieldPtr& field, long j) {
    CycloElem e;
    e.field_ = field;
    e.coeffs_ = field->power(j);
    return e;
  }
  static CycloElem zeta(const FieldPtr& field) { return zeta_power(field, 1); }

  const FieldPtr& field() const { return field_; }
  /// Coefficient of zeta^j (zero past the stored length).
  Rational coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rational(0); }
  /// Coefficients padded to the field degree (length 1 for a field-less scalar).
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
      if (sgn(coeffs_[j]) != 0) return false;
    return true;
  }
  Rational rational_part() const {
    if (!is_rational()) throw ContractViolation("rational_part of a non-rational cyclotomic element");
    return coeffs_[0];
  }

  CycloElem inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in a cyclotomic field");
    if (!field_ || field_->degree() == 1) return with(field_, {Rational(1) / coeffs_[0]});
    return with(field_, poly_inverse_mod(RatPoly(coeffs_), field_->modulus()).coefficients());
  }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    const FieldPtr& f = common(a, b);
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return with(f, std::move(out));
  }
  friend CycloElem operator-(const CycloElem& a) {
    CycloElem r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    const FieldPtr& f = common(a, b);
    if (a.coeffs_.size() == 1 || b.coeffs_.size() == 1) {
      const CycloElem& s = a.coeffs_.size() == 1 ? a : b;
      const CycloElem& v = a.coeffs_.size() == 1 ? b : a;
      std::vector<Rational> out(v.coeffs_.size());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = v.coeffs_[i] * s.coeffs_[0];
      return with(f, std::move(out));
    }
    const std::size_t d = a.coeffs_.size();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CycloElem(f, prod);
  }
  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }
  CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
  CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
  CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    (void)common(a, b);
    const std::size_t len = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < len; ++i)
      if (a.coefficient(i) != b.coefficient(i)) return false;
    return true;
  }

  friend bool is_zero(const CycloElem& e) { return e.is_zero(); }

 private:
  static CycloElem with(const FieldPtr& f, std::vector<Rational> coeffs) {
    CycloElem e;
    e.field_ = f;
    if (f) coeffs.resize(static_cast<std::size_t>(f->degree()), Rational(0));
    e.coeffs_ = std::move(coeffs);
    return e;
  }

  static const FieldPtr& common(const CycloElem& a, const CycloElem& b) {
    if (a.field_ && b.field_ && a.field_->order() != b.field_->order())
      throw std::invalid_argument("cyclotomic elements from different fields");
    return a.field_ ? a.field_ : b.field_;
  }

  static std::vector<Rational> reduce(const CycloField& field, const std::vector<Rational>& coeffs) {
    const auto d = static_cast<std::size_t>(field.degree());
    std::vector<Rational> out(d, Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (sgn(coeffs[j]) == 0) continue;
      if (j < d) {
        out[j] += coeffs[j];
      } else {
        const auto& p = field.power(static_cast<long>(j));
        for (std::size_t i = 0; i < d; ++i) out[i] += coeffs[j] * p[i];
      }
    }
    return out;
  }

  // Extended Euclid: s with s * a = 1 mod m, for a coprime to m.
  static RatPoly poly_inverse_mod(const RatPoly& a, const RatPoly& m) {
    RatPoly r0 = m, r1 = divmod(a, m).second;
    RatPoly s0, s1(Rational(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      RatPoly s = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r0.degree() != 0) throw std::domain_error("element is not invertible modulo the cyclotomic polynomial");
    return s0 * RatPoly(Rational(1) / r0.coeff(0));
  }

  FieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// [m]_q = 1 + q + ... + q^{m-1} at q = zeta_n.
inline CycloElem q_integer(int m, const FieldPtr& field) {
  if (m < 1) throw std::invalid_argument("q_integer: m must be >= 1");
  std::vector<Rational> acc(static_cast<std::size_t>(field->degree()), Rational(0));
  for (int j = 0; j < m; ++j) {
    const auto& p = field->power(j);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += p[i];
  }
  return CycloElem(field, acc);
}

/// Renders as a polynomial in `symbol`, lowest power first: "1/2 - z + 3*z^2".
inline std::string to_string(const CycloElem& e, std::string_view symbol = "z") {
  std::string out;
  const auto& c = e.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    Rational mag = abs(c[j]);
    const bool neg = sgn(c[j]) < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = j == 0 ? "" : (j == 1 ? std::string(symbol) : std::string(symbol) + "^" + std::to_string(j));
    if (j == 0)
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

/// Inverse of to_string for elements of `field`.
inline CycloElem parse_cyclo(std::string_view text, const FieldPtr& field, std::string_view symbol = "z") {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty cyclotomic expression");
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("malformed cyclotomic expression: '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw std::invalid_argument("malformed cyclotomic expression: '" + std::string(text) + "'");
    Rational coeff(1);
    std::size_t power = 0;
    auto star = term.find('*');
    std::string_view mono = term;
    if (star != std::string_view::npos) {
      coeff = parse_rational(term.substr(0, star));
      mono = term.substr(star + 1);
    }
    if (mono.substr(0, symbol.size()) == symbol) {
      std::string_view rest = mono.substr(symbol.size());
      if (rest.empty()) {
        power = 1;
      } else if (rest.front() == '^' && rest.size() > 1) {
        power = std::stoul(std::string(rest.substr(1)));
        if (parse_rational(rest.substr(1)) != Rational(static_cast<long>(power)))
          throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
      } else {
        throw std::invalid_argument("malformed monomial in '" + std::string(text) + "'");
      }
    } else if (star == std::string_view::npos) {
      coeff = parse_rational(mono);
    } else {
      throw std::invalid_argument("malformed monomial in '" + std::string(text) + "'");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
    coeffs[power] += neg ? Rational(-coeff) : coeff;
    pos = end;
  }
  return CycloElem(field, coeffs);
}

}  // namespace qmhs
