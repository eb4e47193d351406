#pragma once

// Value fields for the nested-sum engine. A backend exposes its order n, the
// summand weight w_k(m) = q^{(k-1)m} / [m]_q^k and an accumulator type; the
// engine is otherwise identical for exact and floating evaluation.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qmhs/cyclotomic.hpp"

namespace qmhs {

class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// q = zeta_n in Q(zeta_n). Caches inverse q-integers and summand weights, so
/// an instance should not be shared between threads; the field itself may be.
class ExactBackend {
 public:
  using value_type = CycloElem;

  class Accumulator {
   public:
    explicit Accumulator(CycloElem init = {}) : sum_(std::move(init)) {}
    void add(const CycloElem& term) { sum_ += term; }
    const CycloElem& value() const { return sum_; }

   private:
    CycloElem sum_;
  };

  explicit ExactBackend(int n) : ExactBackend(CycloField::get(n)) {}
  explicit ExactBackend(FieldPtr field) : field_(std::move(field)) {
    const int n = field_->order();
    inv_qint_.reserve(static_cast<std::size_t>(n));
    inv_qint_.emplace_back();  // m = 0 unused
    for (int m = 1; m < n; ++m) inv_qint_.push_back(q_integer(m, field_).inverse());
  }

  int order() const { return field_->order(); }
  const FieldPtr& field() const { return field_; }
  CycloElem zero() const { return CycloElem(field_, {}); }
  CycloElem one() const { return CycloElem(field_, {Rational(1)}); }
  CycloElem q_power(long j) const { return CycloElem::zeta_power(field_, j); }

  const CycloElem& term_weight(int k, int m) {
    if (m < 1 || m >= order()) throw std::invalid_argument("q-integer [m] is not invertible for this n");
    auto& row = weights_[k];
    if (row.empty()) {
      row.resize(static_cast<std::size_t>(order()));
      for (int j = 1; j < order(); ++j) {
        CycloElem w = q_power(static_cast<long>(k - 1) * j);
        for (int e = 0; e < k; ++e) w *= inv_qint_[static_cast<std::size_t>(j)];
        row[static_cast<std::size_t>(j)] = std::move(w);
      }
    }
    return row[static_cast<std::size_t>(m)];
  }

  /// (1 - zeta_n)^{-w}; requires n >= 2.
  CycloElem inverse_one_minus_zeta_power(int w) {
    if (order() < 2) throw std::domain_error("1 - zeta_1 = 0 has no inverse");
    auto it = inv_one_minus_zeta_.find(w);
    if (it != inv_one_minus_zeta_.end()) return it->second;
    const CycloElem base = (one() - q_power(1)).inverse();
    CycloElem acc = one();
    for (int e = 0; e < w; ++e) acc *= base;
    return inv_one_minus_zeta_.emplace(w, acc).first->second;
  }

 private:
  FieldPtr field_;
  std::vector<CycloElem> inv_qint_;
  std::map<int, std::vector<CycloElem>> weights_;
  std::map<int, CycloElem> inv_one_minus_zeta_;
};

/// q = e^{2 pi i / n} in double precision. Weights use the closed form
/// [m]_q = sin(pi m / n) / sin(pi / n) * e^{i pi (m-1) / n}, so every phase is a
/// single trigonometric evaluation of an exactly reduced angle.
class ComplexBackend {
 public:
  using value_type = std::complex<double>;

  /// Neumaier-compensated complex sum.
  class Accumulator {
   public:
    explicit Accumulator(std::complex<double> init = {}) : re_(init.real()), im_(init.imag()) {}
    void add(const std::complex<double>& term) {
      step(re_, re_comp_, term.real());
      step(im_, im_comp_, term.imag());
    }
    std::complex<double> value() const { return {re_ + re_comp_, im_ + im_comp_}; }

   private:
    static void step(double& sum, double& comp, double x) {
      const double t = sum + x;
      if (std::abs(sum) >= std::abs(x))
        comp += (sum - t) + x;
      else
        comp += (x - t) + sum;
      sum = t;
    }
    double re_ = 0, re_comp_ = 0, im_ = 0, im_comp_ = 0;
  };

  explicit ComplexBackend(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("numeric backend requires n >= 2");
  }

  int order() const { return n_; }
  std::complex<double> zero() const { return {}; }
  std::complex<double> one() const { return {1.0, 0.0}; }

  /// q^j as cos/sin of the reduced angle 2 pi j / n.
  std::complex<double> q_power(long j) const { return unit(2 * j); }

  std::complex<double> term_weight(int k, int m) const {
    if (m < 1 || m >= n_) throw std::invalid_argument("q-integer [m] is not invertible for this n");
    // phase in units of pi/n: 2(k-1)m - k(m-1)
    const long phase = 2L * (k - 1) * m - static_cast<long>(k) * (m - 1);
    const double ratio = std::sin(std::numbers::pi / n_) / std::sin(std::numbers::pi * m / n_);
    return std::pow(ratio, k) * unit(phase);
  }

 private:
  // e^{i pi e / n}
  std::complex<double> unit(long e) const {
    const long period = 2L * n_;
    long r = e % period;
    if (r < 0) r += period;
    const double theta = std::numbers::pi * static_cast<double>(r) / n_;
    return {std::cos(theta), std::sin(theta)};
  }

  int n_;
};

}  // namespace qmhs
