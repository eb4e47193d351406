#pragma once

// The limits xi(k) = lim z_n(k; e^{2 pi i / n}). Closed forms are held exactly
// as c * (-2 pi i)^e with c rational; floating values are only a rendering.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qmhs/backend.hpp"
#include "qmhs/closedforms.hpp"
#include "qmhs/exactnum.hpp"
#include "qmhs/index.hpp"
#include "qmhs/mhs.hpp"
#include "qmhs/multiseries.hpp"
#include "qmhs/parallel.hpp"

namespace qmhs {

inline std::complex<double> z_numeric(const Index& index, int n, bool star = false) {
  ComplexBackend backend(n);
  return nested_sum(index, backend, star ? Chain::nonstrict : Chain::strict);
}

struct XiClosed {
  Rational coeff;
  int power = 0;

  std::complex<double> value() const {
    const std::complex<double> base(0.0, -2.0 * std::numbers::pi);
    return coeff.get_d() * std::pow(base, power);
  }
  std::string to_string() const {
    if (sgn(coeff) == 0) return "0";
    return coeff.get_str() + "*(-2*pi*i)^" + std::to_string(power);
  }
  friend bool operator==(const XiClosed& a, const XiClosed& b) {
    if (sgn(a.coeff) == 0 || sgn(b.coeff) == 0) return sgn(a.coeff) == sgn(b.coeff);
    return a.coeff == b.coeff && a.power == b.power;
  }
};

/// xi(k) = -B_k / k! (-2 pi i)^k.
inline XiClosed xi_closed_depth1(int k) {
  if (k < 1) throw std::invalid_argument("xi_closed_depth1 needs k >= 1");
  return {-bernoulli(static_cast<std::size_t>(k)) / Rational(factorial(static_cast<unsigned long>(k))), k};
}

/// xi({k}^r) for k in {1, 2, 3}:
///   (-2 pi i)^r / (r+1)!,
///   (-1)^r (-2 pi i)^{2r} / ((r+1)(2r+1)!),
///   (1 + (-1)^r) (-2 pi i)^{3r} / ((r+1)(3r+2)!).
inline XiClosed xi_kkk(int k, int r) {
  if (r < 1) throw std::invalid_argument("xi_kkk needs r >= 1");
  const int even = r % 2 == 0 ? 1 : -1;
  const auto fact = [](int m) { return Rational(factorial(static_cast<unsigned long>(m))); };
  switch (k) {
    case 1:
      return {Rational(1) / fact(r + 1), r};
    case 2:
      return {Rational(even) / (Rational(r + 1) * fact(2 * r + 1)), 2 * r};
    case 3:
      return {Rational(1 + even) / (Rational(r + 1) * fact(3 * r + 2)), 3 * r};
    default:
      throw std::invalid_argument("xi_kkk is defined for k = 1, 2, 3");
  }
}

/// Sum of xi over all indices of weight k and depth r:
/// -(-2 pi i)^k / (k+1)! sum_{j=1}^{r} C(k+1, j) B_{k+1-j}.
inline XiClosed xi_sum_formula(int k, int r) {
  if (!(k >= r && r >= 1)) throw std::invalid_argument("xi_sum_formula needs k >= r >= 1");
  Rational acc = 0;
  for (int j = 1; j <= r; ++j) acc += Rational(binomial(k + 1, j)) * bernoulli(static_cast<std::size_t>(k + 1 - j));
  return {-acc / Rational(factorial(static_cast<unsigned long>(k + 1))), k};
}

/// The same sum as sum_{j=1}^{r} (-2 pi i)^{j-1} / j! * xi(k+1-j).
inline XiClosed xi_sum_intermediate(int k, int r) {
  if (!(k >= r && r >= 1)) throw std::invalid_argument("xi_sum_intermediate needs k >= r >= 1");
  Rational acc = 0;
  for (int j = 1; j <= r; ++j) acc += xi_closed_depth1(k + 1 - j).coeff / Rational(factorial(static_cast<unsigned long>(j)));
  return {acc, k};
}

/// e^{y/2} x / sinh(x/2) (cosh(sqrt((x+y)^2 - 4z) / 2) - cosh((x-y)/2)) / (xy - z).
/// The coefficient of x^{k-r-s} y^{r-s} z^s is (-2 pi i)^{-k} times the sum of
/// xi over indices of weight k, depth r and height s.
inline MultiSeries<Rational> tilde_U(int cap) {
  using S = MultiSeries<Rational>;
  const int wide = cap + 2;
  const S x = S::variable(0, wide), y = S::variable(1, wide), z = S::variable(2, wide);
  const S numerator = cosh_half_sqrt((x + y) * (x + y) - Rational(4) * z) - cosh_half_sqrt((x - y) * (x - y));
  return exp_half_y(cap) * x_over_sinh_half_x(cap) * divide_by_xy_minus_z(numerator);
}

/// Star kernel, tilde_U(x, -y, -z)^{-1}.
inline MultiSeries<Rational> tilde_U_star(int cap) { return invert(tilde_U(cap).scale_variables(1, -1, -1)); }

/// Limit of zbar_n({k}^r) (1 - zeta_n)^{kr} with n (1 - zeta_n) -> -2 pi i:
/// zbar_n({k}^r) is a polynomial in n of degree kr, and its leading
/// coefficient, read off by finite differences, is the rational part of xi.
inline XiClosed xi_kkk_from_closed(int k, int r) {
  const int d = k * r;
  std::vector<Rational> values;
  for (int n = d + 1; n <= 2 * d + 1; ++n) values.push_back(kkk_closed(k, r, n));
  for (int level = 0; level < d; ++level)
    for (std::size_t i = 0; i + 1 < values.size() - static_cast<std::size_t>(level); ++i) values[i] = values[i + 1] - values[i];
  return {values[0] / Rational(factorial(static_cast<unsigned long>(d))), d};
}

/// Renders an element of Q(zeta_n) at zeta_n = e^{2 pi i / n}.
inline std::complex<double> to_complex(const CycloElem& e) {
  // Fields of order 1 and 2 have degree 1, so only the constant term exists.
  if (e.field() == nullptr || e.field()->order() <= 2) return {e.coefficient(0).get_d(), 0.0};
  const ComplexBackend backend(e.field()->order());
  std::complex<double> acc;
  const auto& c = e.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j)
    if (sgn(c[j]) != 0) acc += c[j].get_d() * backend.q_power(static_cast<long>(j));
  return acc;
}

/// Closed limit for depth-one indices and {k}^r with k <= 3.
inline std::optional<XiClosed> xi_target(const Index& index) {
  if (index.depth() == 1) return xi_closed_depth1(index[0]);
  if (index.empty() || index[0] > 3) return std::nullopt;
  for (int part : index.parts())
    if (part != index[0]) return std::nullopt;
  return xi_kkk(index[0], index.depth());
}

struct ConvergenceRow {
  int n = 0;
  std::complex<double> value;
  double error = 0;
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;
  /// Least-squares slope of log(error) against log(n).
  double slope = 0;

  bool strictly_decreasing() const {
    for (std::size_t i = 1; i < rows.size(); ++i)
      if (!(rows[i].error < rows[i - 1].error)) return false;
    return true;
  }
  double final_error() const { return rows.empty() ? 0 : rows.back().error; }
};

inline ConvergenceStudy convergence_study(const Index& index, const std::vector<int>& schedule,
                                          std::complex<double> target, unsigned jobs = 1) {
  ConvergenceStudy study;
  study.rows = parallel_map(
      schedule,
      [&](int n) {
        const std::complex<double> v = z_numeric(index, n);
        return ConvergenceRow{n, v, std::abs(v - target)};
      },
      jobs);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& row : study.rows) {
    if (!(row.error > 0)) continue;
    const double lx = std::log(static_cast<double>(row.n)), ly = std::log(row.error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2 && m * sxx - sx * sx != 0) study.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return study;
}

inline ConvergenceStudy convergence_study(const Index& index, const std::vector<int>& schedule, unsigned jobs = 1) {
  const auto target = xi_target(index);
  if (!target) throw std::invalid_argument("no closed-form limit known for index " + index.to_string());
  return convergence_study(index, schedule, target->value(), jobs);
}

}  // namespace qmhs
