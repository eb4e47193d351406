#pragma once

// Weight/depth/height generating functions of zbar_n and their kernel
//   U_n(x,y,z) = x / ((1+x)^n - 1)
//     * sum_{a+b<=n-1} C(n-a-1,b) C(n-b-1,a) / (n-a-b) (1+x)^a (1+y)^b (xy-z)^{n-1-a-b},
// with F_n = U_n and F*_n = U_n(x,-y,-z)^{-1}; the product formula for
// Phi(1; q) in (u, v, w); and q-polylogarithms with their D_q recursions.

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "qmhs/closedforms.hpp"
#include "qmhs/cyclotomic.hpp"
#include "qmhs/exactnum.hpp"
#include "qmhs/index.hpp"
#include "qmhs/mhs.hpp"
#include "qmhs/multiseries.hpp"
#include "qmhs/poly.hpp"
#include "qmhs/report.hpp"

namespace qmhs {

using RatSeries = MultiSeries<Rational>;
using CycloSeries = MultiSeries<CycloElem>;

inline RatSeries U_n(int n, int cap) {
  if (n < 1 || cap < 0) throw std::invalid_argument("U_n needs n >= 1 and cap >= 0");
  // x / ((1+x)^n - 1) = 1 / sum_j C(n, j+1) x^j
  std::vector<Rational> s;
  for (long j = 0; j < n; ++j) s.emplace_back(binomial(n, j + 1));
  const RatSeries prefactor = from_univariate(series_inverse(RatPoly(std::move(s)), static_cast<std::size_t>(cap) + 1), 0, cap);

  const RatSeries one = RatSeries::constant(1, cap);
  const RatSeries x = RatSeries::variable(0, cap), y = RatSeries::variable(1, cap), z = RatSeries::variable(2, cap);
  const RatSeries xy_minus_z = x * y - z;
  std::vector<RatSeries> px{one}, py{one}, pk{one};
  for (int i = 1; i < n; ++i) {
    px.push_back(px.back() * (one + x));
    py.push_back(py.back() * (one + y));
    pk.push_back(pk.back() * xy_minus_z);
  }
  RatSeries sum(cap);
  for (int a = 0; a < n; ++a)
    for (int b = 0; a + b < n; ++b) {
      const int e = n - 1 - a - b;
      if (2 * e > cap) continue;
      const Rational c = Rational(binomial(n - a - 1, b) * binomial(n - b - 1, a)) / (n - a - b);
      sum += c * (px[static_cast<std::size_t>(a)] * py[static_cast<std::size_t>(b)] * pk[static_cast<std::size_t>(e)]);
    }
  return prefactor * sum;
}

/// 1 + sum over profiles (k, r, s) with k <= cap of the profile sum of zbar_n
/// (or zbar*_n) times x^{k-r-s} y^{r-s} z^s.
inline RatSeries F_bruteforce(int n, int cap, bool star) {
  if (n < 1 || cap < 0) throw std::invalid_argument("F_bruteforce needs n >= 1 and cap >= 0");
  ExactBackend backend(n);
  RatSeries out = RatSeries::constant(1, cap);
  for (int k = 1; k <= cap; ++k)
    for (int r = 1; r <= k; ++r)
      for (int s = 0; s <= r && r + s <= k; ++s) {
        if (s == 0 && k != r) continue;  // height 0 forces all parts to be 1
        out.add_term({k - r - s, r - s, s}, profile_sum(IndexProfile{k, r, s}, backend, star));
      }
  return out;
}

/// Both generating-function identities at (n, cap): [non-star, star].
inline std::vector<VerificationReport> verify_height_generating_function(int n, int cap) {
  std::vector<VerificationReport> out;
  auto start = std::chrono::steady_clock::now();
  const RatSeries u = U_n(n, cap);
  const RatSeries f = F_bruteforce(n, cap, false);
  out.push_back(make_report("ohno-zagier", {{"n", n}, {"cap", cap}, {"star", std::string("false")}}, f == u, to_string(f),
                            to_string(u), start));
  start = std::chrono::steady_clock::now();
  const RatSeries us = invert(u.scale_variables(1, -1, -1));
  const RatSeries fs = F_bruteforce(n, cap, true);
  out.push_back(make_report("ohno-zagier", {{"n", n}, {"cap", cap}, {"star", std::string("true")}}, fs == us,
                            to_string(fs), to_string(us), start));
  return out;
}

/// Sum of zbar_n over all indices of weight k and depth r against
/// (1/n) sum_{j=1}^{r} C(n, j) zbar_n(k+1-j).
inline VerificationReport sum_formula_check(int n, int k, int r) {
  if (!(k >= r && r > 0 && n > r)) throw std::invalid_argument("sum formula needs k >= r and n > r > 0");
  const auto start = std::chrono::steady_clock::now();
  ExactBackend backend(n);
  CycloElem total = backend.zero();
  for (const Index& idx : enumerate(k, r)) total += zbar(idx, backend);
  const std::vector<Rational> depth1 = depth_one_bar(n, k);
  Rational rhs = 0;
  for (int j = 1; j <= r; ++j) rhs += Rational(binomial(n, j)) * depth1[static_cast<std::size_t>(k - j)] / n;
  const bool ok = total.is_rational() && total.rational_part() == rhs;
  return make_report("sum-formula", {{"n", n}, {"k", k}, {"r", r}}, ok, to_string(total), to_string(rhs), start);
}

namespace detail {

// P(X) = (1-u-X)(1+v-X) + w, or the star form (1-u-X)(1-v-X) - w, at X = q^j.
inline CycloSeries phi_quadratic(const CycloElem& qj, int cap, bool star) {
  const CycloSeries one = CycloSeries::constant(CycloElem(1), cap);
  const CycloSeries u = CycloSeries::variable(0, cap), v = CycloSeries::variable(1, cap), w = CycloSeries::variable(2, cap);
  const CycloSeries X = CycloSeries::constant(qj, cap);
  if (star) return (one - u - X) * (one - v - X) - w;
  return (one - u - X) * (one + v - X) + w;
}

// (1 - q^j)(1 - u - q^j)
inline CycloSeries phi_denominator(const CycloElem& qj, int cap) {
  const CycloSeries one = CycloSeries::constant(CycloElem(1), cap);
  const CycloSeries X = CycloSeries::constant(qj, cap);
  return (one - X) * (one - CycloSeries::variable(0, cap) - X);
}

}  // namespace detail

/// prod_{j=1}^{n-1} P(q^j) / ((1-q^j)(1-u-q^j)) at q = zeta_n; with star set,
/// the star product prod (1-q^j)(1-u-q^j) / P*(q^j).
inline CycloSeries phi_product(int n, int cap, bool star = false) {
  if (n < 2) throw std::invalid_argument("phi_product needs n >= 2");
  ExactBackend backend(n);
  CycloSeries acc = CycloSeries::constant(backend.one(), cap);
  for (int j = 1; j < n; ++j) {
    const CycloElem qj = backend.q_power(j);
    if (star)
      acc = acc * detail::phi_denominator(qj, cap) * invert(detail::phi_quadratic(qj, cap, true));
    else
      acc = acc * detail::phi_quadratic(qj, cap, false) * invert(detail::phi_denominator(qj, cap));
  }
  return acc;
}

/// P(q^{n-1}) c_{n-1}, where (1-q)(1-q-u) c_1 = 1 and
/// (1-q^{j+1})(1-u-q^{j+1}) c_{j+1} = P(q^j) c_j.
inline CycloSeries phi_recurrence(int n, int cap) {
  if (n < 2) throw std::invalid_argument("phi_recurrence needs n >= 2");
  ExactBackend backend(n);
  CycloSeries c = invert(detail::phi_denominator(backend.q_power(1), cap));
  for (int j = 1; j + 1 < n; ++j)
    c = detail::phi_quadratic(backend.q_power(j), cap, false) * c *
        invert(detail::phi_denominator(backend.q_power(j + 1), cap));
  return detail::phi_quadratic(backend.q_power(n - 1), cap, false) * c;
}

/// Phi(u, v, w; 1) under u = x/(1+x), v = y - z/(1+x), w = z/(1+x)^2. Throws
/// ContractViolation if a coefficient is not rational.
inline RatSeries phi_to_xyz(const CycloSeries& phi, int cap) {
  const CycloSeries one = CycloSeries::constant(CycloElem(1), cap);
  const CycloSeries x = CycloSeries::variable(0, cap), y = CycloSeries::variable(1, cap), z = CycloSeries::variable(2, cap);
  const CycloSeries inv = invert(one + x);
  const CycloSeries mapped = substitute(phi.truncated(std::min(phi.cap(), cap)), x * inv, y - z * inv, z * inv * inv);
  RatSeries out(cap);
  for (const auto& [e, c] : mapped.terms()) {
    if (!c.is_rational()) throw ContractViolation("transformed generating function has a non-rational coefficient " + to_string(c));
    out.add_term(e, c.rational_part());
  }
  return out;
}

/// Product route against the recurrence, the star product against the
/// inverted non-star product at (v, w) -> (-v, -w), and both products mapped
/// to (x, y, z) against the brute-force generating functions.
inline std::vector<VerificationReport> verify_phi_routes(int n, int cap) {
  const auto cyclo_str = [](const CycloSeries& s) {
    return to_string<CycloElem>(s, [](const CycloElem& c) { return to_string(c); });
  };
  const std::vector<std::pair<std::string, ParamValue>> params{{"n", n}, {"cap", cap}};
  std::vector<VerificationReport> out;

  auto start = std::chrono::steady_clock::now();
  const CycloSeries prod = phi_product(n, cap);
  const CycloSeries rec = phi_recurrence(n, cap);
  out.push_back(make_report("phi-recurrence", params, prod == rec, cyclo_str(prod), cyclo_str(rec), start));

  start = std::chrono::steady_clock::now();
  const CycloSeries star = phi_product(n, cap, true);
  const CycloSeries flipped = invert(prod.scale_variables(CycloElem(1), CycloElem(-1), CycloElem(-1)));
  out.push_back(make_report("phi-star", params, star == flipped, cyclo_str(star), cyclo_str(flipped), start));

  for (bool is_star : {false, true}) {
    start = std::chrono::steady_clock::now();
    auto p = params;
    p.emplace_back("star", std::string(is_star ? "true" : "false"));
    try {
      const RatSeries mapped = phi_to_xyz(is_star ? star : prod, cap);
      const RatSeries brute = F_bruteforce(n, cap, is_star);
      out.push_back(make_report("phi-transform", p, mapped == brute, to_string(mapped), to_string(brute), start));
    } catch (const ContractViolation& e) {
      out.push_back(make_report("phi-transform", p, false, e.what(), "rational coefficients", start));
    }
  }
  return out;
}

using CycloPoly = Poly<CycloElem>;

/// L_k(t; q) = sum_{n > m_1 > ... > m_r > 0} t^{m_1} / prod (1 - q^{m_i})^{k_i}
/// (non-strict chains with star set) at q = zeta_n; the empty index gives 1.
inline CycloPoly polylog(const Index& index, const FieldPtr& field, bool star = false) {
  const int n = field->order();
  const int r = index.depth();
  if (r == 0) return CycloPoly(CycloElem(field, {Rational(1)}));
  if (n < 2) return CycloPoly{};
  std::vector<CycloElem> inv(static_cast<std::size_t>(n));
  for (int m = 1; m < n; ++m) inv[static_cast<std::size_t>(m)] = (CycloElem(1) - CycloElem::zeta_power(field, m)).inverse();
  const auto weight = [&](int k, int m) {
    CycloElem w(field, {Rational(1)});
    for (int e = 0; e < k; ++e) w *= inv[static_cast<std::size_t>(m)];
    return w;
  };
  // a[m] = sum over chains (m_j, ..., m_r) with m_j = m, built from j = r up.
  std::vector<CycloElem> a(static_cast<std::size_t>(n), CycloElem(field, {}));
  for (int m = 1; m < n; ++m) a[static_cast<std::size_t>(m)] = weight(index[static_cast<std::size_t>(r - 1)], m);
  for (int j = r - 2; j >= 0; --j) {
    std::vector<CycloElem> next(static_cast<std::size_t>(n), CycloElem(field, {}));
    CycloElem prefix(field, {});
    for (int m = 1; m < n; ++m) {
      if (star) prefix += a[static_cast<std::size_t>(m)];
      next[static_cast<std::size_t>(m)] = weight(index[static_cast<std::size_t>(j)], m) * prefix;
      if (!star) prefix += a[static_cast<std::size_t>(m)];
    }
    a = std::move(next);
  }
  a[0] = CycloElem(field, {});
  return CycloPoly(std::move(a));
}

/// (D_q p)(t) = (p(t) - p(q t)) / t.
inline CycloPoly dq(const CycloPoly& p, const FieldPtr& field) {
  if (p.is_zero()) return p;
  std::vector<CycloElem> out(p.size() - 1);
  for (std::size_t m = 1; m < p.size(); ++m)
    out[m - 1] = p.coeff(m) * (CycloElem(1) - CycloElem::zeta_power(field, static_cast<long>(m)));
  return CycloPoly(std::move(out));
}

namespace detail {

inline std::string poly_string(const CycloPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.coeff(i).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p.coeff(i)) + ")*t^" + std::to_string(i);
  }
  return out;
}

inline CycloPoly t_power(const FieldPtr& field, std::size_t e) {
  return CycloPoly::monomial(CycloElem(field, {Rational(1)}), e);
}

// Exact division by t^e; a nonzero low coefficient clears `ok`.
inline CycloPoly divide_by_t_power(const CycloPoly& p, std::size_t e, bool& ok) {
  for (std::size_t i = 0; i < e && i < p.size(); ++i)
    if (!p.coeff(i).is_zero()) ok = false;
  if (p.size() <= e) return {};
  return CycloPoly(std::vector<CycloElem>(p.coefficients().begin() + static_cast<long>(e), p.coefficients().end()));
}

inline CycloPoly divide_by_one_minus_t(const CycloPoly& p, const FieldPtr& field, bool& ok) {
  const CycloPoly den(std::vector<CycloElem>{CycloElem(field, {Rational(1)}), CycloElem(field, {Rational(-1)})});
  auto [q, r] = divmod(p, den);
  if (!r.is_zero()) ok = false;
  return q;
}

}  // namespace detail

/// Right-hand side of the D_q recursion for L_k (or L*_k). `exact` is cleared
/// when a polynomial division leaves a remainder.
inline CycloPoly dq_recursion_rhs(const Index& index, const FieldPtr& field, bool star, bool& exact) {
  const int n = field->order();
  const int k1 = index[0];
  const Index rest = index.tail();
  if (k1 >= 2) {
    std::vector<int> parts = index.parts();
    parts[0] -= 1;
    return detail::divide_by_t_power(polylog(Index(parts), field, star), 1, exact);
  }
  if (star && rest.empty()) {
    // (1 - t^{n-1}) / (1 - t)
    const CycloPoly num = detail::t_power(field, 0) - detail::t_power(field, static_cast<std::size_t>(n - 1));
    return detail::divide_by_one_minus_t(num, field, exact);
  }
  const CycloPoly inner = polylog(rest, field, star);
  const CycloElem at_one = inner.eval(CycloElem(field, {Rational(1)}));
  if (!star) {
    const CycloPoly num = inner - CycloPoly::monomial(at_one, static_cast<std::size_t>(n - 1));
    return detail::divide_by_one_minus_t(num, field, exact);
  }
  // (L*_{k'}(t) - t^n L*_{k'}(1)) / (t (1 - t))
  const CycloPoly num = inner - CycloPoly::monomial(at_one, static_cast<std::size_t>(n));
  return detail::divide_by_t_power(detail::divide_by_one_minus_t(num, field, exact), 1, exact);
}

/// The printed star recursion for k_1 = 1 and depth >= 2, with t^{n-1} in
/// place of t^n; kept to show that it is not an identity.
inline CycloPoly dq_star_rhs_printed(const Index& index, const FieldPtr& field, bool& exact) {
  const int n = field->order();
  const CycloPoly inner = polylog(index.tail(), field, true);
  const CycloElem at_one = inner.eval(CycloElem(field, {Rational(1)}));
  const CycloPoly num = inner - CycloPoly::monomial(at_one, static_cast<std::size_t>(n - 1));
  return detail::divide_by_t_power(detail::divide_by_one_minus_t(num, field, exact), 1, exact);
}

/// One report per (index, star) over all indices of weight <= weight_cap:
/// D_q L equals its recursion, divisions are exact, deg L < n and the
/// t-valuation is at least depth (non-star) or 1 (star).
inline std::vector<VerificationReport> verify_dq_recursions(int n, int weight_cap) {
  if (n < 2) throw std::invalid_argument("D_q recursions need n >= 2");
  const FieldPtr field = CycloField::get(n);
  std::vector<VerificationReport> out;
  for (int k = 1; k <= weight_cap; ++k)
    for (int r = 1; r <= k; ++r)
      for (const Index& idx : enumerate(k, r))
        for (bool star : {false, true}) {
          const auto start = std::chrono::steady_clock::now();
          const CycloPoly L = polylog(idx, field, star);
          bool ok = L.degree() < n;
          const std::size_t valuation = star ? 1 : static_cast<std::size_t>(idx.depth());
          for (std::size_t i = 0; i < valuation && i < L.size(); ++i) ok = ok && L.coeff(i).is_zero();
          const CycloPoly lhs = dq(L, field);
          bool exact = true;
          const CycloPoly rhs = dq_recursion_rhs(idx, field, star, exact);
          ok = ok && exact && lhs == rhs;
          out.push_back(make_report("dq-recursion",
                                    {{"n", n}, {"index", idx.to_string()}, {"star", std::string(star ? "true" : "false")}},
                                    ok, detail::poly_string(lhs), detail::poly_string(rhs), start));
        }
  return out;
}

/// L_k(1) = sum_{1 <= a_j <= k_j} prod C(k_j - 1, a_j - 1) zbar_n(a) (zbar* for star).
inline VerificationReport verify_polylog_at_one(const Index& index, int n, bool star) {
  const auto start = std::chrono::steady_clock::now();
  ExactBackend backend(n);
  const FieldPtr& field = backend.field();
  const CycloElem lhs = polylog(index, field, star).eval(backend.one());
  CycloElem rhs = backend.zero();
  std::vector<int> a(index.parts().size(), 1);
  while (true) {
    Integer coeff = 1;
    for (std::size_t j = 0; j < a.size(); ++j) coeff *= binomial(index[j] - 1, a[j] - 1);
    rhs += CycloElem(Rational(coeff)) * zbar(Index(a), backend, star ? Chain::nonstrict : Chain::strict);
    std::size_t j = 0;
    while (j < a.size() && a[j] == index[j]) a[j++] = 1;
    if (j == a.size()) break;
    ++a[j];
  }
  return make_report("polylog-at-one", {{"n", n}, {"index", index.to_string()}, {"star", std::string(star ? "true" : "false")}},
                     lhs == rhs, to_string(lhs), to_string(rhs), start);
}

}  // namespace qmhs
