#pragma once

// Closed evaluations of z_n({k}^r; zeta_n): depth one via a univariate
// series, k = 1, 2, 3 by binomial formulas, and any k from the double
// generating function
//   sum_n n^{k-1} Y^n sum_r zbar_n({k}^r) X^r
//     = (-1)^{k-1} / X * log prod_{l=0}^{k} F_{k,l}(X, Y)^{(-1)^l}.

#include <chrono>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmhs/bipoly.hpp"
#include "qmhs/cyclotomic.hpp"
#include "qmhs/exactnum.hpp"
#include "qmhs/index.hpp"
#include "qmhs/mhs.hpp"
#include "qmhs/poly.hpp"
#include "qmhs/report.hpp"

namespace qmhs {

/// (zbar_n(1), ..., zbar_n(K)), the coefficients of x^k in 1 + n x / (1 - (1+x)^n).
inline std::vector<Rational> depth_one_bar(int n, int K) {
  if (n < 1 || K < 1) throw std::invalid_argument("depth_one_bar needs n >= 1 and K >= 1");
  // ((1+x)^n - 1) / x
  std::vector<Rational> s;
  for (long j = 0; j < n; ++j) s.emplace_back(binomial(n, j + 1));
  const RatPoly inv = series_inverse(RatPoly(std::move(s)), static_cast<std::size_t>(K) + 1);
  std::vector<Rational> out;
  for (int k = 1; k <= K; ++k) out.push_back(-Rational(n) * inv.coeff(static_cast<std::size_t>(k)));
  return out;
}

/// Rational factor of z_n({k}^r; zeta_n) (1 - zeta_n)^{-kr} for k in {1, 2, 3}.
inline Rational kkk_closed(int k, int r, int n) {
  if (r < 1 || n < 1) throw std::invalid_argument("kkk_closed needs r >= 1 and n >= 1");
  const Integer sign = r % 2 == 0 ? 1 : -1;
  switch (k) {
    case 1:
      return Rational(binomial(n, r + 1)) / n;
    case 2:
      return Rational(sign * binomial(n + r, 2 * r + 1)) / (Integer(n) * (r + 1));
    case 3:
      return Rational(binomial(n + 2 * r + 1, 3 * r + 2) + sign * binomial(n + r, 3 * r + 2)) /
             (Integer(n) * n * (r + 1));
    default:
      throw std::invalid_argument("kkk_closed is defined for k = 1, 2, 3");
  }
}

namespace detail {

/// All l-subsets of {0, ..., k-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int k, int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int start) -> void {
    if (static_cast<int>(cur.size()) == l) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < k; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Companion matrix over Q[X] of the monic polynomial in Y whose roots are the
/// alpha_i, i.e. (-1)^k ((1 - Y)^k + Y^{k-1} X).
inline Matrix<RatPoly> alpha_companion(int k) {
  const Rational s = k % 2 == 0 ? 1 : -1;
  Matrix<RatPoly> c(static_cast<std::size_t>(k), std::vector<RatPoly>(static_cast<std::size_t>(k)));
  for (int i = 1; i < k; ++i) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(i - 1)] = RatPoly(Rational(1));
  for (int j = 0; j < k; ++j) {
    const Rational bin = (j % 2 == 0 ? 1 : -1) * Rational(binomial(k, j));
    RatPoly cj(std::vector<Rational>{s * bin, j == k - 1 ? s : Rational(0)});
    c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k - 1)] = -cj;
  }
  return c;
}

inline Matrix<RatPoly> exterior_power(const Matrix<RatPoly>& c, int l) {
  const int k = static_cast<int>(c.size());
  const auto sets = subsets(k, l);
  Matrix<RatPoly> out(sets.size(), std::vector<RatPoly>(sets.size()));
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b) {
      Matrix<RatPoly> minor(static_cast<std::size_t>(l), std::vector<RatPoly>(static_cast<std::size_t>(l)));
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
          minor[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              c[static_cast<std::size_t>(sets[a][static_cast<std::size_t>(i)])]
               [static_cast<std::size_t>(sets[b][static_cast<std::size_t>(j)])];
      out[a][b] = determinant(minor);
    }
  return out;
}

}  // namespace detail

/// F_{k,l}(X, Y) = prod over l-subsets I of (1 - alpha_I Y), realised as
/// det(I - Y * Lambda^l C) for the companion matrix C of the alpha_i.
inline BiPoly exterior_F(int k, int l) {
  if (k < 1 || l < 0 || l > k) throw std::invalid_argument("exterior_F needs k >= 1 and 0 <= l <= k");
  if (l == 0) return BiPoly(Rational(1)) - BiPoly::Y();
  static std::mutex mu;
  static std::map<std::pair<int, int>, BiPoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({k, l});
    if (it != cache.end()) return it->second;
  }
  const Matrix<RatPoly> ext = detail::exterior_power(detail::alpha_companion(k), l);
  Matrix<BiPoly> m(ext.size(), std::vector<BiPoly>(ext.size()));
  for (std::size_t i = 0; i < ext.size(); ++i)
    for (std::size_t j = 0; j < ext.size(); ++j) {
      m[i][j] = -(BiPoly::from_x(ext[i][j]) * BiPoly::Y());
      if (i == j) m[i][j] = m[i][j] + BiPoly(Rational(1));
    }
  BiPoly f = determinant(m);
  std::lock_guard lock(mu);
  return cache.emplace(std::pair{k, l}, std::move(f)).first->second;
}

/// Dense bivariate series truncated to the box deg_Y <= y_max, deg_X <= x_max.
class BiSeries {
 public:
  BiSeries(int y_max, int x_max)
      : y_max_(y_max), x_max_(x_max),
        c_(static_cast<std::size_t>(y_max + 1), std::vector<Rational>(static_cast<std::size_t>(x_max + 1), Rational(0))) {}

  static BiSeries from(const BiPoly& p, int y_max, int x_max) {
    BiSeries s(y_max, x_max);
    for (const auto& [key, c] : p.terms())
      if (key.second <= y_max && key.first <= x_max) s.at(key.second, key.first) = c;
    return s;
  }

  int y_max() const { return y_max_; }
  int x_max() const { return x_max_; }
  Rational& at(int dy, int dx) { return c_[static_cast<std::size_t>(dy)][static_cast<std::size_t>(dx)]; }
  const Rational& at(int dy, int dx) const { return c_[static_cast<std::size_t>(dy)][static_cast<std::size_t>(dx)]; }

  BiSeries& operator+=(const BiSeries& o) {
    for (int i = 0; i <= y_max_; ++i)
      for (int j = 0; j <= x_max_; ++j) at(i, j) += o.at(i, j);
    return *this;
  }
  BiSeries& operator-=(const BiSeries& o) {
    for (int i = 0; i <= y_max_; ++i)
      for (int j = 0; j <= x_max_; ++j) at(i, j) -= o.at(i, j);
    return *this;
  }

  /// log f from L' = f' / f in Y, for f(0, X) = 1.
  friend BiSeries log(const BiSeries& f) {
    for (int j = 0; j <= f.x_max_; ++j)
      if (f.at(0, j) != (j == 0 ? 1 : 0)) throw ContractViolation("series logarithm needs constant term 1");
    const int ny = f.y_max_, nx = f.x_max_;
    // g = L' as rows in Y: g_j = (j+1) f_{j+1} - sum_{i>=1} f_i g_{j-i}
    std::vector<std::vector<Rational>> g(static_cast<std::size_t>(ny), std::vector<Rational>(static_cast<std::size_t>(nx + 1), Rational(0)));
    for (int j = 0; j < ny; ++j) {
      auto& row = g[static_cast<std::size_t>(j)];
      for (int x = 0; x <= nx; ++x) row[static_cast<std::size_t>(x)] = (j + 1) * f.at(j + 1, x);
      for (int i = 1; i <= j; ++i) {
        const auto& prev = g[static_cast<std::size_t>(j - i)];
        for (int a = 0; a <= nx; ++a) {
          if (sgn(f.at(i, a)) == 0) continue;
          for (int b = 0; a + b <= nx; ++b) row[static_cast<std::size_t>(a + b)] -= f.at(i, a) * prev[static_cast<std::size_t>(b)];
        }
      }
    }
    BiSeries out(ny, nx);
    for (int j = 0; j < ny; ++j)
      for (int x = 0; x <= nx; ++x) out.at(j + 1, x) = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)] / (j + 1);
    return out;
  }

 private:
  int y_max_, x_max_;
  std::vector<std::vector<Rational>> c_;
};

/// zbar_n({k}^r) for 1 <= n <= n_max and 0 <= r <= r_max.
class KkkTable {
 public:
  KkkTable(int k, int n_max, int r_max)
      : k_(k), n_max_(n_max), r_max_(r_max),
        v_(static_cast<std::size_t>(n_max), std::vector<Rational>(static_cast<std::size_t>(r_max + 1), Rational(0))) {}

  int k() const { return k_; }
  int n_max() const { return n_max_; }
  int r_max() const { return r_max_; }
  const Rational& at(int n, int r) const {
    if (n < 1 || n > n_max_ || r < 0 || r > r_max_) throw std::out_of_range("kkk table entry out of range");
    return v_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r)];
  }
  Rational& at(int n, int r) { return v_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r)]; }

 private:
  int k_, n_max_, r_max_;
  std::vector<std::vector<Rational>> v_;
};

inline KkkTable kkk_general(int k, int n_max, int r_max) {
  if (k < 1 || n_max < 1 || r_max < 0) throw std::invalid_argument("kkk_general needs k >= 1, n_max >= 1, r_max >= 0");
  const int x_max = r_max + 1;
  BiSeries total(n_max, x_max);
  for (int l = 0; l <= k; ++l) {
    const BiSeries term = log(BiSeries::from(exterior_F(k, l), n_max, x_max));
    if (l % 2 == 0)
      total += term;
    else
      total -= term;
  }
  for (int n = 0; n <= n_max; ++n)
    if (sgn(total.at(n, 0)) != 0) throw ContractViolation("generating function has a nonzero X^0 part");
  KkkTable table(k, n_max, r_max);
  const int sign = k % 2 == 1 ? 1 : -1;
  for (int n = 1; n <= n_max; ++n) {
    const Rational scale = Rational(sign) / pow(Rational(n), static_cast<unsigned>(k - 1));
    for (int r = 0; r <= r_max; ++r) table.at(n, r) = total.at(n, r + 1) * scale;
  }
  return table;
}

/// Compares the two sides of the conjectured symmetric evaluations
///   family 1: z_n({1}^a,2,{1}^b) + z_n({1}^b,2,{1}^a)
///   family 2: z_n({2}^a,3,{2}^b) + z_n({2}^b,3,{2}^a)
/// against their binomial closed forms. The result is never pass or fail.
inline VerificationReport conjecture_check(int family, int n, int a, int b) {
  if (family != 1 && family != 2) throw std::invalid_argument("conjecture family must be 1 or 2");
  if (n < 2 || a < 0 || b < 0 || a + b + 1 >= n) throw std::invalid_argument("conjecture needs n >= 2, a, b >= 0 and a + b + 1 < n");
  const auto start = std::chrono::steady_clock::now();
  const int base = family == 1 ? 1 : 2;
  const auto word = [&](int left, int right) {
    return concat(concat(repeated(base, left), Index({base + 1})), repeated(base, right));
  };
  ExactBackend backend(n);
  const CycloElem lhs = z(word(a, b), backend) + z(word(b, a), backend);
  const int s = a + b;
  Rational factor;
  int power;
  if (family == 1) {
    factor = -Rational(binomial(n + 1, s + 3)) / n;
    power = s + 2;
  } else {
    factor = Rational((s % 2 == 0 ? -1 : 1) * binomial(n + s + 1, 2 * s + 3)) / (Integer(s + 2) * n);
    power = 2 * s + 3;
  }
  CycloElem one_minus = backend.one() - backend.q_power(1);
  CycloElem rhs(factor);
  for (int e = 0; e < power; ++e) rhs *= one_minus;
  rhs = rhs * backend.one();
  const bool equal = lhs == rhs;
  VerificationReport rep = make_report(
      "conjecture",
      {{"family", family}, {"n", n}, {"a", a}, {"b", b}, {"equal", std::string(equal ? "true" : "false")}}, equal,
      to_string(lhs), to_string(rhs), start);
  rep.status = Status::report_only;
  return rep;
}

}  // namespace qmhs
