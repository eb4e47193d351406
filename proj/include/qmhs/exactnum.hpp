#pragma once

// Exact scalars: big integers and rationals (GMP), binomial coefficients and
// Bernoulli numbers.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmhs {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a documented contract of a result is found broken at runtime
/// (a non-rational value where rationality is guaranteed, a non-exact division).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const std::complex<double>& c) { return c == std::complex<double>{}; }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" with an optional leading minus sign. The result is
/// canonical whatever the input's reduction state.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (text.front() == '-') n = -n;
  return make_rational(n, d);
}

inline Rational pow(const Rational& base, unsigned e) {
  Rational result(1), b(base);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

/// Binomial coefficient. Zero for k < 0; for n < 0 the polynomial extension
/// n(n-1)...(n-k+1)/k! is used.
inline Integer binomial(long n, long k) {
  if (k < 0) return 0;
  Integer result, top(n);
  mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

inline Integer factorial(unsigned long k) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), k);
  return result;
}

namespace detail {

class BernoulliCache {
 public:
  Rational get(std::size_t k) {
    {
      std::shared_lock lock(mutex_);
      if (k < values_.size()) return values_[k];
    }
    std::unique_lock lock(mutex_);
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() <= k) {
      const std::size_t m = values_.size();
      Rational acc(0);
      for (std::size_t j = 0; j < m; ++j)
        acc += Rational(binomial(static_cast<long>(m + 1), static_cast<long>(j))) * values_[j];
      Rational bm = -acc / Rational(static_cast<long>(m + 1));
      values_.push_back(bm);
    }
    return values_[k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

inline BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace detail

/// k-th Bernoulli number with B_1 = -1/2, from sum_{j<=k} C(k+1, j) B_j = 0.
/// Values are cached; safe to call concurrently.
inline Rational bernoulli(std::size_t k) { return detail::bernoulli_cache().get(k); }

/// sum_{a+b=m} C(n-a-1, b) C(n-b-1, a); equals C(2n-m-1, m).
inline Integer binom_convolution(long n, long m) {
  if (!(n > m && m >= 0))
    throw std::invalid_argument("binom_convolution requires n > m >= 0");
  Integer total(0);
  for (long a = 0; a <= m; ++a) total += binomial(n - a - 1, m - a) * binomial(n - (m - a) - 1, a);
  return total;
}

}  // namespace qmhs
