#pragma once

// Finite multiple harmonic q-series
//   z_n(k; q)  = sum_{n > m_1 > ... > m_r > 0} prod_i q^{(k_i-1) m_i} / [m_i]^{k_i}
// and the star version over n > m_1 >= ... >= m_r > 0, by an O(n r) dynamic
// program over any backend.

#include <cmath>
#include <complex>
#include <string>
#include <type_traits>
#include <vector>

#include "qmhs/backend.hpp"
#include "qmhs/index.hpp"

namespace qmhs {

enum class Chain { strict, nonstrict };

/// Nested sum over chains. T_j holds the partial sum over (m_j, ..., m_r); for
/// each m the strict chain updates j ascending so that T_{j+1} is still the
/// value over m_{j+1} < m, the non-strict chain updates descending so that it
/// already includes m_{j+1} = m.
template <class Backend>
typename Backend::value_type nested_sum(const Index& index, Backend& backend, Chain chain) {
  using V = typename Backend::value_type;
  using Acc = typename Backend::Accumulator;
  const int r = index.depth();
  const int n = backend.order();
  if (r == 0) return backend.one();
  std::vector<Acc> acc(static_cast<std::size_t>(r), Acc(backend.zero()));
  const V one = backend.one();
  auto above = [&](int j) -> V { return j + 1 == r ? one : acc[static_cast<std::size_t>(j + 1)].value(); };
  for (int m = 1; m < n; ++m) {
    if (chain == Chain::strict) {
      // m_j = m needs m_{j+1} < m; only j >= r - m can be reached yet.
      const int lo = r - m > 0 ? r - m : 0;
      for (int j = lo; j < r; ++j) acc[static_cast<std::size_t>(j)].add(backend.term_weight(index[static_cast<std::size_t>(j)], m) * above(j));
    } else {
      for (int j = r - 1; j >= 0; --j) acc[static_cast<std::size_t>(j)].add(backend.term_weight(index[static_cast<std::size_t>(j)], m) * above(j));
    }
  }
  V result = acc[0].value();
  if constexpr (std::is_same_v<V, std::complex<double>>) {
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
      throw NumericFailure("non-finite value in numeric nested sum");
  }
  return result;
}

template <class Backend>
typename Backend::value_type z(const Index& index, Backend& backend) {
  return nested_sum(index, backend, Chain::strict);
}

template <class Backend>
typename Backend::value_type z_star(const Index& index, Backend& backend) {
  return nested_sum(index, backend, Chain::nonstrict);
}

inline CycloElem z(const Index& index, int n) {
  ExactBackend b(n);
  return z(index, b);
}

inline CycloElem z_star(const Index& index, int n) {
  ExactBackend b(n);
  return z_star(index, b);
}

/// (1 - zeta_n)^{-wt(k)} z_n(k; zeta_n). For n = 1 every non-empty sum is
/// empty and the value is taken as 0.
inline CycloElem zbar(const Index& index, ExactBackend& backend, Chain chain = Chain::strict) {
  CycloElem raw = nested_sum(index, backend, chain);
  if (backend.order() == 1) return index.empty() ? backend.one() : backend.zero();
  if (raw.is_zero()) return raw;
  return raw * backend.inverse_one_minus_zeta_power(index.weight());
}

inline CycloElem zbar(const Index& index, int n) {
  ExactBackend b(n);
  return zbar(index, b);
}

inline CycloElem zbar_star(const Index& index, int n) {
  ExactBackend b(n);
  return zbar(index, b, Chain::nonstrict);
}

/// Sum of zbar (or zbar star) over I(k, r, s). The sum is rational; a
/// non-rational result raises ContractViolation.
inline Rational profile_sum(const IndexProfile& profile, ExactBackend& backend, bool star = false) {
  CycloElem total = backend.zero();
  for (const Index& idx : enumerate(profile)) total += zbar(idx, backend, star ? Chain::nonstrict : Chain::strict);
  if (!total.is_rational())
    throw ContractViolation("profile sum (" + std::to_string(profile.weight) + "," + std::to_string(profile.depth) + "," +
                            std::to_string(profile.height) + ") at n=" + std::to_string(backend.order()) +
                            " is not rational: " + to_string(total));
  return total.rational_part();
}

inline Rational profile_sum(const IndexProfile& profile, int n, bool star = false) {
  ExactBackend b(n);
  return profile_sum(profile, b, star);
}

}  // namespace qmhs
