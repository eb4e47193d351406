#pragma once

// Shared oracles and seeded generators for the test binaries.

#include <cstdint>
#include <random>
#include <vector>

#include "qmhs.hpp"

namespace qmhs::testing {

/// Direct chain enumeration, independent of the DP engine and backend caches:
/// every chain n > m_1 > ... > m_r > 0 (or >= for the non-strict variant) is
/// visited and its term built from scratch with field arithmetic.
inline CycloElem chain_sum(const Index& index, int n, Chain chain) {
  const FieldPtr field = CycloField::get(n);
  const int r = index.depth();
  CycloElem total(field, {});
  if (r == 0) return CycloElem(field, {Rational(1)});
  std::vector<int> m(static_cast<std::size_t>(r), 0);
  const auto visit = [&](auto&& self, int pos, int upper) -> void {
    if (pos == r) {
      CycloElem term(field, {Rational(1)});
      for (int i = 0; i < r; ++i) {
        const int k = index[static_cast<std::size_t>(i)];
        const int mi = m[static_cast<std::size_t>(i)];
        CycloElem den(field, {Rational(1)});
        const CycloElem qint = q_integer(mi, field);
        for (int e = 0; e < k; ++e) den *= qint;
        term *= CycloElem::zeta_power(field, static_cast<long>(k - 1) * mi) / den;
      }
      total += term;
      return;
    }
    const int top = (pos == 0 || chain == Chain::strict) ? upper - 1 : upper;
    for (int v = top; v >= 1; --v) {
      m[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  visit(visit, 0, n);
  return total;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int span = 9) {
    const int num = integer(-span, span);
    const int den = integer(1, span);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  CycloElem cyclo(const FieldPtr& field) {
    std::vector<Rational> c;
    for (int j = 0; j < field->degree(); ++j) c.push_back(rational());
    return CycloElem(field, c);
  }

  RatPoly poly(int max_degree) {
    std::vector<Rational> c;
    const int d = integer(0, max_degree);
    for (int j = 0; j <= d; ++j) c.push_back(rational());
    return RatPoly(c);
  }

  MultiSeries<Rational> series(int cap, bool unit = false) {
    MultiSeries<Rational> s(cap);
    for (int ex = 0; ex <= cap; ++ex)
      for (int ey = 0; ex + ey <= cap; ++ey)
        for (int ez = 0; ex + ey + 2 * ez <= cap; ++ez) {
          if (integer(0, 2) == 0) continue;
          s.add_term({ex, ey, ez}, rational());
        }
    if (unit && sgn(s.coeff({0, 0, 0})) == 0) s.add_term({0, 0, 0}, Rational(integer(1, 5)));
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qmhs::testing
