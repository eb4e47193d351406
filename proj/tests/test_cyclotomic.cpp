#include <gtest/gtest.h>

#include "support.hpp"

namespace qmhs {
namespace {

RatPoly poly(std::vector<Rational> c) { return RatPoly(std::move(c)); }

TEST(CyclotomicPolynomial, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), poly({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), poly({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), poly({1, 0, -1, 0, 1}));
}

TEST(CyclotomicPolynomial, DividesXnMinusOneWithTotientDegree) {
  for (int n = 1; n <= 50; ++n) {
    const RatPoly phi = cyclotomic_polynomial(n);
    const RatPoly xn = RatPoly::monomial(Rational(1), static_cast<std::size_t>(n)) - RatPoly(Rational(1));
    EXPECT_TRUE(divmod(xn, phi).second.is_zero()) << n;
    int totient = 0;
    for (int j = 1; j <= n; ++j) totient += std::gcd(j, n) == 1;
    EXPECT_EQ(phi.degree(), totient) << n;
    EXPECT_EQ(phi.leading(), 1) << n;
    for (const auto& c : phi.coefficients()) EXPECT_EQ(c.get_den(), 1) << n;
  }
}

TEST(CycloElem, Examples) {
  const FieldPtr f3 = CycloField::get(3), f4 = CycloField::get(4);
  const CycloElem z3 = CycloElem::zeta(f3), z4 = CycloElem::zeta(f4);
  const CycloElem one3(f3, {Rational(1)});
  EXPECT_EQ((one3 + z3).inverse(), -z3);
  EXPECT_EQ(z4 * z4, CycloElem(f4, {Rational(-1)}));
  EXPECT_EQ(one3.inverse(), one3);
  EXPECT_THROW(CycloElem(f3, {}).inverse(), std::domain_error);
}

TEST(CycloElem, MixedFieldsRejected) {
  const CycloElem a = CycloElem::zeta(CycloField::get(3));
  const CycloElem b = CycloElem::zeta(CycloField::get(5));
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
}

TEST(CycloElem, ScalarPromotes) {
  const CycloElem z = CycloElem::zeta(CycloField::get(5));
  EXPECT_EQ(z + CycloElem(Rational(1, 2)) - z, CycloElem(CycloField::get(5), {Rational(1, 2)}));
  EXPECT_EQ(CycloElem(2) * z, z + z);
}

TEST(QInteger, Examples) {
  const FieldPtr f4 = CycloField::get(4);
  const CycloElem i = CycloElem::zeta(f4);
  EXPECT_EQ(q_integer(1, f4), CycloElem(f4, {Rational(1)}));
  EXPECT_EQ(q_integer(2, f4), CycloElem(f4, {Rational(1)}) + i);
  EXPECT_EQ(q_integer(3, f4), i);
}

TEST(QInteger, InverseUnlessMultipleOfOrder) {
  for (int n = 2; n <= 30; ++n) {
    const FieldPtr f = CycloField::get(n);
    const CycloElem one(f, {Rational(1)});
    EXPECT_TRUE(q_integer(n, f).is_zero()) << n;
    for (int m = 1; m < n; ++m) EXPECT_EQ(q_integer(m, f) * q_integer(m, f).inverse(), one) << n << "," << m;
  }
}

TEST(Rationality, Examples) {
  const FieldPtr f3 = CycloField::get(3);
  const CycloElem z = CycloElem::zeta(f3), one(f3, {Rational(1)});
  EXPECT_TRUE(CycloElem(f3, {Rational(3, 2)}).is_rational());
  EXPECT_FALSE(z.is_rational());
  EXPECT_THROW(z.rational_part(), ContractViolation);
  const CycloElem norm = (one - z) * (one - z * z);
  ASSERT_TRUE(norm.is_rational());
  EXPECT_EQ(norm.rational_part(), 3);
}

TEST(CycloField, NormIdentityAndMinimalPolynomial) {
  for (int n = 2; n <= 50; ++n) {
    const FieldPtr f = CycloField::get(n);
    const CycloElem one(f, {Rational(1)});
    CycloElem prod = one;
    for (int j = 1; j < n; ++j) prod *= one - CycloElem::zeta_power(f, j);
    EXPECT_EQ(prod, CycloElem(f, {Rational(n)})) << n;
    EXPECT_TRUE(cyclotomic_polynomial(n).eval(CycloElem::zeta(f)).is_zero()) << n;
  }
}

TEST(CycloField, PowersWrapAround) {
  const FieldPtr f = CycloField::get(7);
  const CycloElem z = CycloElem::zeta(f);
  CycloElem acc(f, {Rational(1)});
  for (long j = 0; j < 20; ++j) {
    EXPECT_EQ(CycloElem::zeta_power(f, j), acc) << j;
    EXPECT_EQ(CycloElem::zeta_power(f, -j) * acc, CycloElem(f, {Rational(1)})) << j;
    acc *= z;
  }
}

TEST(CycloElem, FieldAxioms) {
  testing::Gen gen(99);
  for (int n : {3, 4, 5, 6, 12}) {
    const FieldPtr f = CycloField::get(n);
    for (int trial = 0; trial < 40; ++trial) {
      const CycloElem a = gen.cyclo(f), b = gen.cyclo(f), c = gen.cyclo(f);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), CycloElem(f, {Rational(1)}));
      }
    }
  }
}

TEST(CycloElem, ParseRoundTrip) {
  testing::Gen gen(5);
  for (int n : {1, 2, 3, 5, 8, 12}) {
    const FieldPtr f = CycloField::get(n);
    for (int trial = 0; trial < 30; ++trial) {
      const CycloElem a = gen.cyclo(f);
      EXPECT_EQ(parse_cyclo(to_string(a), f), a) << to_string(a);
    }
  }
  EXPECT_EQ(to_string(CycloElem(CycloField::get(4), {0, Rational(5, 2)})), "5/2*z");
  EXPECT_THROW(parse_cyclo("1 + + z", CycloField::get(3)), std::invalid_argument);
  EXPECT_THROW(parse_cyclo("2*w", CycloField::get(3)), std::invalid_argument);
}

}  // namespace
}  // namespace qmhs
