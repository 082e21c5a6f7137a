#include <gtest/gtest.h>

#include "lkrep/errors.hpp"
#include "lkrep/laurent.hpp"
#include "lkrep/poly_matrix.hpp"
#include "test_util.hpp"

namespace lkrep {
namespace {

using testing::random_poly;

TEST(Laurent, ZeroAndConstants) {
  EXPECT_TRUE(LaurentPoly2().is_zero());
  EXPECT_TRUE(LaurentPoly2(0).is_zero());
  EXPECT_TRUE(LaurentPoly2(1).is_one());
  EXPECT_TRUE((LaurentPoly2::q() - LaurentPoly2::q()).is_zero());
  EXPECT_EQ(LaurentPoly2::from_terms({{{1, 0}, 2}, {{1, 0}, -2}, {{0, 0}, 0}}), LaurentPoly2());
}

TEST(Laurent, ToString) {
  const LaurentPoly2 p = -LaurentPoly2::q(2) * LaurentPoly2::t() + LaurentPoly2::q() - 1;
  EXPECT_EQ(p.to_string(), "-q^2*t + q - 1");
  EXPECT_EQ(LaurentPoly2().to_string(), "0");
  EXPECT_EQ(LaurentPoly2::q(-1).to_string(), "q^-1");
}

TEST(Laurent, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly(rng);
    const auto b = random_poly(rng);
    const auto c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * LaurentPoly2(1), a);
  }
}

TEST(Laurent, EvaluationIsARingMap) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng);
    const auto b = random_poly(rng);
    const Complex q = testing::random_unit(rng) * 1.1;
    const Complex t = testing::random_unit(rng) * 0.9;
    EXPECT_LT(std::abs((a * b).eval(q, t) - a.eval(q, t) * b.eval(q, t)), 1e-9);
    EXPECT_LT(std::abs((a + b).eval(q, t) - a.eval(q, t) - b.eval(q, t)), 1e-9);
  }
}

TEST(Laurent, PowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(13);
  const auto a = random_poly(rng, 3, 2, 3);
  LaurentPoly2 acc = 1;
  for (unsigned k = 0; k < 6; ++k) {
    EXPECT_EQ(a.pow(k), acc);
    acc *= a;
  }
}

TEST(Laurent, Units) {
  const auto u = LaurentPoly2::monomial(-1, 3, -2);
  EXPECT_TRUE(u.is_unit());
  EXPECT_TRUE((u * u.unit_inverse()).is_one());
  EXPECT_FALSE(LaurentPoly2(2).is_unit());
  EXPECT_THROW((LaurentPoly2::q() + 1).unit_inverse(), DomainError);
}

TEST(Laurent, SubstituteTAgreesWithEvaluation) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng);
    const Complex q = testing::random_unit(rng);
    for (int tv : {1, -1}) {
      const auto s = a.substitute_t(tv);
      EXPECT_FALSE(s.has_t());
      EXPECT_LT(std::abs(s.eval(q, 1.0) - a.eval(q, static_cast<double>(tv))), 1e-9);
    }
  }
}

TEST(Laurent, BigCoefficientsDoNotOverflow) {
  const LaurentPoly2 p = LaurentPoly2(3) * LaurentPoly2::q() + 1;
  const LaurentPoly2 big = p.pow(60);
  BigInt leading = 1;
  for (int i = 0; i < 60; ++i) leading *= 3;
  EXPECT_EQ(big.terms().back().coeff, leading);
  EXPECT_EQ(big.terms().back().deg.dq, 60);
}

PolyMatrix random_matrix(std::mt19937_64& rng, int d) {
  PolyMatrix m(d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) m(r, c) = random_poly(rng, 2, 1, 3);
  }
  return m;
}

TEST(PolyMatrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(21);
  for (int d = 1; d <= 5; ++d) {
    for (int trial = 0; trial < 4; ++trial) {
      const PolyMatrix m = random_matrix(rng, d);
      EXPECT_EQ(determinant(m), testing::leibniz_determinant(m)) << "d=" << d;
    }
  }
}

TEST(PolyMatrix, CayleyHamilton) {
  std::mt19937_64 rng(22);
  const PolyMatrix m = random_matrix(rng, 4);
  const auto c = characteristic_polynomial(m);
  ASSERT_EQ(c.size(), 5u);
  EXPECT_TRUE(c.back().is_one());
  PolyMatrix acc(4);
  PolyMatrix power = PolyMatrix::identity(4);
  for (const auto& coeff : c) {
    PolyMatrix scaled(4);
    for (int r = 0; r < 4; ++r) {
      for (int col = 0; col < 4; ++col) scaled(r, col) = coeff * power(r, col);
    }
    acc = acc + scaled;
    power = power * m;
  }
  EXPECT_EQ(acc, PolyMatrix(4));
}

TEST(PolyMatrix, TraceIsSecondCharpolyCoefficient) {
  std::mt19937_64 rng(23);
  const PolyMatrix m = random_matrix(rng, 5);
  const auto c = characteristic_polynomial(m);
  EXPECT_EQ(c[4], -m.trace());
}

TEST(PolyMatrix, UnitInverse) {
  // Upper unitriangular times a monomial diagonal: determinant is a unit.
  std::mt19937_64 rng(24);
  PolyMatrix m = PolyMatrix::identity(4);
  for (int r = 0; r < 4; ++r) {
    m(r, r) = LaurentPoly2::monomial(r % 2 ? -1 : 1, r, -r);
    for (int c = r + 1; c < 4; ++c) m(r, c) = random_poly(rng, 2, 1, 2);
  }
  EXPECT_TRUE((m * unit_inverse(m)).is_identity());
  EXPECT_TRUE((unit_inverse(m) * m).is_identity());
  PolyMatrix singular = PolyMatrix::identity(2);
  singular(0, 0) = 2;
  EXPECT_THROW(unit_inverse(singular), DomainError);
}

}  // namespace
}  // namespace lkrep
