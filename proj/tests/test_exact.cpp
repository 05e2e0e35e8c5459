#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bmvoa/exact.hpp"

using bmvoa::QSqrt2;
using bmvoa::Rational;

namespace {

QSqrt2 random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST(QSqrt2, Sqrt2Squared) {
  EXPECT_EQ(QSqrt2::sqrt2() * QSqrt2::sqrt2(), QSqrt2(2));
  EXPECT_TRUE((QSqrt2::sqrt2() * QSqrt2::sqrt2()).is_rational());
}

TEST(QSqrt2, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, QSqrt2(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
      EXPECT_EQ(b * b.inverse(), QSqrt2(1));
    }
  }
}

TEST(QSqrt2, NormIsMultiplicative) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_element(rng), b = random_element(rng);
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    EXPECT_EQ(a * a.conjugate(), QSqrt2(a.norm()));
  }
}

TEST(QSqrt2, ToDouble) {
  const QSqrt2 x(Rational(1, 2), Rational(-3, 4));
  EXPECT_NEAR(x.to_double(), 0.5 - 0.75 * std::sqrt(2.0), 1e-15);
}

TEST(QSqrt2, InverseOfZeroThrows) { EXPECT_THROW(QSqrt2(0).inverse(), std::domain_error); }
