#include <gtest/gtest.h>

#include <random>

#include "bmvoa/qseries/qseries.hpp"

using bmvoa::Rational;
using bmvoa::qs::QSeries;
using bmvoa::qs::SeriesError;

namespace {

QSeries one_minus_q_to(long n, long order) {
  QSeries s = QSeries::constant(1, order);
  s.set(n, -1);
  return s;
}

// Pentagonal number theorem: ∏(1-q^n) = Σ (-1)^k q^{k(3k-1)/2} over k ∈ Z.
std::vector<long> pentagonal_oracle(long order) {
  std::vector<long> c(static_cast<std::size_t>(order), 0);
  for (long k = -order; k <= order; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e >= 0 && e < order) c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
  }
  return c;
}

}  // namespace

TEST(QSeries, MonomialAndCoefficient) {
  const auto m = QSeries::monomial(3, Rational(1, 2), 4);
  EXPECT_EQ(m.denom(), 2);
  EXPECT_EQ(m.coefficient(Rational(1, 2)), 3);
  EXPECT_EQ(m.coefficient(1), 0);
  EXPECT_THROW(m.coefficient(4), SeriesError);
  EXPECT_EQ(m.coefficient(Rational(1, 3)), 0) << "exponents off the lattice carry no term";
  EXPECT_EQ(m.leading(), std::make_pair(Rational(1, 2), Rational(3)));
}

TEST(QSeries, EulerProductMatchesPentagonalTheorem) {
  const long order = 60;
  QSeries p = QSeries::constant(1, order);
  for (long n = 1; n < order; ++n) p = p * one_minus_q_to(n, order);
  const auto want = pentagonal_oracle(order);
  for (long e = 0; e < order; ++e) EXPECT_EQ(p.coefficient(e), want[static_cast<std::size_t>(e)]) << e;
}

TEST(QSeries, InverseOfOneMinusQ) {
  const auto inv = one_minus_q_to(1, 30).inverse();
  EXPECT_EQ(inv.order(), 30);
  for (long e = 0; e < 30; ++e) EXPECT_EQ(inv.coefficient(e), 1);
}

TEST(QSeries, InverseOfShiftedSeries) {
  const auto s = one_minus_q_to(1, 20).shift_exponent(Rational(-1, 24));
  const auto inv = s.inverse();
  EXPECT_EQ(inv.leading(), std::make_pair(Rational(1, 24), Rational(1)));
  const auto prod = s * inv;
  EXPECT_TRUE(prod.agrees_with(QSeries::constant(1, prod.order())));
}

TEST(QSeries, PowMatchesBinomial) {
  const auto p = one_minus_q_to(1, 20).pow(7);
  const long binom[] = {1, -7, 21, -35, 35, -21, 7, -1};
  for (long e = 0; e < 20; ++e) EXPECT_EQ(p.coefficient(e), e < 8 ? binom[e] : 0);
  EXPECT_EQ(one_minus_q_to(1, 5).pow(0).coefficient(0), 1);
}

TEST(QSeries, RandomRingIdentities) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-9, 9);
  auto random_series = [&] {
    std::vector<int> c(15);
    for (auto& x : c) x = coef(rng);
    c[0] = 1 + std::abs(c[0]);
    return QSeries::polynomial(c, 15);
  };
  for (int t = 0; t < 20; ++t) {
    const auto a = random_series(), b = random_series(), c = random_series();
    EXPECT_TRUE((a * b).agrees_with(b * a));
    EXPECT_TRUE((a * (b + c)).agrees_with(a * b + a * c));
    EXPECT_TRUE(((a / b) * b).agrees_with(a));
    EXPECT_TRUE((a - a).agrees_with(QSeries(1, 15)));
  }
}

TEST(QSeries, ValidityTracksLeadingExponents) {
  const auto a = QSeries::monomial(1, -1, 10);
  const auto b = QSeries::monomial(1, 2, 5);
  // Unknown terms of a start at q^10 and get multiplied by q^2.
  EXPECT_EQ((a * b).order(), 4);
  EXPECT_EQ((a + b).order(), 5);
}

TEST(QSeries, HalfArgument) {
  QSeries s(1, 6);
  s.set(1, 2);
  s.set(3, 5);
  const auto h = s.half_argument();
  EXPECT_EQ(h.order(), 3);
  EXPECT_EQ(h.coefficient(Rational(1, 2)), 2);
  EXPECT_EQ(h.coefficient(Rational(3, 2)), 5);
}

TEST(QSeries, RebaseAndSimplify) {
  const auto m = QSeries::monomial(1, 1, 3);
  const auto r = m.rebase(48);
  EXPECT_EQ(r.denom(), 48);
  EXPECT_TRUE(r.agrees_with(m));
  EXPECT_EQ(r.simplify().denom(), 1);
  EXPECT_THROW(m.rebase(0), SeriesError);
  EXPECT_THROW(r.rebase(50), SeriesError);
}

TEST(QSeries, Truncate) {
  const auto t = one_minus_q_to(3, 10).truncate(2);
  EXPECT_EQ(t.order(), 2);
  EXPECT_EQ(t.terms().size(), 1U);
}

TEST(QSeries, NonnegativeIntegers) {
  EXPECT_TRUE(QSeries::monomial(4, 1, 3).all_nonnegative_integers());
  EXPECT_FALSE(QSeries::monomial(-4, 1, 3).all_nonnegative_integers());
  EXPECT_FALSE(QSeries::monomial(Rational(1, 2), 1, 3).all_nonnegative_integers());
}

TEST(QSeries, Errors) {
  EXPECT_THROW(QSeries(1, 5).inverse(), SeriesError);
  EXPECT_THROW(QSeries(1, 5).leading(), SeriesError);
  EXPECT_THROW(QSeries(0, 5), SeriesError);
}

TEST(QSeries, JsonIsExact) {
  const auto j = QSeries::monomial(Rational(-1, 3), Rational(1, 2), 2).to_json();
  EXPECT_EQ(j["denom"], 2);
  EXPECT_EQ(j["order"], "2");
  ASSERT_EQ(j["terms"].size(), 1U);
  EXPECT_EQ(j["terms"][0][0], 1);
  EXPECT_EQ(j["terms"][0][1], "-1/3");
}
