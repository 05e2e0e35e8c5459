#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bmvoa/code/codes.hpp"
#include "bmvoa/qseries/characters.hpp"
#include "bmvoa/qseries/modular.hpp"

using namespace bmvoa;
using namespace bmvoa::qs;
using fusion::IsingLabel;

namespace {

// Independent integer-coefficient arithmetic for oracles.
using Poly = std::vector<Integer>;

Poly mul(const Poly& a, const Poly& b) {
  Poly c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Number of partitions of n into distinct parts taken from `parts`.
Poly distinct_partitions(std::size_t n, const std::vector<std::size_t>& parts) {
  Poly p(n, 0);
  p[0] = 1;
  for (auto e : parts) {
    for (std::size_t i = n; i-- > e;) p[i] += p[i - e];
  }
  return p;
}

std::vector<std::size_t> range(std::size_t from, std::size_t to, std::size_t step) {
  std::vector<std::size_t> v;
  for (auto i = from; i < to; i += step) v.push_back(i);
  return v;
}

// Series Σ p[m] q^{(step·m + offset)/d} valid below exponent `order`.
QSeries to_series(const Poly& p, long step, long offset, long d, long order) {
  QSeries s(d, order * d);
  for (std::size_t m = 0; m < p.size(); ++m) s.set(static_cast<long>(m) * step + offset, Rational(p[m]));
  return s;
}

// ch_0 and ch_{1/2} from fermionic states: distinct half-odd parts with
// even or odd count. In x = q^{1/2} the count parity equals the exponent parity.
QSeries ising_oracle(IsingLabel h, long order) {
  const std::size_t n = static_cast<std::size_t>(2 * order + 2);
  if (h == IsingLabel::h116) {
    const auto p = distinct_partitions(static_cast<std::size_t>(order + 1), range(1, static_cast<std::size_t>(order + 1), 1));
    return to_series(p, 48, 2, 48, order).truncate(order);
  }
  auto p = distinct_partitions(n, range(1, n, 2));
  for (std::size_t m = 0; m < n; ++m) {
    if ((m % 2 == 0) != (h == IsingLabel::h0)) p[m] = 0;
  }
  return to_series(p, 24, -1, 48, order).truncate(order);
}

Integer sigma(long n, int k) {
  Integer s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) {
      Integer t = 1;
      for (int i = 0; i < k; ++i) t *= d;
      s += t;
    }
  }
  return s;
}

std::array<QSeries, 3> as_array(const CharacterTriple& t) { return {t.b0, t.b1, t.bT}; }

}  // namespace

TEST(IsingCharacters, MatchFermionicCounting) {
  for (auto h : fusion::kIsingLabels) {
    const auto lib = ising_char(h, 40);
    const auto oracle = ising_oracle(h, 40);
    EXPECT_TRUE(lib.agrees_with(oracle)) << fusion::name(h);
    EXPECT_EQ(lib.order(), 40);
  }
}

TEST(IsingCharacters, LeadingTermsMatchConformalWeights) {
  EXPECT_EQ(ising_char(IsingLabel::h0, 5).leading_exponent(), Rational(-1, 48));
  EXPECT_EQ(ising_char(IsingLabel::h12, 5).leading_exponent(), Rational(1, 2) - Rational(1, 48));
  EXPECT_EQ(ising_char(IsingLabel::h116, 5).leading_exponent(), Rational(1, 16) - Rational(1, 48));
  EXPECT_EQ(ising_char(IsingLabel::h116, 5, SixteenthConvention::sign_flipped).leading_exponent(), Rational(-1, 24));
  // ch_0 has no weight-1 state: 1 + q^2 + q^3 + 2q^4 + ...
  const auto c0 = ising_char(IsingLabel::h0, 6).shift_exponent(Rational(1, 48));
  EXPECT_EQ(c0.coefficient(1), 0);
  EXPECT_EQ(c0.coefficient(2), 1);
  EXPECT_EQ(c0.coefficient(4), 2);
}

TEST(ModularForms, E4FromDivisorSums) {
  const auto e4 = eisenstein_e4(30);
  // E4² = E8 = 1 + 480 Σ σ7(n) q^n checks the divisor sums independently.
  const auto e8 = e4 * e4;
  for (long n = 1; n < 30; ++n) {
    EXPECT_EQ(e4.coefficient(n), Rational(240 * sigma(n, 3)));
    EXPECT_EQ(e8.coefficient(n), Rational(480 * sigma(n, 7))) << n;
  }
}

TEST(ModularForms, RamanujanTau) {
  const auto d = delta(9);
  const long tau[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480};
  for (long n = 1; n <= 8; ++n) EXPECT_EQ(d.coefficient(n), tau[n - 1]) << n;
  EXPECT_EQ(d.coefficient(0), 0);
}

TEST(ModularForms, JInvariant) {
  const auto j = j_series(5);
  EXPECT_EQ(j.leading(), std::make_pair(Rational(-1), Rational(1)));
  EXPECT_EQ(j.coefficient(0), 0);
  EXPECT_EQ(j.coefficient(1), 196884);
  EXPECT_EQ(j.coefficient(2), 21493760);
  EXPECT_EQ(j.coefficient(3), 864299970);
  EXPECT_EQ(j.coefficient(4), Rational(Integer("20245856256")));
}

TEST(ModularForms, T2AAgainstEtaQuotientOracle) {
  const long order = 20;
  const auto n = static_cast<std::size_t>(order + 2);
  // g = ∏(1 - q^{2n-1})^24, so f = q^{-1} g.
  Poly g(n, 0);
  g[0] = 1;
  for (std::size_t e = 1; e < n; e += 2) {
    Poly factor(n, 0);
    factor[0] = 1;
    factor[e] = -1;
    for (int k = 0; k < 24; ++k) g = mul(g, factor);
  }
  // 1/g by long division.
  Poly inv(n, 0);
  inv[0] = 1;
  for (std::size_t i = 1; i < n; ++i) {
    Integer s = 0;
    for (std::size_t k = 1; k <= i; ++k) s += g[k] * inv[i - k];
    inv[i] = -s;
  }
  const auto t = t2a_series(order);
  for (long m = -1; m < order - 1; ++m) {
    // f contributes g[m+1]; 4096/f = 4096 q inv contributes inv[m-1].
    Integer want = g[static_cast<std::size_t>(m + 1)];
    if (m >= 1) want += 4096 * inv[static_cast<std::size_t>(m - 1)];
    if (m == 0) want += 24;
    EXPECT_EQ(t.coefficient(m), Rational(want)) << m;
  }
  EXPECT_EQ(t.coefficient(1), 4372);
  EXPECT_EQ(t.coefficient(2), 96256);
  EXPECT_EQ(t.coefficient(3), 1240002);
}

class BabySolver : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { triple = new CharacterTriple(solve_baby_characters(50)); }
  static void TearDownTestSuite() {
    delete triple;
    triple = nullptr;
  }
  static CharacterTriple* triple;
};

CharacterTriple* BabySolver::triple = nullptr;

TEST_F(BabySolver, LeadingTerms) {
  const Rational base(-47, 48);
  EXPECT_EQ(triple->b0.leading(), std::make_pair(base, Rational(1)));
  EXPECT_EQ(triple->b0.coefficient(base + 1), 0);
  EXPECT_EQ(triple->b0.coefficient(base + 2), 96256);
  EXPECT_EQ(triple->b1.leading(), std::make_pair(Rational(base + Rational(3, 2)), Rational(4371)));
  EXPECT_EQ(triple->bT.leading(), std::make_pair(Rational(base + Rational(31, 16)), Rational(96256)));
  EXPECT_EQ(t2a_series(5).coefficient(1), 1 + triple->b1.leading().second);
}

TEST_F(BabySolver, NonnegativeIntegers) {
  EXPECT_TRUE(triple->b0.all_nonnegative_integers());
  EXPECT_TRUE(triple->b1.all_nonnegative_integers());
  EXPECT_TRUE(triple->bT.all_nonnegative_integers());
  EXPECT_GE(triple->b0.order(), 40);
}

TEST_F(BabySolver, ReassemblesJWithOracleCharacters) {
  const long k = 40;
  const auto c0 = ising_oracle(IsingLabel::h0, k), c1 = ising_oracle(IsingLabel::h12, k),
             c16 = ising_oracle(IsingLabel::h116, k);
  const auto lhs = c0 * triple->b0 + c1 * triple->b1 + c16 * triple->bT;
  EXPECT_TRUE(lhs.agrees_with(j_series(k)));
  EXPECT_GE(lhs.order(), 30);
  const auto twisted = c0 * triple->b0 + c1 * triple->b1 - c16 * triple->bT;
  EXPECT_TRUE(twisted.agrees_with(t2a_series(k)));
}

TEST_F(BabySolver, ResidualsVanish) { EXPECT_TRUE(equation_residuals(*triple, 50).all_zero()); }

TEST(BabySolverControls, WrongConstantIsInconsistent) {
  EXPECT_THROW(solve_baby_characters(50, {.t2a_constant = 25}), DerivationInconsistency);
}

TEST(BabySolverControls, SignFlippedConventionShiftsTwistedSector) {
  const auto t = solve_baby_characters(30, {.convention = SixteenthConvention::sign_flipped});
  EXPECT_EQ(t.bT.leading_exponent(), Rational(25, 24));
  EXPECT_EQ(t.b1.leading().second, 4371);
}

TEST(CodeVoaCharacter, HammingWeightEnumerator) {
  const long k = 12;
  const auto c0 = ising_oracle(IsingLabel::h0, k), c1 = ising_oracle(IsingLabel::h12, k);
  auto power = [&](const QSeries& x, unsigned n) {
    QSeries r = QSeries::constant(1, k);
    for (unsigned i = 0; i < n; ++i) r = r * x;
    return r;
  };
  const auto want = power(c0, 8) + Rational(14) * power(c0, 4) * power(c1, 4) + power(c1, 8);
  const auto got = code_voa_char(code::hamming_h8(), code::BitWord(8), k);
  EXPECT_TRUE(got.agrees_with(want));
  // H8 + e_0 has weight distribution 1, 7, 7, 1 at weights 1, 3, 5, 7.
  const auto odd = code_voa_char(code::hamming_h8(), code::BitWord::unit(8, 0), k);
  const auto want_odd = power(c0, 7) * c1 + Rational(7) * power(c0, 5) * power(c1, 3) +
                        Rational(7) * power(c0, 3) * power(c1, 5) + c0 * power(c1, 7);
  EXPECT_TRUE(odd.agrees_with(want_odd));
}

TEST(SMatrix, ExactProperties) {
  EXPECT_TRUE(SMatrix3::is_symmetric());
  EXPECT_TRUE(SMatrix3::squares_to_identity());
  const auto& s = SMatrix3::exact();
  const auto num = SMatrix3::numeric();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(num[i][j], s[i][j].to_double(), 1e-15);
  EXPECT_NEAR(num[0][2], std::numbers::sqrt2 / 2, 1e-15);
}

TEST(NumericEval, GeometricSeries) {
  QSeries s(1, 60);
  for (long n = 0; n < 60; ++n) s.set(n, 1);
  const auto v = numeric_eval(s, {0, 1});
  const double q = std::exp(-2 * std::numbers::pi);
  EXPECT_NEAR(v.value.real(), 1 / (1 - q), 1e-15);
  EXPECT_LT(v.tail_bound, 1e-100);
  EXPECT_THROW(numeric_eval(s, {0, -1}), std::domain_error);
}

TEST(STransform, IsingTriple) {
  const long k = 60;
  const std::array<QSeries, 3> ising{ising_char(IsingLabel::h0, k), ising_char(IsingLabel::h12, k),
                                     ising_char(IsingLabel::h116, k)};
  const auto r = verify_s_transform(ising, {{0, 1}, {0.3, 0.9}, {-0.2, 1.4}}, 1e-9);
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_LT(r.max_residual(), 1e-12);
}

TEST(STransform, SignFlippedIsingFails) {
  const long k = 60;
  const std::array<QSeries, 3> flipped{ising_char(IsingLabel::h0, k), ising_char(IsingLabel::h12, k),
                                       ising_char(IsingLabel::h116, k, SixteenthConvention::sign_flipped)};
  EXPECT_EQ(verify_s_transform(flipped, {{0, 1}}, 1e-6).status, Status::fail);
}

TEST(STransform, BabyTriple) {
  const auto t = solve_baby_characters(200);
  const auto r = verify_s_transform(as_array(t), {{0, 0.8}, {0, 1.0}, {0, 1.3}}, 1e-6);
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_LT(r.max_tail_bound(), 1e-7);
}

TEST(STransform, LowOrderIsInconclusive) {
  const auto t = solve_baby_characters(8);
  const auto r = verify_s_transform(as_array(t), {{0, 0.8}}, 1e-6);
  EXPECT_NE(r.status, Status::pass);
}
