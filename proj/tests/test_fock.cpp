#include <gtest/gtest.h>

#include <numeric>

#include "bmvoa/fock/fock.hpp"

using namespace bmvoa;
using namespace bmvoa::fock;

namespace {

// Partitions of n into distinct parts from {first, first + step, ...}.
std::vector<std::uint64_t> distinct_partitions(std::size_t n, std::size_t first, std::size_t step) {
  std::vector<std::uint64_t> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t e = first; e <= n; e += step) {
    for (std::size_t i = n; i >= e; --i) p[i] += p[i - e];
  }
  return p;
}

std::vector<StateVector> sample_states(Sector s, const Rational& max_weight) {
  std::vector<StateVector> out;
  for (const auto& m : basis(s, max_weight)) out.emplace_back(s, m);
  return out;
}

StateVector anticommutator(int a, int b, const StateVector& v) {
  return apply_mode(a, apply_mode(b, v)) + apply_mode(b, apply_mode(a, v));
}

}  // namespace

TEST(Fock, CreationOrderSign) {
  // ψ_{-1/2} ψ_{-3/2}|0⟩ = -ψ_{-3/2} ψ_{-1/2}|0⟩.
  const auto v = apply_mode(-1, apply_mode(-3, vacuum(Sector::ns)));
  EXPECT_EQ(v, StateVector(Sector::ns, Monomial{3, 1}, QSqrt2(-1)));
  EXPECT_TRUE(apply_mode(-1, v).is_zero()) << "ψ² = 0 for creation modes";
  EXPECT_EQ(weight(Sector::ns, {3, 1}), 2);
  EXPECT_EQ(weight(Sector::ramond, {4, 0}), Rational(33, 16));
}

TEST(Fock, NsCanonicalAnticommutationRelations) {
  const auto states = sample_states(Sector::ns, 3);
  for (int a = -7; a <= 7; a += 2) {
    for (int b = -7; b <= 7; b += 2) {
      for (const auto& v : states) {
        const auto lhs = anticommutator(a, b, v);
        if (a + b == 0) {
          EXPECT_EQ(lhs, v);
        } else {
          EXPECT_TRUE(lhs.is_zero()) << a << " " << b << " on " << v.to_string();
        }
      }
    }
  }
}

TEST(Fock, RamondCanonicalAnticommutationRelations) {
  const auto states = sample_states(Sector::ramond, Rational(1, 16) + 3);
  for (int a = -6; a <= 6; a += 2) {
    for (int b = -6; b <= 6; b += 2) {
      for (const auto& v : states) {
        const auto lhs = anticommutator(a, b, v);
        if (a + b == 0) {
          EXPECT_EQ(lhs, v);
        } else {
          EXPECT_TRUE(lhs.is_zero());
        }
      }
    }
  }
  // φ_0² = 1/2.
  const auto v0 = vacuum(Sector::ramond);
  EXPECT_EQ(apply_mode(0, apply_mode(0, v0)), QSqrt2(Rational(1, 2)) * v0);
}

TEST(Fock, ModeParityIsChecked) {
  EXPECT_THROW(apply_mode(2, vacuum(Sector::ns)), std::invalid_argument);
  EXPECT_THROW(apply_mode(1, vacuum(Sector::ramond)), std::invalid_argument);
}

TEST(Fock, NsGradedDimensions) {
  const auto dims = graded_dimensions(Sector::ns, 10);
  // Weight w counts partitions of 2w into distinct odd parts.
  const auto oracle = distinct_partitions(20, 1, 2);
  ASSERT_EQ(dims.size(), 21U);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    Rational w(static_cast<long>(i), 2);
    w.canonicalize();
    EXPECT_EQ(dims[i].weight, w);
    EXPECT_EQ(dims[i].dim, oracle[i]) << "weight " << i << "/2";
  }
  EXPECT_EQ(basis(Sector::ns, 10).size(), std::accumulate(oracle.begin(), oracle.end(), std::uint64_t{0}));
}

TEST(Fock, RamondGradedDimensions) {
  const auto dims = graded_dimensions(Sector::ramond, Rational(1, 16) + 10);
  // φ_0 doubles every level; the rest are distinct positive parts.
  const auto oracle = distinct_partitions(10, 1, 1);
  ASSERT_EQ(dims.size(), 11U);
  for (std::size_t n = 0; n < dims.size(); ++n) {
    EXPECT_EQ(dims[n].weight, Rational(1, 16) + static_cast<long>(n));
    EXPECT_EQ(dims[n].dim, 2 * oracle[n]);
  }
}

TEST(Virasoro, CommutatorIsExactOnNsStates) {
  const auto samples = sample_states(Sector::ns, 3);
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) {
      const auto r = check_virasoro(m, n, samples);
      EXPECT_TRUE(r.exact_zero) << m << "," << n;
      EXPECT_EQ(r.max_residual, 0);
    }
  }
}

TEST(Virasoro, CommutatorIsExactOnRamondStates) {
  const auto samples = sample_states(Sector::ramond, Rational(1, 16) + 2);
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) EXPECT_TRUE(check_virasoro(m, n, samples).exact_zero) << m << "," << n;
  }
}

TEST(Virasoro, CentralTermOnVacuum) {
  const auto v = vacuum(Sector::ns);
  const auto lhs = virasoro_mode(2, virasoro_mode(-2, v)) - virasoro_mode(-2, virasoro_mode(2, v));
  EXPECT_EQ(lhs, QSqrt2(Rational(1, 4)) * v);
  EXPECT_TRUE(virasoro_mode(-1, v).is_zero());
  // L(-2)|0⟩ = ψ_{-3/2}ψ_{-1/2}|0⟩ up to normalisation: weight 2, one term.
  EXPECT_EQ(virasoro_mode(-2, v).terms().size(), 1U);
}

TEST(Virasoro, RamondHighestWeights) {
  for (int sign : {1, -1}) {
    const auto v = ramond_highest_weight(sign);
    EXPECT_EQ(virasoro_mode(0, v), QSqrt2(Rational(1, 16)) * v);
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(virasoro_mode(n, v).is_zero()) << n;
  }
}

TEST(Virasoro, RamondModuleSplitsIntoTwoCopies) {
  const int levels = 6;
  const auto split = ramond_split(levels);
  const auto oracle = distinct_partitions(static_cast<std::size_t>(levels), 1, 1);
  ASSERT_EQ(split.plus.size(), static_cast<std::size_t>(levels + 1));
  for (std::size_t n = 0; n <= static_cast<std::size_t>(levels); ++n) {
    EXPECT_EQ(split.plus[n].dim, oracle[n]);
    EXPECT_EQ(split.minus[n].dim, oracle[n]);
    EXPECT_EQ(split.combined[n].dim, 2 * oracle[n]) << "the two submodules intersect trivially";
  }
}

TEST(FockReport, BothSectorsPass) {
  for (auto s : {Sector::ns, Sector::ramond}) {
    const auto r = fock_report(s, 6, 3, 4);
    EXPECT_TRUE(r.passed()) << name(s);
    EXPECT_FALSE(r.checks.empty());
    const auto j = r.to_json();
    EXPECT_EQ(j["sector"], std::string(name(s)));
  }
}
