#include <gtest/gtest.h>

#include "bmvoa/code/codes.hpp"
#include "bmvoa/fusion/ring.hpp"
#include "bmvoa/fusion/verlinde.hpp"
#include "bmvoa/qseries/modular.hpp"

using namespace bmvoa;
using namespace bmvoa::fusion;

namespace {

std::vector<ModuleLabel> ising_labels() { return {std::begin(kIsingLabels), std::end(kIsingLabels)}; }

// All 32 irreducible U_H8-modules: 16 cosets and 16 twisted modules.
FusionRing hamming_ring() {
  std::vector<ModuleLabel> gens;
  for (std::size_t i = 0; i < 8; ++i) {
    gens.push_back(CosetLabel::make(hamming_code_ptr(), BitWord::unit(8, i)));
  }
  gens.push_back(HammingTwistedLabel::make(BitWord(8)));
  return FusionRing::closure(gens);
}

}  // namespace

TEST(FusionRing, IsingClosure) {
  const auto ring = FusionRing::closure({IsingLabel::h116});
  EXPECT_EQ(ring.size(), 3U);
  EXPECT_TRUE(ring.is_closed());
  EXPECT_TRUE(ring.is_commutative());
  EXPECT_TRUE(ring.is_associative());
  EXPECT_EQ(ring.unit(), ModuleLabel(IsingLabel::h0));
}

TEST(FusionRing, SimpleCurrents) {
  const auto ring = FusionRing::closure(ising_labels());
  const auto s12 = is_simple_current(IsingLabel::h12, ring);
  EXPECT_TRUE(s12.simple);
  EXPECT_EQ(s12.witness, ModuleLabel(IsingLabel::h12));
  EXPECT_FALSE(is_simple_current(IsingLabel::h116, ring).simple);
}

TEST(FusionRing, MultiplyExtendsBilinearly) {
  const auto ring = FusionRing::closure(ising_labels());
  const FusionElement x = FusionElement(IsingLabel::h116);
  const auto sq = ring.multiply(x, x);
  const auto cube = ring.multiply(sq, x);
  EXPECT_EQ(cube, FusionElement(IsingLabel::h116, 2));
}

TEST(FusionRing, HammingRingHas32SimpleCurrents) {
  const auto ring = hamming_ring();
  ASSERT_EQ(ring.size(), 32U);
  EXPECT_TRUE(ring.is_commutative());
  EXPECT_TRUE(ring.is_associative());
  EXPECT_EQ(ring.unit(), ModuleLabel(CosetLabel::make(hamming_code_ptr(), BitWord(8))));
  for (const auto& x : ring.labels()) {
    const auto r = is_simple_current(x, ring);
    EXPECT_TRUE(r.simple) << to_string(x);
    // A simple current times any label is again a single label.
    for (const auto& y : ring.labels()) EXPECT_TRUE(ring.product(x, y).as_single().has_value());
  }
}

TEST(FusionRing, CorruptedTableBreaksAssociativity) {
  auto ring = FusionRing::closure(ising_labels());
  const auto i12 = *ring.index_of(IsingLabel::h12);
  ring.set_product(i12, i12, FusionElement(IsingLabel::h12));
  EXPECT_FALSE(ring.is_associative());
}

TEST(FusionRing, OpenTableIsNotClosed) {
  const auto ring = FusionRing::table({IsingLabel::h116});
  EXPECT_FALSE(ring.is_closed());
  EXPECT_THROW(ring.is_associative(), NotClosed);
  EXPECT_THROW(is_simple_current(IsingLabel::h116, ring), NotClosed);
  EXPECT_THROW(ring.product(IsingLabel::h0, IsingLabel::h0), std::invalid_argument);
}

TEST(FusionRing, LabelLimit) {
  std::vector<ModuleLabel> gens;
  for (std::size_t i = 0; i < 6; ++i) {
    gens.push_back(CosetLabel::make(std::make_shared<const LinearCode>(6), BitWord::unit(6, i)));
  }
  EXPECT_THROW(FusionRing::closure(gens, fuse, 32), NotClosed);
  EXPECT_EQ(FusionRing::closure(gens, fuse, 64).size(), 64U);
}

TEST(FusionRing, JsonShape) {
  const auto j = FusionRing::closure(ising_labels()).to_json();
  ASSERT_EQ(j["labels"].size(), 3U);
  EXPECT_EQ(j["labels"][0], "h0");
  ASSERT_EQ(j["products"].size(), 9U);
  const auto& last = j["products"][8];
  EXPECT_EQ(last["l"], "h116");
  EXPECT_EQ(last["r"], "h116");
  ASSERT_EQ(last["result"].size(), 2U);
  EXPECT_EQ(last["result"][1]["label"], "h12");
  EXPECT_EQ(last["result"][1]["mult"], 1);
}

TEST(Verlinde, ReproducesIsingTable) {
  const auto half = Rational(1, 2);
  // Independent copy of the Ising S-matrix in the order h0, h12, h116.
  const QMatrix s{{QSqrt2(half), QSqrt2(half), QSqrt2(0, half)},
                  {QSqrt2(half), QSqrt2(half), QSqrt2(0, -half)},
                  {QSqrt2(0, half), QSqrt2(0, -half), QSqrt2(0)}};
  EXPECT_EQ(qs::SMatrix3::exact(), s);
  const auto n = verlinde(s);
  const auto ring = FusionRing::closure(ising_labels());
  EXPECT_EQ(n, structure_constants(ring, ising_labels()));
  EXPECT_EQ(n[2][2][0], QSqrt2(1));
  EXPECT_EQ(n[2][2][2], QSqrt2(0));
}

TEST(Verlinde, RejectsDegenerateInput) {
  EXPECT_THROW(verlinde(QMatrix{{QSqrt2(0)}}), std::domain_error);
  EXPECT_THROW(verlinde(QMatrix{{QSqrt2(1), QSqrt2(1)}}), std::invalid_argument);
}
