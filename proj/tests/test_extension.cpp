#include <gtest/gtest.h>

#include "bmvoa/code/codes.hpp"
#include "bmvoa/framed/descriptor.hpp"
#include "bmvoa/fusion/extension.hpp"

using namespace bmvoa;
using namespace bmvoa::fusion;

namespace {

CodePtr ptr(const LinearCode& c) { return std::make_shared<const LinearCode>(c); }

LinearCode even_code(std::size_t n) {
  std::vector<BitWord> gens;
  for (std::size_t i = 1; i < n; ++i) gens.push_back(BitWord::unit(n, 0) ^ BitWord::unit(n, i));
  return LinearCode::span(n, gens);
}

// H8 ⊕ H8 on 16 coordinates.
LinearCode double_hamming() {
  const auto h8 = code::hamming_h8();
  std::vector<BitWord> gens;
  for (const auto& b : h8.basis()) {
    gens.push_back(b.concat(BitWord(8)));
    gens.push_back(BitWord(8).concat(b));
  }
  return LinearCode::span(16, gens);
}

// Graded pieces of the even code of length 8 over H8, with Z_2 carrying H(1/16, α).
struct GradingExample {
  LinearCode d1, d2;
  std::function<ModuleLabel(const BitWord&, const BitWord&)> table;

  GradingExample() : d2(LinearCode::span(1, std::vector<BitWord>{BitWord::ones(1)})) {
    // A complement of H8 in the even code.
    auto acc = code::hamming_h8();
    std::vector<BitWord> reps;
    for (std::size_t i = 1; i < 8; ++i) {
      const BitWord w = BitWord::unit(8, 0) ^ BitWord::unit(8, i);
      if (!acc.contains(w)) {
        acc.insert(w);
        reps.push_back(w);
      }
    }
    d1 = LinearCode::span(8, reps);
    table = [](const BitWord& a, const BitWord& b) -> ModuleLabel {
      if (b.is_zero()) return CosetLabel::make(hamming_code_ptr(), a);
      return HammingTwistedLabel::make(a);
    };
  }
};

}  // namespace

TEST(Stabilizer, CosetActionOnTwistedModule) {
  const ModuleLabel w = HammingTwistedLabel::make(BitWord(8));
  const auto st = stabilizer(even_code(8), w, coset_action(hamming_code_ptr()));
  EXPECT_EQ(st, code::hamming_h8());
}

TEST(Stabilizer, NonGroupActionIsDetected) {
  const ModuleLabel w = IsingLabel::h0;
  const GradedAction fake = [](const BitWord& alpha, const ModuleLabel& x) {
    return alpha.weight() <= 1 ? FusionElement(x) : FusionElement(IsingLabel::h12);
  };
  EXPECT_THROW(stabilizer(LinearCode::full(3), w, fake), std::logic_error);
}

TEST(Stabilizer, FrameStabilizerIsShortening) {
  const auto h8 = code::hamming_h8();
  BitWord block(8);
  h8.for_each_word([&](const BitWord& w) {
    if (block.is_zero() && w.weight() == 4) block = w;
  });
  const auto st = frame_stabilizer(h8, block);
  EXPECT_EQ(st.dim(), 1U);
  EXPECT_TRUE(st.contains(block));
  EXPECT_EQ(frame_stabilizer(h8, BitWord::ones(8)), h8);
}

TEST(Induce, FreeOrbit) {
  const auto zero = ptr(LinearCode(3));
  const ModuleLabel w = CosetLabel::make(zero, BitWord(3));
  const auto induced = induce(LinearCode::full(3), w, coset_action(zero));
  ASSERT_EQ(induced.components.size(), 8U);
  EXPECT_EQ(induced.top_weight().value, 0);
  for (const auto& [alpha, comp] : induced.components) {
    EXPECT_EQ(comp, FusionElement(CosetLabel::make(zero, alpha)));
  }
}

TEST(Induce, FixedModuleIsRejected) {
  const auto full = ptr(LinearCode::full(3));
  const ModuleLabel w = CosetLabel::make(full, BitWord(3));
  EXPECT_THROW(induce(LinearCode::full(3), w, coset_action(full)), NotStable);
}

TEST(FramedFamily, SolvedOverDoubleHamming) {
  const auto d = ptr(double_hamming());
  const auto s = LinearCode::span(
      16, std::vector<BitWord>{BitWord::ones(8).concat(BitWord(8)), BitWord(8).concat(BitWord::ones(8))});
  const auto labels = framed::solve_framed_family(d, s);
  ASSERT_EQ(labels.size(), 4U);
  const auto report = hypothesis_I3_check(s, [&](const BitWord& a) { return labels.at(a); });
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.pairs_checked, 10U);
  EXPECT_EQ(labels.at(BitWord(16)), ModuleLabel(CosetLabel::make(d, BitWord(16))));
}

TEST(FramedFamily, InconsistentSystemThrows) {
  const auto s = LinearCode::span(8, std::vector<BitWord>{BitWord::ones(8)});
  EXPECT_THROW(framed::solve_framed_family(ptr(LinearCode(8)), s), std::logic_error);
}

TEST(FramedFamily, RejectsWordsOutsideDualCode) {
  const auto s = LinearCode::span(8, std::vector<BitWord>{BitWord::from_string("11000000")});
  EXPECT_THROW(framed::solve_framed_family(hamming_code_ptr(), s), std::invalid_argument);
}

TEST(HypothesisI3, DetectsWrongLabels) {
  const auto d = ptr(double_hamming());
  const auto alpha = BitWord::ones(8).concat(BitWord(8));
  const auto s = LinearCode::span(16, std::vector<BitWord>{alpha});
  // γ = 0 on the complement gives top weight 1/2 at α.
  const auto report = hypothesis_I3_check(s, [&](const BitWord& a) -> ModuleLabel {
    if (a.is_zero()) return CosetLabel::make(d, a);
    return FramedLabel::make(d, a, BitWord(16));
  });
  EXPECT_TRUE(report.words_ok());
  EXPECT_FALSE(report.weights_ok());
  EXPECT_FALSE(report.passed());
}

TEST(HypothesisI3, MoonshineDescriptor) {
  const auto desc = framed::build_moonshine_descriptor();
  const auto report = hypothesis_I3_check(desc.pair.s, desc.family());
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.pairs_checked, 128U * 129U / 2U);
  EXPECT_EQ(report.min_multiplicity, 1U);
  EXPECT_EQ(report.max_multiplicity, 1U);
  EXPECT_EQ(report.max_refinement_log2, 7U);
}

TEST(HypothesisI3, BabyDescriptor) {
  const auto desc = framed::build_baby_descriptor();
  const auto report = hypothesis_I3_check(desc.pair.s, desc.family());
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.pairs_checked, 64U * 65U / 2U);
  EXPECT_EQ(report.min_multiplicity, 1U);
  EXPECT_EQ(report.max_refinement_log2, 6U);
}

TEST(GradingCheck, SuperExtensionOverHamming) {
  const GradingExample ex;
  ASSERT_EQ(ex.d1.dim(), 3U);
  const auto good = extension_grading_check(ex.d1, ex.d2, ex.table, fuse, ParityMode::super);
  EXPECT_TRUE(good.passed());
  EXPECT_TRUE(good.failures.empty());
}

TEST(GradingCheck, CorruptedFusionIsRejected) {
  const GradingExample ex;
  const ModuleLabel t0 = HammingTwistedLabel::make(BitWord(8));
  const auto wrong = CosetLabel::make(hamming_code_ptr(), ex.d1.basis().front());
  const FuseFn corrupted = [&](const ModuleLabel& x, const ModuleLabel& y) {
    if (x == t0 && y == t0) return FusionElement(wrong);
    return fuse(x, y);
  };
  const auto bad = extension_grading_check(ex.d1, ex.d2, ex.table, corrupted, ParityMode::super);
  EXPECT_FALSE(bad.grading_ok);
  EXPECT_FALSE(bad.failures.empty());
}

TEST(GradingCheck, IntegralModeRejectsHalfIntegralPieces) {
  const GradingExample ex;
  const auto r = extension_grading_check(ex.d1, ex.d2, ex.table, fuse, ParityMode::integral);
  EXPECT_TRUE(r.grading_ok);
  EXPECT_FALSE(r.parity_ok);
}

TEST(GradingCheck, CoincidingLabelsAreRejected) {
  const GradingExample ex;
  const auto table = [](const BitWord& a, const BitWord&) -> ModuleLabel {
    return CosetLabel::make(hamming_code_ptr(), a);
  };
  const auto r = extension_grading_check(ex.d1, ex.d2, table, fuse, ParityMode::integral);
  EXPECT_FALSE(r.distinct_ok);
}
