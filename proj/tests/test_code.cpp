#include <gtest/gtest.h>

#include <random>
#include <set>

#include "bmvoa/code/code_io.hpp"
#include "bmvoa/code/codes.hpp"
#include "bmvoa/code/cover.hpp"

using namespace bmvoa::code;

namespace {

BitWord random_word(std::mt19937_64& rng, std::size_t n) {
  BitWord w(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1U) w.set(i);
  }
  return w;
}

LinearCode random_code(std::mt19937_64& rng, std::size_t n, std::size_t gens) {
  std::vector<BitWord> g;
  for (std::size_t i = 0; i < gens; ++i) g.push_back(random_word(rng, n));
  return LinearCode::span(n, g);
}

// Every word of Z_2^n, for brute-force oracles.
std::vector<BitWord> all_words(std::size_t n) {
  std::vector<BitWord> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    BitWord w(n);
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1U) w.set(i);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::set<BitWord> word_set(const LinearCode& c) {
  const auto w = c.words();
  return {w.begin(), w.end()};
}

}  // namespace

TEST(BitWord, StringRoundTrip) {
  const auto w = BitWord::from_string("1011000001");
  EXPECT_EQ(w.to_string(), "1011000001");
  EXPECT_EQ(w.weight(), 4U);
  EXPECT_EQ(w.lowest(), 0U);
  EXPECT_EQ(w.support(), (std::vector<std::size_t>{0, 2, 3, 9}));
}

TEST(BitWord, OperationsAcrossBlockBoundary) {
  BitWord a(130), b(130);
  a.set(1);
  a.set(64);
  a.set(129);
  b.set(64);
  b.set(100);
  EXPECT_EQ((a ^ b).support(), (std::vector<std::size_t>{1, 100, 129}));
  EXPECT_EQ((a & b).support(), (std::vector<std::size_t>{64}));
  EXPECT_EQ(a.overlap(b), 1U);
  EXPECT_EQ(a.dot(b), 1);
  EXPECT_EQ((~a).weight(), 127U);
  EXPECT_EQ(a.slice(64, 66).support(), (std::vector<std::size_t>{0, 65}));
  EXPECT_EQ(a.slice(0, 64).concat(a.slice(64, 66)), a);
}

TEST(BitWord, LengthMismatchThrows) {
  BitWord a(5), b(6);
  EXPECT_THROW(a ^= b, LengthMismatch);
  EXPECT_THROW((void)a.dot(b), LengthMismatch);
}

TEST(LinearCode, SpanIsReducedAndCanonical) {
  const auto a = LinearCode::span(4, std::vector<BitWord>{BitWord::from_string("1100"), BitWord::from_string("0110")});
  const auto b = LinearCode::span(4, std::vector<BitWord>{BitWord::from_string("1010"), BitWord::from_string("1100")});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2U);
  EXPECT_TRUE(a.contains(BitWord::from_string("1010")));
  EXPECT_FALSE(a.contains(BitWord::from_string("1000")));
}

TEST(LinearCode, DualOfDualOnRandomCodes) {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 24;
    const auto c = random_code(rng, n, rng() % (n + 2));
    const auto d = c.dual();
    EXPECT_EQ(d.dual(), c);
    EXPECT_EQ(c.dim() + d.dim(), n);
    EXPECT_TRUE(c.orthogonal_to(d));
  }
}

TEST(LinearCode, DualAgainstBruteForce) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const auto c = random_code(rng, n, rng() % (n + 1));
    std::set<BitWord> want;
    for (const auto& x : all_words(n)) {
      bool orth = true;
      for (const auto& b : c.basis()) orth = orth && x.dot(b) == 0;
      if (orth) want.insert(x);
    }
    EXPECT_EQ(word_set(c.dual()), want);
  }
}

TEST(LinearCode, WeightDistributionAgainstEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const auto c = random_code(rng, n, rng() % (n + 1));
    std::vector<std::uint64_t> want(n + 1, 0);
    c.for_each_word([&](const BitWord& w) { ++want[w.weight()]; });
    EXPECT_EQ(c.weight_distribution(), want);
  }
}

TEST(LinearCode, LargeCodeWeightDistributionUsesDual) {
  // D_natural has 2^41 words; the distribution must still sum correctly.
  const auto d = d_natural();
  const auto wd = d.weight_distribution();
  std::uint64_t total = 0;
  for (auto x : wd) total += x;
  EXPECT_EQ(total, std::uint64_t{1} << 41);
  EXPECT_EQ(wd[0], 1U);
  for (std::size_t w = 1; w < wd.size(); w += 2) EXPECT_EQ(wd[w], 0U) << "odd weight " << w;
}

TEST(LinearCode, CosetMinWeightAgainstBruteForce) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 14;
    auto c = random_code(rng, n, rng() % (n + 1));
    if (trial % 3 == 0) {
      // Force coordinates where every codeword vanishes.
      BitWord mask = random_word(rng, n);
      c = c.puncture_to(mask);
    }
    const auto w = random_word(rng, n);
    std::size_t best = n + 1;
    c.for_each_word([&](const BitWord& x) { best = std::min(best, (x ^ w).weight()); });
    EXPECT_EQ(c.coset_min_weight(w), best);
  }
}

TEST(LinearCode, ShortenAndPunctureAgainstBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const auto c = random_code(rng, n, rng() % (n + 1));
    const auto t = random_word(rng, n);
    std::set<BitWord> shortened, punctured;
    c.for_each_word([&](const BitWord& x) {
      if (x.subset_of(t)) shortened.insert(x);
      punctured.insert(x & t);
    });
    EXPECT_EQ(word_set(c.shorten_to(t)), shortened);
    EXPECT_EQ(word_set(c.puncture_to(t)), punctured);
  }
}

TEST(LinearCode, CosetDecomposition) {
  const auto full = LinearCode::full(4);
  const auto sub = LinearCode::span(4, std::vector<BitWord>{BitWord::from_string("1111")});
  const auto reps = coset_decomposition(full, sub);
  EXPECT_EQ(reps.size(), 8U);
  EXPECT_TRUE(reps.front().is_zero());
  std::set<BitWord> canon;
  for (const auto& r : reps) canon.insert(sub.reduce(r));
  EXPECT_EQ(canon.size(), 8U);
  EXPECT_EQ(coset_count_log2(full, sub), 3U);
  EXPECT_THROW(coset_decomposition(sub, full), NotSubcode);
}

TEST(LinearCode, EnumerationLimit) { EXPECT_THROW((void)d_natural().words(), EnumerationLimit); }

TEST(Codes, HammingH8) {
  const auto h = hamming_h8();
  EXPECT_EQ(h.length(), 8U);
  EXPECT_EQ(h.dim(), 4U);
  EXPECT_TRUE(h.is_doubly_even());
  EXPECT_TRUE(h.is_self_dual());
  std::vector<std::uint64_t> counts(9, 0);
  h.for_each_word([&](const BitWord& w) { ++counts[w.weight()]; });
  EXPECT_EQ(counts, (std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1}));
}

TEST(Codes, ReedMuller) {
  const auto r = rm41();
  EXPECT_EQ(r.length(), 16U);
  EXPECT_EQ(r.dim(), 5U);
  const auto wd = r.weight_distribution();
  EXPECT_EQ(wd[0], 1U);
  EXPECT_EQ(wd[8], 30U);
  EXPECT_EQ(wd[16], 1U);
}

TEST(Codes, MoonshineStructureCodes) {
  const auto s = s_natural();
  const auto d = d_natural();
  EXPECT_EQ(s.dim(), 7U);
  EXPECT_EQ(d.dim(), 41U);
  EXPECT_EQ(d, s.dual());
  EXPECT_TRUE(d.is_even());
  EXPECT_TRUE(s.contains(BitWord::ones(48)));
  // Every word of S_natural has weight divisible by 8.
  s.for_each_word([](const BitWord& w) { EXPECT_EQ(w.weight() % 8, 0U); });
}

TEST(Codes, BabyStructureCodes) {
  const auto derived = derived_codes();
  EXPECT_EQ(derived.d_flat0.dim(), 40U);
  EXPECT_EQ(derived.s_flat.dim(), 6U);
  EXPECT_EQ(derived.d_flat0.length(), 47U);
  const auto d = d_natural();
  EXPECT_TRUE(d.contains(phi_embed(1, derived.d_flat1_rep)));
  for (const auto& b : derived.d_flat0.basis()) EXPECT_TRUE(d.contains(phi_embed(0, b)));
  for (const auto& b : derived.s_flat.basis()) EXPECT_TRUE(s_natural().contains(phi_embed(0, b)));
  const auto pair = baby_pair();
  EXPECT_TRUE(pair.d.is_subcode_of(pair.s.dual()));
}

TEST(Codes, FirstCoordinateSplit) {
  const auto split = split_first_coordinate(s_natural());
  EXPECT_EQ(split.zero_part.dim(), 6U);
  EXPECT_TRUE(split.one_rep.get(0));
  for (const auto& b : split.zero_part.basis()) EXPECT_FALSE(b.get(0));
}

TEST(Cover, HammingCodeCoversItself) {
  const auto h = hamming_h8();
  const auto cover = find_hamming_cover(h, BitWord::ones(8));
  ASSERT_TRUE(cover.has_value());
  EXPECT_EQ(cover->blocks.size(), 1U);
  EXPECT_TRUE(verify_cover(h, *cover));
}

TEST(Cover, TamperedWitnessIsRejected) {
  const auto h = hamming_h8();
  auto cover = find_hamming_cover(h, BitWord::ones(8));
  ASSERT_TRUE(cover.has_value());
  cover->blocks[0].code = LinearCode::span(8, std::vector<BitWord>{BitWord::from_string("11000000")});
  std::string why;
  EXPECT_FALSE(verify_cover(h, *cover, &why));
  EXPECT_FALSE(why.empty());
}

TEST(Cover, WeightNotDivisibleByEight) {
  EXPECT_FALSE(find_hamming_cover(LinearCode::full(4), BitWord::ones(4)).has_value());
}

TEST(Cover, UncoverablePairFailsConditionOne) {
  const CodePair pair{LinearCode(8), LinearCode::span(8, std::vector<BitWord>{BitWord::ones(8)})};
  const auto r = check_condition1(pair);
  EXPECT_TRUE(r.orthogonal);
  EXPECT_FALSE(r.all_covered());
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_EQ(r.first_failure()->alpha, BitWord::ones(8));
}

TEST(Cover, ConditionOneForMoonshineAndBaby) {
  for (const auto& pair : {moonshine_pair(), baby_pair()}) {
    const auto r = check_condition1(pair, 2);
    EXPECT_TRUE(r.d_even);
    EXPECT_TRUE(r.orthogonal);
    ASSERT_TRUE(r.passed());
    EXPECT_EQ(static_cast<double>(r.entries.size()), pair.s.size());
    for (const auto& e : r.entries) {
      ASSERT_TRUE(e.cover.has_value());
      EXPECT_TRUE(verify_cover(pair.d, *e.cover)) << e.alpha.to_string();
      EXPECT_EQ(e.cover->blocks.size(), e.alpha.weight() / 8);
    }
  }
}

TEST(CodeIo, ParsesCommentsAndBlankLines) {
  const auto c = parse_code_text("# generators\n1100\n\n0011  # second\n1111\n");
  EXPECT_EQ(c.length(), 4U);
  EXPECT_EQ(c.dim(), 2U);
  const auto j = code_to_json(c);
  EXPECT_EQ(j["length"], 4);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["basis"].size(), 2U);
}

TEST(CodeIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_code_text("1100\n110\n"), std::invalid_argument);
  EXPECT_THROW(parse_code_text("1102\n"), std::invalid_argument);
  EXPECT_THROW(load_code_file("/nonexistent/code.txt"), std::exception);
}
