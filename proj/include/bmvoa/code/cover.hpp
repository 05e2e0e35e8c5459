#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bmvoa/code/bitword.hpp"
#include "bmvoa/code/codes.hpp"
#include "bmvoa/code/linear_code.hpp"

namespace bmvoa::code {

/// One summand of a Hamming cover: an 8-coordinate block and a copy of H8
/// inside D supported on it.
struct HammingBlock {
  BitWord block;
  LinearCode code;
};

/// Sub-code E^α ⊂ D that is a direct sum of permuted H8's with Supp(E^α) = Supp(α).
struct HammingCover {
  BitWord alpha;
  std::vector<HammingBlock> blocks;

  LinearCode code() const;
};

/// True when `code` restricted to the 8 coordinates of `block` is a
/// doubly even self-dual [8,4,4] code, i.e. a permuted H8.
bool is_permuted_h8(const LinearCode& code, const BitWord& block);

/// Searches for E^α ⊂ D. Returns nullopt when |Supp(α)| is not divisible by
/// 8 or when no block partition of Supp(α) exists. Worst case is exponential
/// in the number of blocks.
std::optional<HammingCover> find_hamming_cover(const LinearCode& d, const BitWord& alpha);

/// Independent check of a cover witness against D.
bool verify_cover(const LinearCode& d, const HammingCover& cover, std::string* why = nullptr);

struct CoverEntry {
  BitWord alpha;
  std::optional<HammingCover> cover;
};

/// Outcome of the structure-code condition: (1-i) D ⊂ S^⊥ and (1-ii) a
/// Hamming cover for every α in S.
struct Condition1Report {
  bool d_even = false;
  bool s_even = false;
  bool orthogonal = false;
  std::vector<CoverEntry> entries;

  bool all_covered() const;
  bool passed() const { return orthogonal && all_covered(); }
  const CoverEntry* first_failure() const;
};

Condition1Report check_condition1(const CodePair& pair, unsigned threads = 0);

}  // namespace bmvoa::code
