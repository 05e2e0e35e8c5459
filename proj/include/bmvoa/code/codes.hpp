#pragma once

#include "bmvoa/code/bitword.hpp"
#include "bmvoa/code/linear_code.hpp"

namespace bmvoa::code {

/// Structure codes (D, S) of a framed VOA: D indexes the 0-word part and S
/// the 1/16-words that occur.
struct CodePair {
  LinearCode d;
  LinearCode s;
};

/// The [8,4,4] extended Hamming code on its standard four generators.
LinearCode hamming_h8();

/// First-order Reed-Muller code RM(4,1) of length 16 (dimension 5).
LinearCode rm41();

/// Length-48 code spanned by (a,a,a), (a^c,a,a), (a,a^c,a), (a,a,a^c) for
/// a in RM(4,1), where a^c = a + 1^16.
LinearCode s_natural();

/// Orthogonal complement of s_natural().
LinearCode d_natural();

/// φ_ε: Z_2^47 -> Z_2^48, prepends the bit ε.
BitWord phi_embed(int epsilon, const BitWord& word47);

/// Codes of the 47-coordinate frame obtained by removing coordinate 0.
struct BabyCodes {
  LinearCode d_flat0;       ///< {a : (0,a) in D♮}
  BitWord d_flat1_rep;      ///< some a with (1,a) in D♮
  LinearCode s_flat;        ///< {b : (0,b) in S♮}
};

BabyCodes derived_codes();

/// Split of S♮ by the first coordinate.
struct FirstCoordinateSplit {
  LinearCode zero_part;     ///< (S♮)^0, words with coordinate 0 clear
  BitWord one_rep;          ///< representative of (S♮)^1
};

FirstCoordinateSplit split_first_coordinate(const LinearCode& s);

CodePair moonshine_pair();
CodePair baby_pair();

}  // namespace bmvoa::code
