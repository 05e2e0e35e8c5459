#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bmvoa/code/bitword.hpp"
#include "bmvoa/code/linear_code.hpp"
#include "bmvoa/exact.hpp"

namespace bmvoa::fusion {

using code::BitWord;
using code::LinearCode;
using CodePtr = std::shared_ptr<const LinearCode>;

/// Irreducible L(1/2,0)-modules L(1/2,h), h ∈ {0, 1/2, 1/16}.
enum class IsingLabel : std::uint8_t { h0 = 0, h12 = 1, h116 = 2 };

inline constexpr IsingLabel kIsingLabels[] = {IsingLabel::h0, IsingLabel::h12, IsingLabel::h116};

Rational conformal_weight(IsingLabel h);
std::string_view name(IsingLabel h);

/// Irreducible module ⊗ L(1/2,h_i) of L(1/2,0)^{⊗n}.
struct FrameLabel {
  std::vector<IsingLabel> parts;

  std::size_t length() const { return parts.size(); }
  BitWord sixteenth_word() const;
  /// U^γ: h12 where γ is set, h0 elsewhere.
  static FrameLabel from_word(const BitWord& gamma);

  friend auto operator<=>(const FrameLabel&, const FrameLabel&) = default;
  friend bool operator==(const FrameLabel&, const FrameLabel&) = default;
};

/// Coset module U_{D+γ} of the code VOA U_D. `rep` is the canonical
/// representative `code->reduce(γ)`.
struct CosetLabel {
  CodePtr code;
  BitWord rep;

  static CosetLabel make(CodePtr code, const BitWord& gamma);
};

/// H(1/16,χ) for the Hamming code VOA U_{H8}; `chi` is reduced modulo H8.
struct HammingTwistedLabel {
  BitWord chi;

  static HammingTwistedLabel make(const BitWord& chi);
  friend auto operator<=>(const HammingTwistedLabel&, const HammingTwistedLabel&) = default;
  friend bool operator==(const HammingTwistedLabel&, const HammingTwistedLabel&) = default;
};

/// Irreducible U_D-module with 1/16-word α whose 0-word part (the h12
/// positions outside the 1/16 support) is γ. Only the class of γ modulo
/// D + F_U is recorded, where F_U is the space of words supported on
/// `ambiguity` ⊇ Supp(α). A label with ambiguity = Supp(α) is *refined*;
/// larger ambiguity arises from label-level fusion, where h116 × h116 leaves
/// the outcome at that coordinate open.
struct FramedLabel {
  CodePtr code;
  BitWord alpha;
  BitWord gamma;
  BitWord ambiguity;

  static FramedLabel make(CodePtr code, const BitWord& alpha, const BitWord& gamma);
  static FramedLabel make(CodePtr code, const BitWord& alpha, const BitWord& gamma, const BitWord& ambiguity);
  bool refined() const { return ambiguity == alpha; }
};

/// True when `fine` is one of the refinements represented by `coarse`.
bool covers(const FramedLabel& coarse, const FramedLabel& fine);
/// log2 of the number of refined labels that `coarse` covers.
std::size_t refinement_count_log2(const FramedLabel& coarse);

using ModuleLabel = std::variant<IsingLabel, FrameLabel, CosetLabel, HammingTwistedLabel, FramedLabel>;

std::strong_ordering operator<=>(const CosetLabel& a, const CosetLabel& b);
bool operator==(const CosetLabel& a, const CosetLabel& b);
std::strong_ordering operator<=>(const FramedLabel& a, const FramedLabel& b);
bool operator==(const FramedLabel& a, const FramedLabel& b);

std::string to_string(const ModuleLabel& label);

/// 1/16-word τ(x).
BitWord sixteenth_word(const ModuleLabel& label);

enum class WeightClass { integral, half_integral, fractional };
std::string_view name(WeightClass c);

struct TopWeight {
  Rational value;
  WeightClass cls;
};

/// Lowest conformal weight. For coset labels this is min wt(β)/2 over D+γ;
/// for framed labels wt(α)/16 plus half the minimal weight of the 0-word
/// part outside the ambiguity support.
TopWeight top_weight(const ModuleLabel& label);
WeightClass classify_weight(const Rational& w);

/// τ_i: -1 on components carrying h116 at coordinate i, +1 otherwise.
int miyamoto_tau(std::size_t i, const ModuleLabel& label);
/// σ_i on a label with no h116 at coordinate i: +1 on h0, -1 on h12.
/// Throws std::domain_error at an h116 coordinate, or when the sign is not
/// constant on the module.
int miyamoto_sigma(std::size_t i, const ModuleLabel& label);

}  // namespace bmvoa::fusion
