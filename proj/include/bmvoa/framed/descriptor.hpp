#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bmvoa/code/codes.hpp"
#include "bmvoa/code/cover.hpp"
#include "bmvoa/fusion/extension.hpp"
#include "bmvoa/qseries/qseries.hpp"

namespace bmvoa::framed {

using code::BitWord;
using code::LinearCode;
using fusion::ModuleLabel;

/// Structure codes of a framed VOA together with a label V^α for every
/// α ∈ S and the condition-(1) report.
struct FramedVoaDescriptor {
  std::string name;
  code::CodePair pair;
  fusion::CodePtr d;
  std::map<BitWord, ModuleLabel> labels;
  code::Condition1Report condition1;
  std::optional<qs::QSeries> character;
  /// Statements taken from the literature rather than computed.
  std::vector<std::string> assumptions;

  const ModuleLabel& label(const BitWord& alpha) const;
  fusion::LabelFamily family() const;
};

/// Chooses labels V^α = (α, γ(α)) over D for every α ∈ S so that each has
/// integral top weight and V^α ⊠ V^β contains V^{α+β}.
///
/// The label (α, γ) is determined by the functional P_α = ⟨γ, ·⟩ on T(α),
/// the words of T = D^⊥ disjoint from α. The top weight is integral iff
/// P_α(1+α) ≡ wt(α)/8 (mod 2), and the fusion condition asks
/// P_α + P_β = P_{α+β} on T(α ∪ β). Both are linear in the unknown values
/// of all P_α, so the family is one solution of a single GF(2) system.
/// The map α ↦ wt(α)/8 need not be a quadratic form on S (it is not for
/// triply even S), so γ is in general not linear in α.
/// Throws std::logic_error when the system is inconsistent.
std::map<BitWord, ModuleLabel> solve_framed_family(const fusion::CodePtr& d, const LinearCode& s);

/// (D♮, S♮) with j as the character (when char_order > 0).
FramedVoaDescriptor build_moonshine_descriptor(long char_order = 0, unsigned threads = 0);

/// (D^{♭,0}, S♭) of VB⁰ on 47 frame coordinates.
FramedVoaDescriptor build_baby_descriptor(unsigned threads = 0);

/// VB¹ as the module induced over S♭ from the coset U_{D^{♭,1}}.
fusion::InducedLabel build_vb1_label(const FramedVoaDescriptor& baby);

}  // namespace bmvoa::framed
