#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "bmvoa/fusion/labels.hpp"

namespace bmvoa::fusion {

/// Raised when no fusion rule is known for a pair of labels.
class UnsupportedFusion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite ℕ-linear combination of module labels. Zero multiplicities are never stored.
class FusionElement {
 public:
  using Map = std::map<ModuleLabel, std::uint64_t>;

  FusionElement() = default;
  FusionElement(ModuleLabel label, std::uint64_t mult = 1);  // NOLINT: a label is a one-term element

  void add(const ModuleLabel& label, std::uint64_t mult = 1);
  FusionElement& operator+=(const FusionElement& other);
  friend FusionElement operator+(FusionElement a, const FusionElement& b) { return a += b; }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::uint64_t total_multiplicity() const;
  std::uint64_t multiplicity(const ModuleLabel& label) const;
  /// The label when the element is a single label with multiplicity 1.
  std::optional<ModuleLabel> as_single() const;

  friend bool operator==(const FusionElement&, const FusionElement&) = default;

  std::string to_string() const;

 private:
  Map terms_;
};

using FuseFn = std::function<FusionElement(const ModuleLabel&, const ModuleLabel&)>;

FusionElement ising_fuse(IsingLabel a, IsingLabel b);

/// Componentwise product; the output has 2^k terms where k counts the
/// coordinates with h116 on both sides (k ≤ 20 accepted).
FusionElement frame_fuse(const FrameLabel& a, const FrameLabel& b);

/// U_{D+γ1} ⊠ U_{D+γ2} = U_{D+γ1+γ2}.
FusionElement coset_fuse(const CosetLabel& a, const CosetLabel& b);

/// Fusion rules of the Hamming code VOA U_{H8}: coset × coset, coset ×
/// H(1/16,χ) and H(1/16,α) × H(1/16,β).
FusionElement hamming_fuse(const ModuleLabel& a, const ModuleLabel& b);

/// Label-level fusion of U_D-modules with 1/16-words. The product of framed
/// labels with words α and β is the single label with word α+β and 0-word
/// part γ+γ', whose value at Supp(α) ∪ Supp(β) is left open. Coset labels
/// act on framed labels by shifting γ. A result with no 1/16-word and no
/// open coordinates is returned as a coset label.
FusionElement framed_fuse(const ModuleLabel& a, const ModuleLabel& b);

/// Dispatches to the rule for the label kinds involved.
FusionElement fuse(const ModuleLabel& a, const ModuleLabel& b);

/// Multiplicity with which `label` occurs in `x`. For framed and coset
/// labels a coarse framed term of `x` counts when it covers `label`.
std::uint64_t containment(const FusionElement& x, const ModuleLabel& label);

/// The H8 code VOA as a shared code pointer.
CodePtr hamming_code_ptr();

}  // namespace bmvoa::fusion
