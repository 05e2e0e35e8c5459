#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bmvoa/fusion/fusion.hpp"

namespace bmvoa::fusion {

/// α ↦ V^α ⊠ w for the graded pieces of an extension.
using GradedAction = std::function<FusionElement(const BitWord& alpha, const ModuleLabel& w)>;
/// α ↦ V^α.
using LabelFamily = std::function<ModuleLabel(const BitWord& alpha)>;

/// Raised by induce() when the module has a nontrivial stabilizer.
class NotStable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grading by cosets of `base`: V^α = U_{base+α}.
GradedAction coset_action(CodePtr base);
/// Grading by an explicit label family, fused with `fn`.
GradedAction family_action(LabelFamily family, FuseFn fn = fuse);

/// D_W = {α ∈ D : V^α ⊠ W = W}. Throws std::logic_error when the set is not
/// a subgroup, which means the oracle is not a group action.
LinearCode stabilizer(const LinearCode& d, const ModuleLabel& w, const GradedAction& action);

/// Algebraic stabilizer of a frame module under U_D: the words of D supported
/// inside the 1/16-word.
LinearCode frame_stabilizer(const LinearCode& d, const BitWord& sixteenth);

/// ⊕_{α∈S} V^α ⊠ w as a list of components.
struct InducedLabel {
  ModuleLabel base;
  std::vector<std::pair<BitWord, FusionElement>> components;

  /// Minimum top weight over all component labels.
  TopWeight top_weight() const;
};

/// Throws NotStable when stabilizer(S, w) ≠ 0.
InducedLabel induce(const LinearCode& s, const ModuleLabel& w, const GradedAction& action);

struct I3Entry {
  BitWord alpha;
  bool word_ok = false;
  TopWeight top;
};

struct I3PairFailure {
  BitWord alpha;
  BitWord beta;
  std::uint64_t multiplicity = 0;
};

/// Outcome of the module-level conditions: (3-i) 1/16-words, (3-ii) integral
/// top weights, (3-iii) V^{α+β} occurs in V^α ⊠ V^β.
struct I3Report {
  std::vector<I3Entry> entries;
  std::vector<I3PairFailure> fusion_failures;
  std::size_t pairs_checked = 0;
  std::uint64_t min_multiplicity = 0;
  std::uint64_t max_multiplicity = 0;
  /// Largest number of refined channels (log2) behind one label-level product term.
  std::size_t max_refinement_log2 = 0;

  bool words_ok() const;
  bool weights_ok() const;
  bool fusion_ok() const { return fusion_failures.empty(); }
  bool passed() const { return words_ok() && weights_ok() && fusion_ok(); }
};

I3Report hypothesis_I3_check(const LinearCode& s, const LabelFamily& labels, const FuseFn& fn = fuse);

enum class ParityMode {
  /// Every V^{(α,β)} has integral top weight.
  integral,
  /// D2 = Z_2: β = 0 integral, β = 1 half-integral (super extension).
  super,
};

struct GradingReport {
  bool grading_ok = true;
  bool distinct_ok = true;
  bool parity_ok = true;
  std::vector<std::string> failures;

  bool passed() const { return grading_ok && distinct_ok && parity_ok; }
};

/// Checks V^{(α1,β1)} ⊠ V^{(α2,β2)} = V^{(α1+α2,β1+β2)} over D1 ⊕ D2, that
/// the labels are pairwise distinct, and the top-weight parity split.
GradingReport extension_grading_check(const LinearCode& d1, const LinearCode& d2,
                                      const std::function<ModuleLabel(const BitWord&, const BitWord&)>& table,
                                      const FuseFn& fn, ParityMode mode);

}  // namespace bmvoa::fusion
