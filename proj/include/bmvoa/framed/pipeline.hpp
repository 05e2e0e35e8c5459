#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "bmvoa/exact.hpp"
#include "bmvoa/framed/descriptor.hpp"
#include "bmvoa/fusion/labels.hpp"
#include "bmvoa/qseries/characters.hpp"
#include "bmvoa/qseries/modular.hpp"
#include "bmvoa/status.hpp"

namespace bmvoa::framed {

/// Length, dimension, parity properties and weight distribution.
nlohmann::ordered_json code_summary(const std::string& name, const code::LinearCode& c);

/// Condition (1) with every cover witness re-verified, then the
/// module-level conditions on a label family.
struct HypothesisReport {
  bool condition1 = false;
  bool condition3 = false;
  nlohmann::ordered_json report;
  bool passed() const { return condition1 && condition3; }
};

HypothesisReport hypothesis_report(const FramedVoaDescriptor& desc);
/// Labels come from solve_framed_family; a pair it rejects fails condition (3).
HypothesisReport hypothesis_report(const code::CodePair& pair, unsigned threads = 0);

/// Irreducible VB⁰-modules.
enum class VbLabel { vb0 = 0, vb1 = 1, vbT = 2 };
std::string_view name(VbLabel x);

using Table3 = std::array<std::array<std::array<unsigned, 3>, 3>, 3>;

/// Fusion rules of VB⁰: VB¹×VB¹ = VB⁰, VB¹×VB_T = VB_T, VB_T×VB_T = VB⁰+VB¹.
struct VbFusionRing {
  /// n[i][j][k]: multiplicity of k in i × j, indexed by VbLabel.
  Table3 n{};

  bool is_commutative() const;
  bool is_associative() const;
  bool vb0_is_unit() const;
  nlohmann::ordered_json to_json() const;
};

VbFusionRing vb_fusion_ring();

/// Ising fusion rules as a Table3 in the order h0, h12, h116.
Table3 ising_table();

struct ProductComparison {
  std::string product;
  std::string vb_result;
  std::string ising_result;
  bool ok = false;
};

/// Checks that VB⁰ ↦ h0, VB¹ ↦ h12, VB_T ↦ h116 is a bijective ring
/// homomorphism by comparing all nine products.
struct IsomorphismCertificate {
  std::array<fusion::IsingLabel, 3> image{};
  bool bijective = false;
  std::vector<ProductComparison> comparisons;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

IsomorphismCertificate ring_isomorphism_to_ising();

/// Verlinde reconstruction from the shared S-matrix against both tables.
struct VerlindeReport {
  std::size_t entries = 0;
  std::size_t ising_mismatches = 0;
  std::size_t vb_mismatches = 0;
  bool passed() const { return entries == 27 && ising_mismatches == 0 && vb_mismatches == 0; }
};

VerlindeReport verlinde_check();

/// A module of V^{⟨τ_e⟩} or of VB⁰, recorded by composition and top weight.
struct ModuleEntry {
  std::string name;
  std::string composition;
  bool sixteenth = false;
  /// ±1 for the two twisted structures on a fixed-point module, 0 otherwise.
  int twist_sign = 0;
  Rational top_weight;
  fusion::WeightClass cls = fusion::WeightClass::integral;
};

struct ModuleCountReport {
  std::vector<ModuleEntry> commutant;
  std::vector<ModuleEntry> vb0_modules;
  std::string twisted_shape;
  std::vector<std::string> documentation;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

/// Top weights come from the leading exponents of the characters.
ModuleCountReport module_count_checks(const qs::CharacterTriple& triple);

struct DualPairReport {
  qs::STransformReport ising;
  qs::STransformReport baby;
  bool residuals_zero = false;
  Status status() const;
  nlohmann::ordered_json to_json() const;
};

/// The convention selects the Ising 1/16 character and the one used to
/// check the decomposition residuals.
DualPairReport dual_pair_verification(const qs::CharacterTriple& triple, long order, const std::vector<qs::Complex>& taus,
                                      double tol,
                                      qs::SixteenthConvention conv = qs::SixteenthConvention::corrected);

std::array<qs::QSeries, 3> ising_triple(long order, qs::SixteenthConvention conv = qs::SixteenthConvention::corrected);

/// Fock graded dimensions against the characters: NS against ch_0 + ch_{1/2}
/// and Ramond against 2 ch_{1/16}, weights up to max_weight.
struct FockCharacterComparison {
  std::size_t weights_compared = 0;
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};

FockCharacterComparison compare_fock_with_characters(const Rational& max_weight);

struct VerifyAllOptions {
  long order = 200;
  double tol = 1e-6;
  std::vector<qs::Complex> taus{{0, 0.8}, {0, 1.0}, {0, 1.3}};
  unsigned threads = 0;
};

struct VerifyAllResult {
  Status status = Status::pass;
  nlohmann::ordered_json report;
};

VerifyAllResult verify_all(const VerifyAllOptions& options);

}  // namespace bmvoa::framed
