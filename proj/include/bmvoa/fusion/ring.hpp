#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "bmvoa/fusion/fusion.hpp"

namespace bmvoa::fusion {

/// Raised when a product leaves the label set of a table that must be closed.
class NotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Explicit finite fusion table. Labels are kept sorted so that dumps are
/// deterministic.
class FusionRing {
 public:
  /// Smallest label set containing `generators` and closed under `fn`.
  /// Throws NotClosed when more than `max_labels` labels appear.
  static FusionRing closure(std::vector<ModuleLabel> generators, const FuseFn& fn = fuse,
                            std::size_t max_labels = 4096);
  /// Table of all products among `labels`, without adding new labels.
  static FusionRing table(std::vector<ModuleLabel> labels, const FuseFn& fn = fuse);

  const std::vector<ModuleLabel>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::optional<std::size_t> index_of(const ModuleLabel& label) const;
  const FusionElement& product(std::size_t i, std::size_t j) const { return products_[i * labels_.size() + j]; }
  const FusionElement& product(const ModuleLabel& a, const ModuleLabel& b) const;
  /// Bilinear extension of the table; every term must be a table label.
  FusionElement multiply(const FusionElement& a, const FusionElement& b) const;

  bool is_closed() const;
  /// The label u with u ⊠ x = x for every label x, if any.
  std::optional<ModuleLabel> unit() const;
  bool is_commutative() const;
  /// (a⊠b)⊠c = a⊠(b⊠c) for all triples of labels.
  bool is_associative() const;

  nlohmann::ordered_json to_json() const;

  /// Replaces one product; used to build corrupted tables for negative tests.
  void set_product(std::size_t i, std::size_t j, FusionElement value) { products_[i * labels_.size() + j] = std::move(value); }

 private:
  std::vector<ModuleLabel> labels_;
  std::vector<FusionElement> products_;
};

struct SimpleCurrentResult {
  bool simple = false;
  std::optional<ModuleLabel> witness;
};

/// x is a simple current when some W in the ring satisfies x ⊠ W = unit
/// exactly. Throws NotClosed if the ring is not closed.
SimpleCurrentResult is_simple_current(const ModuleLabel& x, const FusionRing& ring);

nlohmann::ordered_json to_json(const FusionElement& x);

}  // namespace bmvoa::fusion
