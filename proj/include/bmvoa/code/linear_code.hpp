#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bmvoa/code/bitword.hpp"

namespace bmvoa::code {

/// Raised when a sub-code argument is not contained in the ambient code.
class NotSubcode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation would enumerate more words than it allows.
class EnumerationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary linear code stored as a reduced row-echelon basis.
///
/// Pivots are the lowest set coordinate of each row and every pivot column
/// has a single nonzero entry among the rows, so two codes are equal exactly
/// when their bases are equal.
class LinearCode {
 public:
  /// Largest dimension accepted by word enumeration.
  static constexpr std::size_t kMaxEnumerationDim = 26;

  LinearCode() = default;
  /// Zero code of the given length.
  explicit LinearCode(std::size_t length);

  static LinearCode span(std::size_t length, std::span<const BitWord> generators);
  static LinearCode span(std::span<const BitWord> generators);
  static LinearCode full(std::size_t length);

  std::size_t length() const { return length_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BitWord>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// |C| as a double (exact for dim < 53).
  double size() const;

  bool contains(const BitWord& w) const;
  /// Canonical representative of w + C (zero on every pivot column).
  BitWord reduce(const BitWord& w) const;
  bool is_subcode_of(const LinearCode& other) const;

  LinearCode dual() const;
  LinearCode operator+(const LinearCode& other) const;
  LinearCode intersect(const LinearCode& other) const;
  /// Sub-code of words supported inside `support`.
  LinearCode shorten_to(const BitWord& support) const;
  /// Image under the coordinate projection onto `support` (other coordinates zeroed).
  LinearCode puncture_to(const BitWord& support) const;
  /// Union of the supports of all codewords.
  BitWord support() const;

  bool is_even() const;
  bool is_doubly_even() const;
  bool is_self_orthogonal() const;
  bool is_self_dual() const;
  /// Every basis word of `other` orthogonal to every basis word of this code.
  bool orthogonal_to(const LinearCode& other) const;

  /// Calls f(word) for every codeword in Gray-code order, starting at zero.
  template <typename F>
  void for_each_word(F&& f) const {
    require_enumerable();
    BitWord w(length_);
    f(static_cast<const BitWord&>(w));
    const std::uint64_t total = std::uint64_t{1} << dim();
    for (std::uint64_t i = 1; i < total; ++i) {
      w ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
      f(static_cast<const BitWord&>(w));
    }
  }
  std::vector<BitWord> words() const;
  /// Number of codewords of each weight 0..n.
  std::vector<std::uint64_t> weight_distribution() const;
  /// Minimum weight over the coset w + C.
  std::size_t coset_min_weight(const BitWord& w) const;

  /// Adds w to the span, keeping the basis reduced.
  void insert(BitWord w);

  friend bool operator==(const LinearCode&, const LinearCode&) = default;

 private:
  void require_enumerable() const;

  std::size_t length_ = 0;
  std::vector<BitWord> basis_;
  std::vector<std::size_t> pivots_;
};

/// Result of splitting a code into its even sub-code and the odd coset.
struct EvenOddSplit {
  LinearCode even;
  /// Representative of D \ D^(0), absent when D is even.
  std::optional<BitWord> odd_representative;
};

EvenOddSplit split_even_odd(const LinearCode& code);

/// Representatives of the cosets of `sub` in `code`, one per coset, the zero
/// word first. Throws NotSubcode if `sub` is not contained in `code`.
std::vector<BitWord> coset_decomposition(const LinearCode& code, const LinearCode& sub);
/// Number of cosets of `sub` in `code` as a power of two exponent.
std::size_t coset_count_log2(const LinearCode& code, const LinearCode& sub);

}  // namespace bmvoa::code
