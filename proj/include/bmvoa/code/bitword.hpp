#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bmvoa::code {

/// Raised when two words or codes of different lengths are combined.
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A word of Z_2^n. Coordinates are 0-based; the string form lists
/// coordinate 0 first.
class BitWord {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitWord() = default;
  explicit BitWord(std::size_t length);

  static BitWord from_string(std::string_view bits);
  static BitWord ones(std::size_t length);
  static BitWord unit(std::size_t length, std::size_t index);
  static BitWord from_support(std::size_t length, std::span<const std::size_t> support);
  static BitWord from_support(std::size_t length, std::initializer_list<std::size_t> support);

  std::size_t length() const { return length_; }
  bool get(std::size_t i) const { return (blocks_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { blocks_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t weight() const;
  std::vector<std::size_t> support() const;
  bool is_zero() const;
  /// Lowest set coordinate, or npos for the zero word.
  std::size_t lowest() const;

  /// Standard inner product mod 2.
  int dot(const BitWord& other) const;
  /// Number of coordinates set in both words.
  std::size_t overlap(const BitWord& other) const;
  bool subset_of(const BitWord& other) const;

  BitWord& operator^=(const BitWord& other);
  BitWord& operator&=(const BitWord& other);
  BitWord& operator|=(const BitWord& other);
  friend BitWord operator^(BitWord a, const BitWord& b) { return a ^= b; }
  friend BitWord operator+(BitWord a, const BitWord& b) { return a ^= b; }
  friend BitWord operator&(BitWord a, const BitWord& b) { return a &= b; }
  friend BitWord operator|(BitWord a, const BitWord& b) { return a |= b; }
  /// Complement within the word length.
  BitWord operator~() const;

  /// Coordinates [offset, offset + length) as a new word.
  BitWord slice(std::size_t offset, std::size_t length) const;
  /// Concatenation of this word followed by `tail`.
  BitWord concat(const BitWord& tail) const;

  std::string to_string() const;
  std::span<const std::uint64_t> blocks() const { return blocks_; }

  friend bool operator==(const BitWord&, const BitWord&) = default;
  friend std::strong_ordering operator<=>(const BitWord& a, const BitWord& b);

 private:
  void require_same_length(const BitWord& other) const;
  void clear_tail();

  std::size_t length_ = 0;
  std::vector<std::uint64_t> blocks_;
};

struct BitWordHash {
  std::size_t operator()(const BitWord& w) const noexcept;
};

}  // namespace bmvoa::code
