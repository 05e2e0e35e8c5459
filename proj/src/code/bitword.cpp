#include "bmvoa/code/bitword.hpp"

#include <bit>

namespace bmvoa::code {

namespace {
std::size_t block_count(std::size_t length) { return (length + 63) / 64; }
}  // namespace

BitWord::BitWord(std::size_t length) : length_(length), blocks_(block_count(length), 0) {}

BitWord BitWord::from_string(std::string_view bits) {
  BitWord w(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitWord: invalid character '" + std::string(1, bits[i]) + "'");
    }
  }
  return w;
}

BitWord BitWord::ones(std::size_t length) {
  BitWord w(length);
  for (auto& b : w.blocks_) b = ~std::uint64_t{0};
  w.clear_tail();
  return w;
}

BitWord BitWord::unit(std::size_t length, std::size_t index) {
  BitWord w(length);
  w.set(index);
  return w;
}

BitWord BitWord::from_support(std::size_t length, std::span<const std::size_t> support) {
  BitWord w(length);
  for (auto i : support) {
    if (i >= length) throw std::out_of_range("BitWord: support index out of range");
    w.set(i);
  }
  return w;
}

BitWord BitWord::from_support(std::size_t length, std::initializer_list<std::size_t> support) {
  return from_support(length, std::span<const std::size_t>(support.begin(), support.size()));
}

void BitWord::set(std::size_t i, bool value) {
  const auto mask = std::uint64_t{1} << (i & 63);
  if (value) {
    blocks_[i >> 6] |= mask;
  } else {
    blocks_[i >> 6] &= ~mask;
  }
}

std::size_t BitWord::weight() const {
  std::size_t w = 0;
  for (auto b : blocks_) w += static_cast<std::size_t>(std::popcount(b));
  return w;
}

std::vector<std::size_t> BitWord::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    auto b = blocks_[k];
    while (b != 0) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(b)));
      b &= b - 1;
    }
  }
  return out;
}

bool BitWord::is_zero() const {
  for (auto b : blocks_) {
    if (b != 0) return false;
  }
  return true;
}

std::size_t BitWord::lowest() const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(blocks_[k]));
  }
  return npos;
}

int BitWord::dot(const BitWord& other) const { return static_cast<int>(overlap(other) & 1U); }

std::size_t BitWord::overlap(const BitWord& other) const {
  require_same_length(other);
  std::size_t n = 0;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    n += static_cast<std::size_t>(std::popcount(blocks_[k] & other.blocks_[k]));
  }
  return n;
}

bool BitWord::subset_of(const BitWord& other) const {
  require_same_length(other);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if ((blocks_[k] & ~other.blocks_[k]) != 0) return false;
  }
  return true;
}

BitWord& BitWord::operator^=(const BitWord& other) {
  require_same_length(other);
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] ^= other.blocks_[k];
  return *this;
}

BitWord& BitWord::operator&=(const BitWord& other) {
  require_same_length(other);
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] &= other.blocks_[k];
  return *this;
}

BitWord& BitWord::operator|=(const BitWord& other) {
  require_same_length(other);
  for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] |= other.blocks_[k];
  return *this;
}

BitWord BitWord::operator~() const {
  BitWord w = *this;
  for (auto& b : w.blocks_) b = ~b;
  w.clear_tail();
  return w;
}

BitWord BitWord::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > length_) throw std::out_of_range("BitWord::slice out of range");
  BitWord w(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (get(offset + i)) w.set(i);
  }
  return w;
}

BitWord BitWord::concat(const BitWord& tail) const {
  BitWord w(length_ + tail.length_);
  for (auto i : support()) w.set(i);
  for (auto i : tail.support()) w.set(length_ + i);
  return w;
}

std::string BitWord::to_string() const {
  std::string s(length_, '0');
  for (auto i : support()) s[i] = '1';
  return s;
}

std::strong_ordering operator<=>(const BitWord& a, const BitWord& b) {
  if (auto c = a.length_ <=> b.length_; c != 0) return c;
  // Compare as strings: coordinate 0 is the most significant position.
  for (std::size_t i = 0; i < a.length_; ++i) {
    const bool x = a.get(i);
    const bool y = b.get(i);
    if (x != y) return x ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

void BitWord::require_same_length(const BitWord& other) const {
  if (length_ != other.length_) {
    throw LengthMismatch("BitWord length mismatch: " + std::to_string(length_) + " vs " +
                         std::to_string(other.length_));
  }
}

void BitWord::clear_tail() {
  if (const auto r = length_ & 63; r != 0 && !blocks_.empty()) {
    blocks_.back() &= (std::uint64_t{1} << r) - 1;
  }
}

std::size_t BitWordHash::operator()(const BitWord& w) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(w.length());
  for (auto b : w.blocks()) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace bmvoa::code
