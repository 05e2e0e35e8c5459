#include "bmvoa/code/codes.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmvoa::code {

namespace {

std::string repeat(const std::string& s, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += s;
  return out;
}

// Drops coordinate 0 from every word of a code whose words all vanish there.
LinearCode drop_first_coordinate(const LinearCode& c) {
  std::vector<BitWord> gens;
  for (const auto& b : c.basis()) {
    if (b.get(0)) throw std::logic_error("drop_first_coordinate: word is nonzero at coordinate 0");
    gens.push_back(b.slice(1, c.length() - 1));
  }
  return LinearCode::span(c.length() - 1, gens);
}

BitWord all_but_first(std::size_t n) {
  BitWord w = BitWord::ones(n);
  w.set(0, false);
  return w;
}

}  // namespace

LinearCode hamming_h8() {
  const std::array<BitWord, 4> gens{BitWord::from_string("11111111"), BitWord::from_string("11110000"),
                                    BitWord::from_string("11001100"), BitWord::from_string("10101010")};
  return LinearCode::span(8, gens);
}

LinearCode rm41() {
  const std::array<BitWord, 5> gens{
      BitWord::from_string(repeat("1", 16)),        BitWord::from_string(repeat("1", 8) + repeat("0", 8)),
      BitWord::from_string(repeat("11110000", 2)),  BitWord::from_string(repeat("1100", 4)),
      BitWord::from_string(repeat("10", 8)),
  };
  return LinearCode::span(16, gens);
}

LinearCode s_natural() {
  const auto ones16 = BitWord::ones(16);
  std::vector<BitWord> gens;
  for (const auto& a : rm41().words()) {
    const auto c = a ^ ones16;
    gens.push_back(a.concat(a).concat(a));
    gens.push_back(c.concat(a).concat(a));
    gens.push_back(a.concat(c).concat(a));
    gens.push_back(a.concat(a).concat(c));
  }
  return LinearCode::span(48, gens);
}

LinearCode d_natural() { return s_natural().dual(); }

BitWord phi_embed(int epsilon, const BitWord& word47) {
  BitWord head(1);
  head.set(0, epsilon != 0);
  return head.concat(word47);
}

BabyCodes derived_codes() {
  const auto dn = d_natural();
  const auto sn = s_natural();
  const auto tail = all_but_first(48);

  BabyCodes out{drop_first_coordinate(dn.shorten_to(tail)), BitWord(47),
                drop_first_coordinate(sn.shorten_to(tail))};
  bool found = false;
  for (const auto& b : dn.basis()) {
    if (b.get(0)) {
      out.d_flat1_rep = b.slice(1, 47);
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("derived_codes: D♮ vanishes on coordinate 0");
  return out;
}

FirstCoordinateSplit split_first_coordinate(const LinearCode& s) {
  FirstCoordinateSplit out{s.shorten_to(all_but_first(s.length())), BitWord(s.length())};
  for (const auto& b : s.basis()) {
    if (b.get(0)) {
      out.one_rep = b;
      break;
    }
  }
  return out;
}

CodePair moonshine_pair() { return {d_natural(), s_natural()}; }

CodePair baby_pair() {
  auto codes = derived_codes();
  return {std::move(codes.d_flat0), std::move(codes.s_flat)};
}

}  // namespace bmvoa::code
