#include "bmvoa/code/linear_code.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace bmvoa::code {

LinearCode::LinearCode(std::size_t length) : length_(length) {}

LinearCode LinearCode::span(std::size_t length, std::span<const BitWord> generators) {
  LinearCode c(length);
  for (const auto& g : generators) {
    if (g.length() != length) {
      throw LengthMismatch("span: generator of length " + std::to_string(g.length()) +
                           " in a code of length " + std::to_string(length));
    }
    c.insert(g);
  }
  return c;
}

LinearCode LinearCode::span(std::span<const BitWord> generators) {
  if (generators.empty()) throw std::invalid_argument("span: length unknown for an empty list");
  return span(generators.front().length(), generators);
}

LinearCode LinearCode::full(std::size_t length) {
  LinearCode c(length);
  for (std::size_t i = 0; i < length; ++i) {
    c.basis_.push_back(BitWord::unit(length, i));
    c.pivots_.push_back(i);
  }
  return c;
}

double LinearCode::size() const { return std::ldexp(1.0, static_cast<int>(dim())); }

void LinearCode::insert(BitWord w) {
  w = reduce(w);
  const auto p = w.lowest();
  if (p == BitWord::npos) return;
  for (auto& row : basis_) {
    if (row.get(p)) row ^= w;
  }
  const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
}

BitWord LinearCode::reduce(const BitWord& w) const {
  if (w.length() != length_) {
    throw LengthMismatch("reduce: word of length " + std::to_string(w.length()) + " against code of length " +
                         std::to_string(length_));
  }
  BitWord r = w;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (r.get(pivots_[i])) r ^= basis_[i];
  }
  return r;
}

bool LinearCode::contains(const BitWord& w) const { return reduce(w).is_zero(); }

bool LinearCode::is_subcode_of(const LinearCode& other) const {
  if (other.length_ != length_) throw LengthMismatch("is_subcode_of: length mismatch");
  return std::all_of(basis_.begin(), basis_.end(), [&](const BitWord& b) { return other.contains(b); });
}

LinearCode LinearCode::dual() const {
  LinearCode d(length_);
  std::vector<bool> is_pivot(length_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t f = 0; f < length_; ++f) {
    if (is_pivot[f]) continue;
    BitWord v = BitWord::unit(length_, f);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (basis_[i].get(f)) v.set(pivots_[i]);
    }
    d.insert(std::move(v));
  }
  return d;
}

LinearCode LinearCode::operator+(const LinearCode& other) const {
  if (other.length_ != length_) throw LengthMismatch("code sum: length mismatch");
  LinearCode c = *this;
  for (const auto& b : other.basis_) c.insert(b);
  return c;
}

LinearCode LinearCode::intersect(const LinearCode& other) const { return (dual() + other.dual()).dual(); }

LinearCode LinearCode::shorten_to(const BitWord& support) const {
  // C ∩ F_T = (C^⊥ + F_{T^c})^⊥
  LinearCode outside = dual();
  for (auto i : (~support).support()) outside.insert(BitWord::unit(length_, i));
  return outside.dual();
}

LinearCode LinearCode::puncture_to(const BitWord& support) const {
  LinearCode c(length_);
  for (const auto& b : basis_) c.insert(b & support);
  return c;
}

BitWord LinearCode::support() const {
  BitWord s(length_);
  for (const auto& b : basis_) s |= b;
  return s;
}

bool LinearCode::is_even() const {
  return std::all_of(basis_.begin(), basis_.end(), [](const BitWord& b) { return b.weight() % 2 == 0; });
}

bool LinearCode::is_doubly_even() const {
  // wt(a+b) = wt(a) + wt(b) - 2|a∩b|, so doubly-even generators that are
  // pairwise orthogonal generate a doubly-even code and conversely.
  const bool gens = std::all_of(basis_.begin(), basis_.end(), [](const BitWord& b) { return b.weight() % 4 == 0; });
  return gens && is_self_orthogonal();
}

bool LinearCode::is_self_orthogonal() const { return orthogonal_to(*this); }

bool LinearCode::is_self_dual() const { return 2 * dim() == length_ && is_self_orthogonal(); }

bool LinearCode::orthogonal_to(const LinearCode& other) const {
  if (other.length_ != length_) throw LengthMismatch("orthogonal_to: length mismatch");
  for (const auto& a : basis_) {
    for (const auto& b : other.basis_) {
      if (a.dot(b) != 0) return false;
    }
  }
  return true;
}

void LinearCode::require_enumerable() const {
  if (dim() > kMaxEnumerationDim) {
    throw EnumerationLimit("refusing to enumerate a code of dimension " + std::to_string(dim()));
  }
}

std::vector<BitWord> LinearCode::words() const {
  std::vector<BitWord> out;
  require_enumerable();
  out.reserve(std::size_t{1} << dim());
  for_each_word([&](const BitWord& w) { out.push_back(w); });
  return out;
}

namespace {

// Binomial coefficient for n <= 64-ish; exact in __int128.
__int128 binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<__int128>(n - k + i) / static_cast<__int128>(i);
  return r;
}

}  // namespace

std::vector<std::uint64_t> LinearCode::weight_distribution() const {
  std::vector<std::uint64_t> dist(length_ + 1, 0);
  if (dim() <= kMaxEnumerationDim) {
    for_each_word([&](const BitWord& w) { ++dist[w.weight()]; });
    return dist;
  }
  const LinearCode d = dual();
  if (d.dim() > kMaxEnumerationDim || length_ > 100) {
    throw EnumerationLimit("weight_distribution: neither the code nor its dual is small enough");
  }
  // MacWilliams: A_j = |C⊥|^{-1} Σ_i B_i K_j(i).
  const auto dual_dist = d.weight_distribution();
  const std::size_t n = length_;
  for (std::size_t j = 0; j <= n; ++j) {
    __int128 acc = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (dual_dist[i] == 0) continue;
      __int128 kraw = 0;
      for (std::size_t s = 0; s <= j; ++s) {
        const __int128 term = binom(i, s) * binom(n - i, j - s);
        kraw += (s % 2 == 0) ? term : -term;
      }
      acc += static_cast<__int128>(dual_dist[i]) * kraw;
    }
    dist[j] = static_cast<std::uint64_t>(acc >> d.dim());
  }
  return dist;
}

std::size_t LinearCode::coset_min_weight(const BitWord& w) const {
  if (w.length() != length_) throw LengthMismatch("coset_min_weight: length mismatch");
  // Coordinates where every codeword vanishes contribute a fixed amount, so
  // the search runs on the support only.
  const BitWord supp = support();
  if (supp.weight() < length_) {
    const auto pos = supp.support();
    auto compress = [&](const BitWord& x) {
      BitWord y(pos.size());
      for (std::size_t i = 0; i < pos.size(); ++i) {
        if (x.get(pos[i])) y.set(i);
      }
      return y;
    };
    LinearCode inner(pos.size());
    for (const auto& b : basis_) inner.insert(compress(b));
    return (w & ~supp).weight() + (pos.empty() ? 0 : inner.coset_min_weight(compress(w)));
  }
  const std::size_t redundancy = length_ - dim();
  if (dim() <= redundancy || redundancy > 24) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const BitWord start = reduce(w);
    for_each_word([&](const BitWord& c) { best = std::min(best, (start ^ c).weight()); });
    return best;
  }
  // Syndrome decoding: breadth-first search over syndromes using columns of
  // the parity-check matrix.
  const LinearCode checks = dual();
  std::vector<std::uint32_t> column(length_, 0);
  for (std::size_t r = 0; r < checks.dim(); ++r) {
    for (auto i : checks.basis()[r].support()) column[i] |= std::uint32_t{1} << r;
  }
  std::uint32_t target = 0;
  for (std::size_t r = 0; r < checks.dim(); ++r) {
    if (checks.basis()[r].dot(w) != 0) target |= std::uint32_t{1} << r;
  }
  std::vector<std::uint8_t> dist(std::size_t{1} << checks.dim(), 0xFF);
  std::deque<std::uint32_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    if (s == target) return dist[s];
    for (auto c : column) {
      const auto t = s ^ c;
      if (dist[t] == 0xFF) {
        dist[t] = static_cast<std::uint8_t>(dist[s] + 1);
        queue.push_back(t);
      }
    }
  }
  throw std::logic_error("coset_min_weight: syndrome unreachable");
}

EvenOddSplit split_even_odd(const LinearCode& code) {
  std::vector<BitWord> even_gens;
  std::optional<BitWord> odd;
  for (const auto& b : code.basis()) {
    if (b.weight() % 2 == 0) {
      even_gens.push_back(b);
    } else if (!odd) {
      odd = b;
    } else {
      even_gens.push_back(b ^ *odd);
    }
  }
  return {LinearCode::span(code.length(), even_gens), odd};
}

namespace {

std::vector<BitWord> quotient_generators(const LinearCode& code, const LinearCode& sub) {
  if (!sub.is_subcode_of(code)) throw NotSubcode("coset decomposition: sub-code is not contained in the code");
  std::vector<BitWord> gens;
  LinearCode acc = sub;
  for (const auto& b : code.basis()) {
    if (!acc.contains(b)) {
      gens.push_back(b);
      acc = acc + LinearCode::span(code.length(), std::span<const BitWord>(&b, 1));
    }
  }
  return gens;
}

}  // namespace

std::vector<BitWord> coset_decomposition(const LinearCode& code, const LinearCode& sub) {
  const auto gens = quotient_generators(code, sub);
  if (gens.size() > LinearCode::kMaxEnumerationDim) {
    throw EnumerationLimit("coset_decomposition: 2^" + std::to_string(gens.size()) + " cosets");
  }
  std::vector<BitWord> reps;
  reps.reserve(std::size_t{1} << gens.size());
  BitWord w(code.length());
  reps.push_back(w);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << gens.size()); ++i) {
    w ^= gens[static_cast<std::size_t>(std::countr_zero(i))];
    reps.push_back(w);
  }
  return reps;
}

std::size_t coset_count_log2(const LinearCode& code, const LinearCode& sub) {
  return quotient_generators(code, sub).size();
}

}  // namespace bmvoa::code
