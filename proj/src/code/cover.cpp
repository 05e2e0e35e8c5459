#include "bmvoa/code/cover.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace bmvoa::code {

LinearCode HammingCover::code() const {
  LinearCode c(alpha.length());
  for (const auto& b : blocks) c = c + b.code;
  return c;
}

bool is_permuted_h8(const LinearCode& code, const BitWord& block) {
  if (block.weight() != 8 || code.dim() != 4) return false;
  if (!code.support().subset_of(block)) return false;
  return code.is_doubly_even();
}

namespace {

using Mask = std::uint64_t;

// Cover search over the support of α, with coordinates renumbered 0..w-1 so
// that blocks and weight-4 words fit in a machine word.
class CoverSearch {
 public:
  CoverSearch(const LinearCode& d, const BitWord& alpha)
      : d_(d), alpha_(alpha), coords_(alpha.support()), checks_(d.dual()) {
    for (auto c : coords_) {
      BitWord syn(checks_.dim());
      for (std::size_t r = 0; r < checks_.dim(); ++r) {
        if (checks_.basis()[r].get(c)) syn.set(r);
      }
      column_syndrome_.push_back(std::move(syn));
    }
    collect_quads();
  }

  std::optional<HammingCover> run() {
    const Mask full = coords_.size() == 64 ? ~Mask{0} : ((Mask{1} << coords_.size()) - 1);
    chosen_.clear();
    if (!search(0, full)) return std::nullopt;
    HammingCover cover{alpha_, {}};
    for (auto b : chosen_) cover.blocks.push_back({to_global(b), *feasible(b)});
    return cover;
  }

 private:
  bool in_code(Mask local) const {
    BitWord syn(checks_.dim());
    for (Mask m = local; m != 0; m &= m - 1) syn ^= column_syndrome_[static_cast<std::size_t>(std::countr_zero(m))];
    return syn.is_zero();
  }

  BitWord to_global(Mask local) const {
    BitWord w(d_.length());
    for (Mask m = local; m != 0; m &= m - 1) w.set(coords_[static_cast<std::size_t>(std::countr_zero(m))]);
    return w;
  }

  void collect_quads() {
    const std::size_t w = coords_.size();
    by_coord_.assign(w, {});
    for (std::size_t i = 0; i < w; ++i) {
      for (std::size_t j = i + 1; j < w; ++j) {
        for (std::size_t k = j + 1; k < w; ++k) {
          for (std::size_t l = k + 1; l < w; ++l) {
            const Mask q = (Mask{1} << i) | (Mask{1} << j) | (Mask{1} << k) | (Mask{1} << l);
            if (!in_code(q)) continue;
            quads_.push_back(q);
            quad_set_.insert(q);
            for (auto c : {i, j, k, l}) by_coord_[c].push_back(q);
          }
        }
      }
    }
  }

  // Returns the H8 copy inside D on block `b`, if there is one.
  const std::optional<LinearCode>& feasible(Mask b) {
    auto it = memo_.find(b);
    if (it != memo_.end()) return it->second;
    std::optional<LinearCode> result;
    std::vector<Mask> inside;
    std::array<std::size_t, 8> pos{};
    std::size_t n = 0;
    for (Mask m = b; m != 0; m &= m - 1) pos[n++] = static_cast<std::size_t>(std::countr_zero(m));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j)
        for (std::size_t k = j + 1; k < 8; ++k)
          for (std::size_t l = k + 1; l < 8; ++l) {
            const Mask q = (Mask{1} << pos[i]) | (Mask{1} << pos[j]) | (Mask{1} << pos[k]) | (Mask{1} << pos[l]);
            if (quad_set_.contains(q)) inside.push_back(q);
          }
    if (inside.size() >= 14 && in_code(b)) {
      std::vector<BitWord> gens;
      for (auto q : inside) gens.push_back(to_global(q));
      const BitWord block = to_global(b);
      auto spanned = LinearCode::span(d_.length(), gens);
      if (is_permuted_h8(spanned, block)) {
        result = std::move(spanned);
      } else {
        // The block carries a larger code; look for an H8 inside it.
        for (std::size_t x = 0; x < gens.size() && !result; ++x)
          for (std::size_t y = x + 1; y < gens.size() && !result; ++y)
            for (std::size_t z = y + 1; z < gens.size() && !result; ++z) {
              const std::array<BitWord, 4> trial{block, gens[x], gens[y], gens[z]};
              auto c = LinearCode::span(d_.length(), trial);
              if (is_permuted_h8(c, block)) result = std::move(c);
            }
      }
    }
    return memo_.emplace(b, std::move(result)).first->second;
  }

  bool search(Mask covered, Mask full) {
    if (covered == full) return true;
    const auto c = static_cast<std::size_t>(std::countr_zero(~covered & full));
    std::unordered_set<Mask> tried;
    for (auto q1 : by_coord_[c]) {
      if ((q1 & covered) != 0) continue;
      for (auto q2 : quads_) {
        if ((q2 & (covered | q1)) != 0) continue;
        const Mask b = q1 | q2;
        if (!tried.insert(b).second) continue;
        if (!feasible(b)) continue;
        chosen_.push_back(b);
        if (search(covered | b, full)) return true;
        chosen_.pop_back();
      }
    }
    return false;
  }

  const LinearCode& d_;
  BitWord alpha_;
  std::vector<std::size_t> coords_;
  LinearCode checks_;
  std::vector<BitWord> column_syndrome_;
  std::vector<Mask> quads_;
  std::unordered_set<Mask> quad_set_;
  std::vector<std::vector<Mask>> by_coord_;
  std::unordered_map<Mask, std::optional<LinearCode>> memo_;
  std::vector<Mask> chosen_;
};

}  // namespace

std::optional<HammingCover> find_hamming_cover(const LinearCode& d, const BitWord& alpha) {
  if (alpha.length() != d.length()) throw LengthMismatch("find_hamming_cover: α and D differ in length");
  const auto w = alpha.weight();
  if (w % 8 != 0) return std::nullopt;
  if (w == 0) return HammingCover{alpha, {}};
  if (w > 64) throw EnumerationLimit("find_hamming_cover: supports above 64 coordinates are not supported");
  return CoverSearch(d, alpha).run();
}

bool verify_cover(const LinearCode& d, const HammingCover& cover, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why != nullptr) *why = msg;
    return false;
  };
  BitWord seen(cover.alpha.length());
  for (const auto& blk : cover.blocks) {
    if (blk.block.overlap(seen) != 0) return fail("blocks overlap");
    seen |= blk.block;
    if (!is_permuted_h8(blk.code, blk.block)) return fail("block code is not a permuted H8");
    if (!blk.code.is_subcode_of(d)) return fail("block code is not inside D");
    if (blk.code.support() != blk.block) return fail("block code does not fill its block");
  }
  if (seen != cover.alpha) return fail("blocks do not tile Supp(α)");
  return true;
}

bool Condition1Report::all_covered() const {
  return std::all_of(entries.begin(), entries.end(), [](const CoverEntry& e) { return e.cover.has_value(); });
}

const CoverEntry* Condition1Report::first_failure() const {
  for (const auto& e : entries) {
    if (!e.cover) return &e;
  }
  return nullptr;
}

Condition1Report check_condition1(const CodePair& pair, unsigned threads) {
  if (pair.d.length() != pair.s.length()) throw LengthMismatch("check_condition1: D and S differ in length");
  Condition1Report report;
  report.d_even = pair.d.is_even();
  report.s_even = pair.s.is_even();
  report.orthogonal = pair.d.orthogonal_to(pair.s);
  const auto alphas = pair.s.words();
  report.entries.resize(alphas.size());

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(alphas.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < alphas.size(); i = next++) {
        report.entries[i] = {alphas[i], find_hamming_cover(pair.d, alphas[i])};
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return report;
}

}  // namespace bmvoa::code
