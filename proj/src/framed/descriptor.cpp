#include "bmvoa/framed/descriptor.hpp"

#include <stdexcept>

#include "bmvoa/qseries/characters.hpp"

namespace bmvoa::framed {

namespace {

int q_form(const BitWord& a) {
  if (a.weight() % 8 != 0) throw std::invalid_argument("solve_framed_family: S has a weight not divisible by 8");
  return static_cast<int>((a.weight() / 8) % 2);
}

// Particular solution (free variables zero) of a system whose rows carry the
// right-hand side in the last column.
BitWord solve_system(const LinearCode& sys, std::size_t vars) {
  BitWord x(vars);
  for (std::size_t i = 0; i < sys.dim(); ++i) {
    const auto p = sys.pivots()[i];
    if (p == vars) throw std::logic_error("solve_framed_family: no consistent choice of labels");
    if (sys.basis()[i].get(vars)) x.set(p);
  }
  return x;
}

// x with ⟨x, rows[i]⟩ = rhs[i].
BitWord solve_pairings(std::size_t n, const std::vector<BitWord>& rows, const std::vector<int>& rhs) {
  LinearCode sys(n + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    BitWord r = rows[i].concat(BitWord(1));
    if (rhs[i] != 0) r.set(n);
    sys.insert(std::move(r));
  }
  return solve_system(sys, n);
}

}  // namespace

const ModuleLabel& FramedVoaDescriptor::label(const BitWord& alpha) const {
  auto it = labels.find(alpha);
  if (it == labels.end()) throw std::out_of_range("FramedVoaDescriptor: α is not in S");
  return it->second;
}

fusion::LabelFamily FramedVoaDescriptor::family() const {
  return [this](const BitWord& alpha) { return label(alpha); };
}

std::map<BitWord, ModuleLabel> solve_framed_family(const fusion::CodePtr& d, const LinearCode& s) {
  const std::size_t n = s.length();
  if (d->length() != n) throw code::LengthMismatch("solve_framed_family: D and S differ in length");
  if (!d->is_even()) throw std::invalid_argument("solve_framed_family: D is not even");
  if (!s.is_subcode_of(d->dual())) throw std::invalid_argument("solve_framed_family: S is not orthogonal to D");
  const BitWord one = BitWord::ones(n);
  const LinearCode t = d->dual();

  // P_α lives on T(α), the words of T = D^⊥ disjoint from α, and is stored
  // by its values on the reduced basis of T(α).
  const auto words = s.words();
  std::map<BitWord, std::size_t> index;
  std::vector<LinearCode> domain;
  std::vector<std::size_t> offset;
  std::size_t vars = 0;
  for (const auto& a : words) {
    index.emplace(a, domain.size());
    domain.push_back(t.shorten_to(~a));
    offset.push_back(vars);
    vars += domain.back().dim();
  }

  // Coordinates of w ∈ T(α) in the reduced basis are its bits at the pivots.
  LinearCode sys(vars + 1);
  auto add_term = [&](BitWord& row, std::size_t ai, const BitWord& w) {
    const auto& piv = domain[ai].pivots();
    for (std::size_t k = 0; k < piv.size(); ++k) {
      if (w.get(piv[k])) row.flip(offset[ai] + k);
    }
  };
  for (std::size_t ai = 0; ai < words.size(); ++ai) {
    const auto& a = words[ai];
    BitWord row(vars + 1);
    add_term(row, ai, one ^ a);
    if (q_form(a) != 0) row.set(vars);
    sys.insert(std::move(row));
    for (std::size_t bi = ai; bi < words.size(); ++bi) {
      const auto& b = words[bi];
      const std::size_t ci = index.at(a ^ b);
      const LinearCode common = t.shorten_to(~(a | b));
      for (const auto& w : common.basis()) {
        BitWord r(vars + 1);
        add_term(r, ai, w);
        add_term(r, bi, w);
        add_term(r, ci, w);
        sys.insert(std::move(r));
      }
    }
  }
  const BitWord x = solve_system(sys, vars);

  std::map<BitWord, ModuleLabel> out;
  for (std::size_t ai = 0; ai < words.size(); ++ai) {
    const auto& a = words[ai];
    const auto& basis = domain[ai].basis();
    std::vector<int> rhs;
    for (std::size_t k = 0; k < basis.size(); ++k) rhs.push_back(x.get(offset[ai] + k) ? 1 : 0);
    const BitWord gamma = basis.empty() ? BitWord(n) : solve_pairings(n, basis, rhs);
    if (a.is_zero()) {
      out.emplace(a, fusion::CosetLabel::make(d, gamma));
    } else {
      out.emplace(a, fusion::FramedLabel::make(d, a, gamma));
    }
  }
  return out;
}

FramedVoaDescriptor build_moonshine_descriptor(long char_order, unsigned threads) {
  FramedVoaDescriptor desc;
  desc.name = "moonshine";
  desc.pair = code::moonshine_pair();
  desc.d = std::make_shared<const LinearCode>(desc.pair.d);
  desc.condition1 = code::check_condition1(desc.pair, threads);
  desc.labels = solve_framed_family(desc.d, desc.pair.s);
  if (char_order > 0) desc.character = qs::j_series(char_order);
  desc.assumptions = {
      "(V^natural)^(alpha,epsilon) is nonzero for every alpha in S^natural and epsilon in {0,1}; "
      "inherited, not checkable at label level",
      "Labels V^alpha are one solution of the parity constraints; they need not be the labels of V^natural",
  };
  return desc;
}

FramedVoaDescriptor build_baby_descriptor(unsigned threads) {
  FramedVoaDescriptor desc;
  desc.name = "baby";
  desc.pair = code::baby_pair();
  desc.d = std::make_shared<const LinearCode>(desc.pair.d);
  desc.condition1 = code::check_condition1(desc.pair, threads);
  desc.labels = solve_framed_family(desc.d, desc.pair.s);
  desc.assumptions = {
      "VB is a simple SVOA and Aut(VB^0) is the baby monster (documentation only)",
      "VB^1 is induced from the coset module over D^(flat,1)",
  };
  return desc;
}

fusion::InducedLabel build_vb1_label(const FramedVoaDescriptor& baby) {
  const auto derived = code::derived_codes();
  const ModuleLabel seed = fusion::CosetLabel::make(baby.d, derived.d_flat1_rep);
  return fusion::induce(baby.pair.s, seed, fusion::family_action(baby.family()));
}

}  // namespace bmvoa::framed
