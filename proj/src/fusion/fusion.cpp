#include "bmvoa/fusion/fusion.hpp"

#include "bmvoa/code/codes.hpp"

namespace bmvoa::fusion {

FusionElement::FusionElement(ModuleLabel label, std::uint64_t mult) { add(label, mult); }

void FusionElement::add(const ModuleLabel& label, std::uint64_t mult) {
  if (mult != 0) terms_[label] += mult;
}

FusionElement& FusionElement::operator+=(const FusionElement& other) {
  for (const auto& [label, mult] : other.terms_) add(label, mult);
  return *this;
}

std::uint64_t FusionElement::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& [label, mult] : terms_) total += mult;
  return total;
}

std::uint64_t FusionElement::multiplicity(const ModuleLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? 0 : it->second;
}

std::optional<ModuleLabel> FusionElement::as_single() const {
  if (terms_.size() != 1 || terms_.begin()->second != 1) return std::nullopt;
  return terms_.begin()->first;
}

std::string FusionElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [label, mult] : terms_) {
    if (!s.empty()) s += " + ";
    if (mult != 1) s += std::to_string(mult) + "*";
    s += fusion::to_string(label);
  }
  return s;
}

CodePtr hamming_code_ptr() {
  static const CodePtr h8 = std::make_shared<const LinearCode>(code::hamming_h8());
  return h8;
}

FusionElement ising_fuse(IsingLabel a, IsingLabel b) {
  using enum IsingLabel;
  if (a == h0) return {b};
  if (b == h0) return {a};
  if (a == h12 && b == h12) return {h0};
  if (a == h116 && b == h116) return FusionElement(h0) + FusionElement(h12);
  return {h116};
}

FusionElement frame_fuse(const FrameLabel& a, const FrameLabel& b) {
  if (a.length() != b.length()) throw code::LengthMismatch("frame_fuse: frame lengths differ");
  std::size_t doubled = 0;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a.parts[i] == IsingLabel::h116 && b.parts[i] == IsingLabel::h116) ++doubled;
  }
  if (doubled > 20) throw code::EnumerationLimit("frame_fuse: more than 2^20 output terms");
  std::vector<FrameLabel> partial{FrameLabel{}};
  for (std::size_t i = 0; i < a.length(); ++i) {
    const auto comp = ising_fuse(a.parts[i], b.parts[i]);
    std::vector<FrameLabel> next;
    next.reserve(partial.size() * comp.size());
    for (const auto& p : partial) {
      for (const auto& [label, mult] : comp.terms()) {
        next.push_back(p);
        next.back().parts.push_back(std::get<IsingLabel>(label));
      }
    }
    partial = std::move(next);
  }
  FusionElement out;
  for (auto& f : partial) out.add(std::move(f));
  return out;
}

FusionElement coset_fuse(const CosetLabel& a, const CosetLabel& b) {
  if (*a.code != *b.code) throw UnsupportedFusion("coset_fuse: labels over different codes");
  return {CosetLabel::make(a.code, a.rep ^ b.rep)};
}

FusionElement hamming_fuse(const ModuleLabel& a, const ModuleLabel& b) {
  const auto h8 = hamming_code_ptr();
  auto coset_chi = [&](const ModuleLabel& x) -> std::optional<BitWord> {
    if (const auto* c = std::get_if<CosetLabel>(&x)) {
      if (*c->code != *h8) throw UnsupportedFusion("hamming_fuse: coset label is not over H8");
      return c->rep;
    }
    return std::nullopt;
  };
  auto twisted_chi = [](const ModuleLabel& x) -> std::optional<BitWord> {
    if (const auto* t = std::get_if<HammingTwistedLabel>(&x)) return t->chi;
    return std::nullopt;
  };
  const auto ca = coset_chi(a), cb = coset_chi(b), ta = twisted_chi(a), tb = twisted_chi(b);
  if (ca && cb) return {CosetLabel::make(h8, *ca ^ *cb)};
  if (ca && tb) return {HammingTwistedLabel::make(*ca ^ *tb)};
  if (ta && cb) return {HammingTwistedLabel::make(*ta ^ *cb)};
  if (ta && tb) return {CosetLabel::make(h8, *ta ^ *tb)};
  throw UnsupportedFusion("hamming_fuse: labels are not U_H8-modules");
}

namespace {

// A framed label with no 1/16-word and no ambiguity is a coset module.
ModuleLabel normalize(FramedLabel f) {
  if (f.ambiguity.is_zero()) return CosetLabel::make(f.code, f.gamma);
  return f;
}

std::optional<FramedLabel> as_framed(const ModuleLabel& x) {
  if (const auto* f = std::get_if<FramedLabel>(&x)) return *f;
  if (const auto* c = std::get_if<CosetLabel>(&x)) {
    const BitWord zero(c->code->length());
    return FramedLabel::make(c->code, zero, c->rep, zero);
  }
  return std::nullopt;
}

}  // namespace

FusionElement framed_fuse(const ModuleLabel& a, const ModuleLabel& b) {
  const auto* fa = std::get_if<FramedLabel>(&a);
  const auto* fb = std::get_if<FramedLabel>(&b);
  const auto* ca = std::get_if<CosetLabel>(&a);
  const auto* cb = std::get_if<CosetLabel>(&b);
  if (fa && fb) {
    if (*fa->code != *fb->code) throw UnsupportedFusion("framed_fuse: labels over different codes");
    return {normalize(
        FramedLabel::make(fa->code, fa->alpha ^ fb->alpha, fa->gamma ^ fb->gamma, fa->ambiguity | fb->ambiguity))};
  }
  if (fa && cb) {
    if (*fa->code != *cb->code) throw UnsupportedFusion("framed_fuse: labels over different codes");
    return {normalize(FramedLabel::make(fa->code, fa->alpha, fa->gamma ^ cb->rep, fa->ambiguity))};
  }
  if (ca && fb) return framed_fuse(b, a);
  if (ca && cb) return coset_fuse(*ca, *cb);
  throw UnsupportedFusion("framed_fuse: labels are not framed U_D-modules");
}

FusionElement fuse(const ModuleLabel& a, const ModuleLabel& b) {
  if (const auto* ia = std::get_if<IsingLabel>(&a)) {
    if (const auto* ib = std::get_if<IsingLabel>(&b)) return ising_fuse(*ia, *ib);
  }
  if (const auto* xa = std::get_if<FrameLabel>(&a)) {
    if (const auto* xb = std::get_if<FrameLabel>(&b)) return frame_fuse(*xa, *xb);
  }
  if (std::holds_alternative<HammingTwistedLabel>(a) || std::holds_alternative<HammingTwistedLabel>(b))
    return hamming_fuse(a, b);
  if (std::holds_alternative<FramedLabel>(a) || std::holds_alternative<FramedLabel>(b)) return framed_fuse(a, b);
  if (const auto* ca = std::get_if<CosetLabel>(&a)) {
    if (const auto* cb = std::get_if<CosetLabel>(&b)) return coset_fuse(*ca, *cb);
  }
  throw UnsupportedFusion("fuse: no rule for " + to_string(a) + " x " + to_string(b));
}

std::uint64_t containment(const FusionElement& x, const ModuleLabel& label) {
  if (const auto direct = x.multiplicity(label); direct != 0) return direct;
  const auto fine = as_framed(label);
  if (!fine) return 0;
  std::uint64_t total = 0;
  for (const auto& [term, mult] : x.terms()) {
    if (const auto* coarse = std::get_if<FramedLabel>(&term); coarse && covers(*coarse, *fine)) total += mult;
  }
  return total;
}

}  // namespace bmvoa::fusion
