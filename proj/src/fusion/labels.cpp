#include "bmvoa/fusion/labels.hpp"

#include <stdexcept>

#include "bmvoa/code/codes.hpp"

namespace bmvoa::fusion {

namespace {

std::strong_ordering compare_codes(const CodePtr& a, const CodePtr& b) {
  if (a == b) return std::strong_ordering::equal;
  if (!a || !b) return (a ? 1 : 0) <=> (b ? 1 : 0);
  if (auto c = a->length() <=> b->length(); c != 0) return c;
  if (auto c = a->dim() <=> b->dim(); c != 0) return c;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    if (auto c = a->basis()[i] <=> b->basis()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// D + F_U restricted to the complement of U.
LinearCode outside(const LinearCode& d, const BitWord& u) { return d.puncture_to(~u); }

Rational weight_sum(const FrameLabel& f) {
  Rational s = 0;
  for (auto h : f.parts) s += conformal_weight(h);
  return s;
}

}  // namespace

Rational conformal_weight(IsingLabel h) {
  switch (h) {
    case IsingLabel::h0:
      return 0;
    case IsingLabel::h12:
      return Rational(1, 2);
    case IsingLabel::h116:
      return Rational(1, 16);
  }
  throw std::invalid_argument("conformal_weight: bad label");
}

std::string_view name(IsingLabel h) {
  switch (h) {
    case IsingLabel::h0:
      return "h0";
    case IsingLabel::h12:
      return "h12";
    case IsingLabel::h116:
      return "h116";
  }
  throw std::invalid_argument("name: bad label");
}

BitWord FrameLabel::sixteenth_word() const {
  BitWord w(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == IsingLabel::h116) w.set(i);
  }
  return w;
}

FrameLabel FrameLabel::from_word(const BitWord& gamma) {
  FrameLabel f;
  f.parts.reserve(gamma.length());
  for (std::size_t i = 0; i < gamma.length(); ++i) f.parts.push_back(gamma.get(i) ? IsingLabel::h12 : IsingLabel::h0);
  return f;
}

CosetLabel CosetLabel::make(CodePtr code, const BitWord& gamma) {
  if (!code) throw std::invalid_argument("CosetLabel: null code");
  BitWord rep = code->reduce(gamma);
  return {std::move(code), std::move(rep)};
}

HammingTwistedLabel HammingTwistedLabel::make(const BitWord& chi) {
  static const LinearCode h8 = code::hamming_h8();
  if (chi.length() != 8) throw code::LengthMismatch("HammingTwistedLabel: χ must have length 8");
  return {h8.reduce(chi)};
}

FramedLabel FramedLabel::make(CodePtr code, const BitWord& alpha, const BitWord& gamma) {
  return make(std::move(code), alpha, gamma, alpha);
}

FramedLabel FramedLabel::make(CodePtr code, const BitWord& alpha, const BitWord& gamma, const BitWord& ambiguity) {
  if (!code) throw std::invalid_argument("FramedLabel: null code");
  if (alpha.length() != code->length() || gamma.length() != code->length() || ambiguity.length() != code->length())
    throw code::LengthMismatch("FramedLabel: lengths differ from the code");
  if (!alpha.subset_of(ambiguity)) throw std::invalid_argument("FramedLabel: ambiguity must contain Supp(α)");
  BitWord g = outside(*code, ambiguity).reduce(gamma & ~ambiguity);
  return {std::move(code), alpha, std::move(g), ambiguity};
}

bool covers(const FramedLabel& coarse, const FramedLabel& fine) {
  if (compare_codes(coarse.code, fine.code) != 0) return false;
  if (coarse.alpha != fine.alpha || !fine.ambiguity.subset_of(coarse.ambiguity)) return false;
  return FramedLabel::make(coarse.code, fine.alpha, fine.gamma, coarse.ambiguity).gamma == coarse.gamma;
}

std::size_t refinement_count_log2(const FramedLabel& coarse) {
  const auto extra = coarse.ambiguity.weight() - coarse.alpha.weight();
  return extra + outside(*coarse.code, coarse.ambiguity).dim() - outside(*coarse.code, coarse.alpha).dim();
}

std::strong_ordering operator<=>(const CosetLabel& a, const CosetLabel& b) {
  if (auto c = compare_codes(a.code, b.code); c != 0) return c;
  return a.rep <=> b.rep;
}

bool operator==(const CosetLabel& a, const CosetLabel& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const FramedLabel& a, const FramedLabel& b) {
  if (auto c = compare_codes(a.code, b.code); c != 0) return c;
  if (auto c = a.alpha <=> b.alpha; c != 0) return c;
  if (auto c = a.ambiguity <=> b.ambiguity; c != 0) return c;
  return a.gamma <=> b.gamma;
}

bool operator==(const FramedLabel& a, const FramedLabel& b) { return (a <=> b) == 0; }

std::string to_string(const ModuleLabel& label) {
  struct Visitor {
    std::string operator()(IsingLabel h) const { return std::string(name(h)); }
    std::string operator()(const FrameLabel& f) const {
      std::string s = "(";
      for (std::size_t i = 0; i < f.parts.size(); ++i) {
        if (i != 0) s += ',';
        s += name(f.parts[i]);
      }
      return s + ")";
    }
    std::string operator()(const CosetLabel& c) const { return "U[D+" + c.rep.to_string() + "]"; }
    std::string operator()(const HammingTwistedLabel& h) const { return "H(1/16," + h.chi.to_string() + ")"; }
    std::string operator()(const FramedLabel& f) const {
      std::string s = "V[a=" + f.alpha.to_string() + ",g=" + f.gamma.to_string();
      if (!f.refined()) s += ",U=" + f.ambiguity.to_string();
      return s + "]";
    }
  };
  return std::visit(Visitor{}, label);
}

BitWord sixteenth_word(const ModuleLabel& label) {
  struct Visitor {
    BitWord operator()(IsingLabel h) const {
      BitWord w(1);
      if (h == IsingLabel::h116) w.set(0);
      return w;
    }
    BitWord operator()(const FrameLabel& f) const { return f.sixteenth_word(); }
    BitWord operator()(const CosetLabel& c) const { return BitWord(c.code->length()); }
    BitWord operator()(const HammingTwistedLabel&) const { return BitWord::ones(8); }
    BitWord operator()(const FramedLabel& f) const { return f.alpha; }
  };
  return std::visit(Visitor{}, label);
}

std::string_view name(WeightClass c) {
  switch (c) {
    case WeightClass::integral:
      return "integral";
    case WeightClass::half_integral:
      return "half-integral";
    case WeightClass::fractional:
      return "fractional";
  }
  throw std::invalid_argument("name: bad weight class");
}

WeightClass classify_weight(const Rational& w) {
  if (is_integer(w)) return WeightClass::integral;
  if (is_integer(2 * w)) return WeightClass::half_integral;
  return WeightClass::fractional;
}

TopWeight top_weight(const ModuleLabel& label) {
  struct Visitor {
    Rational operator()(IsingLabel h) const { return conformal_weight(h); }
    Rational operator()(const FrameLabel& f) const { return weight_sum(f); }
    Rational operator()(const CosetLabel& c) const {
      return Rational(static_cast<long>(c.code->coset_min_weight(c.rep)), 2);
    }
    Rational operator()(const HammingTwistedLabel&) const { return Rational(1, 2); }
    Rational operator()(const FramedLabel& f) const {
      const auto zero_part = outside(*f.code, f.ambiguity).coset_min_weight(f.gamma);
      return Rational(static_cast<long>(f.alpha.weight()), 16) + Rational(static_cast<long>(zero_part), 2);
    }
  };
  Rational w = std::visit(Visitor{}, label);
  w.canonicalize();
  const auto cls = classify_weight(w);
  return {std::move(w), cls};
}

int miyamoto_tau(std::size_t i, const ModuleLabel& label) {
  const BitWord w = sixteenth_word(label);
  if (i >= w.length()) throw std::out_of_range("miyamoto_tau: index outside the frame");
  return w.get(i) ? -1 : 1;
}

int miyamoto_sigma(std::size_t i, const ModuleLabel& label) {
  const BitWord w = sixteenth_word(label);
  if (i >= w.length()) throw std::out_of_range("miyamoto_sigma: index outside the frame");
  if (w.get(i)) throw std::domain_error("miyamoto_sigma: coordinate carries h116");
  struct Visitor {
    std::size_t i;
    int operator()(IsingLabel h) const { return h == IsingLabel::h12 ? -1 : 1; }
    int operator()(const FrameLabel& f) const { return f.parts[i] == IsingLabel::h12 ? -1 : 1; }
    int operator()(const CosetLabel& c) const {
      if (c.code->support().get(i)) throw std::domain_error("miyamoto_sigma: sign varies over the coset");
      return c.rep.get(i) ? -1 : 1;
    }
    int operator()(const HammingTwistedLabel&) const { throw std::domain_error("miyamoto_sigma: coordinate carries h116"); }
    int operator()(const FramedLabel& f) const {
      if (f.ambiguity.get(i) || outside(*f.code, f.ambiguity).support().get(i))
        throw std::domain_error("miyamoto_sigma: sign varies over the module");
      return f.gamma.get(i) ? -1 : 1;
    }
  };
  return std::visit(Visitor{i}, label);
}

}  // namespace bmvoa::fusion
