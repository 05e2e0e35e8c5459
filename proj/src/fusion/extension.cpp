#include "bmvoa/fusion/extension.hpp"

#include <algorithm>
#include <map>

namespace bmvoa::fusion {

GradedAction coset_action(CodePtr base) {
  return [base = std::move(base)](const BitWord& alpha, const ModuleLabel& w) {
    return fuse(CosetLabel::make(base, alpha), w);
  };
}

GradedAction family_action(LabelFamily family, FuseFn fn) {
  return [family = std::move(family), fn = std::move(fn)](const BitWord& alpha, const ModuleLabel& w) {
    return fn(family(alpha), w);
  };
}

LinearCode stabilizer(const LinearCode& d, const ModuleLabel& w, const GradedAction& action) {
  const FusionElement fixed(w);
  std::vector<BitWord> members;
  d.for_each_word([&](const BitWord& alpha) {
    if (action(alpha, w) == fixed) members.push_back(alpha);
  });
  auto code = LinearCode::span(d.length(), members);
  if (code.size() != static_cast<double>(members.size()))
    throw std::logic_error("stabilizer: fixed words do not form a subgroup; the action is not a group action");
  return code;
}

LinearCode frame_stabilizer(const LinearCode& d, const BitWord& sixteenth) { return d.shorten_to(sixteenth); }

TopWeight InducedLabel::top_weight() const {
  std::optional<TopWeight> best;
  for (const auto& [alpha, comp] : components) {
    for (const auto& [label, mult] : comp.terms()) {
      auto t = fusion::top_weight(label);
      if (!best || t.value < best->value) best = std::move(t);
    }
  }
  if (!best) throw std::logic_error("InducedLabel: no components");
  return *best;
}

InducedLabel induce(const LinearCode& s, const ModuleLabel& w, const GradedAction& action) {
  if (stabilizer(s, w, action).dim() != 0)
    throw NotStable("induce: module is fixed by a nonzero grading element; it splits instead of inducing");
  InducedLabel out{w, {}};
  s.for_each_word([&](const BitWord& alpha) { out.components.emplace_back(alpha, action(alpha, w)); });
  std::sort(out.components.begin(), out.components.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool I3Report::words_ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const I3Entry& e) { return e.word_ok; });
}

bool I3Report::weights_ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const I3Entry& e) { return e.top.cls == WeightClass::integral; });
}

I3Report hypothesis_I3_check(const LinearCode& s, const LabelFamily& labels, const FuseFn& fn) {
  I3Report report;
  const auto alphas = s.words();
  std::vector<ModuleLabel> family;
  family.reserve(alphas.size());
  for (const auto& a : alphas) {
    family.push_back(labels(a));
    report.entries.push_back({a, sixteenth_word(family.back()) == a, top_weight(family.back())});
  }
  std::map<BitWord, std::size_t> index;
  for (std::size_t i = 0; i < alphas.size(); ++i) index.emplace(alphas[i], i);

  bool first = true;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = i; j < alphas.size(); ++j) {
      const auto product = fn(family[i], family[j]);
      const auto& target = family[index.at(alphas[i] ^ alphas[j])];
      const auto mult = containment(product, target);
      ++report.pairs_checked;
      report.min_multiplicity = first ? mult : std::min(report.min_multiplicity, mult);
      report.max_multiplicity = std::max(report.max_multiplicity, mult);
      first = false;
      if (mult == 0) report.fusion_failures.push_back({alphas[i], alphas[j], 0});
      for (const auto& [term, m] : product.terms()) {
        if (const auto* f = std::get_if<FramedLabel>(&term))
          report.max_refinement_log2 = std::max(report.max_refinement_log2, refinement_count_log2(*f));
      }
    }
  }
  return report;
}

GradingReport extension_grading_check(const LinearCode& d1, const LinearCode& d2,
                                      const std::function<ModuleLabel(const BitWord&, const BitWord&)>& table,
                                      const FuseFn& fn, ParityMode mode) {
  if (mode == ParityMode::super && d2.dim() != 1)
    throw std::invalid_argument("extension_grading_check: super mode needs a Z_2 second grading");
  GradingReport report;
  struct Piece {
    BitWord a, b;
    ModuleLabel label;
  };
  std::vector<Piece> pieces;
  for (const auto& a : d1.words()) {
    for (const auto& b : d2.words()) pieces.push_back({a, b, table(a, b)});
  }
  auto name = [](const Piece& p) { return "(" + p.a.to_string() + "," + p.b.to_string() + ")"; };
  std::map<ModuleLabel, std::size_t> seen;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto [it, fresh] = seen.emplace(pieces[i].label, i);
    if (!fresh) {
      report.distinct_ok = false;
      report.failures.push_back("labels " + name(pieces[it->second]) + " and " + name(pieces[i]) + " coincide");
    }
    const auto cls = top_weight(pieces[i].label).cls;
    const auto want = (mode == ParityMode::super && !pieces[i].b.is_zero()) ? WeightClass::half_integral
                                                                             : WeightClass::integral;
    if (cls != want) {
      report.parity_ok = false;
      report.failures.push_back("top weight of " + name(pieces[i]) + " is " + std::string(fusion::name(cls)));
    }
  }
  for (const auto& x : pieces) {
    for (const auto& y : pieces) {
      const auto expected = table(x.a ^ y.a, x.b ^ y.b);
      if (fn(x.label, y.label) != FusionElement(expected)) {
        report.grading_ok = false;
        report.failures.push_back("product " + name(x) + " x " + name(y) + " breaks the grading");
      }
    }
  }
  return report;
}

}  // namespace bmvoa::fusion
