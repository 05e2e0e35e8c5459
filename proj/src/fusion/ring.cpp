#include "bmvoa/fusion/ring.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace bmvoa::fusion {

FusionRing FusionRing::closure(std::vector<ModuleLabel> generators, const FuseFn& fn, std::size_t max_labels) {
  std::map<ModuleLabel, std::size_t> seen;
  std::vector<ModuleLabel> order;
  std::deque<std::size_t> queue;
  auto admit = [&](const ModuleLabel& l) {
    if (seen.contains(l)) return;
    if (order.size() >= max_labels) throw NotClosed("FusionRing::closure: label limit exceeded");
    seen.emplace(l, order.size());
    queue.push_back(order.size());
    order.push_back(l);
  };
  for (const auto& g : generators) admit(g);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j <= i; ++j) {
      const auto left = fn(order[i], order[j]);
      const auto right = fn(order[j], order[i]);
      for (const auto& [l, m] : left.terms()) admit(l);
      for (const auto& [l, m] : right.terms()) admit(l);
    }
  }
  return table(std::move(order), fn);
}

FusionRing FusionRing::table(std::vector<ModuleLabel> labels, const FuseFn& fn) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  FusionRing r;
  r.labels_ = std::move(labels);
  r.products_.reserve(r.labels_.size() * r.labels_.size());
  for (const auto& a : r.labels_) {
    for (const auto& b : r.labels_) r.products_.push_back(fn(a, b));
  }
  return r;
}

std::optional<std::size_t> FusionRing::index_of(const ModuleLabel& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

const FusionElement& FusionRing::product(const ModuleLabel& a, const ModuleLabel& b) const {
  const auto i = index_of(a), j = index_of(b);
  if (!i || !j) throw std::invalid_argument("FusionRing::product: label not in table");
  return product(*i, *j);
}

FusionElement FusionRing::multiply(const FusionElement& a, const FusionElement& b) const {
  FusionElement out;
  for (const auto& [la, ma] : a.terms()) {
    for (const auto& [lb, mb] : b.terms()) {
      for (const auto& [l, m] : product(la, lb).terms()) out.add(l, ma * mb * m);
    }
  }
  return out;
}

bool FusionRing::is_closed() const {
  return std::all_of(products_.begin(), products_.end(), [&](const FusionElement& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return index_of(t.first).has_value(); });
  });
}

std::optional<ModuleLabel> FusionRing::unit() const {
  for (std::size_t u = 0; u < labels_.size(); ++u) {
    bool ok = true;
    for (std::size_t x = 0; x < labels_.size() && ok; ++x) {
      ok = product(u, x) == FusionElement(labels_[x]) && product(x, u) == FusionElement(labels_[x]);
    }
    if (ok) return labels_[u];
  }
  return std::nullopt;
}

bool FusionRing::is_commutative() const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (product(i, j) != product(j, i)) return false;
    }
  }
  return true;
}

bool FusionRing::is_associative() const {
  if (!is_closed()) throw NotClosed("FusionRing::is_associative: table is not closed");
  for (std::size_t a = 0; a < labels_.size(); ++a) {
    for (std::size_t b = 0; b < labels_.size(); ++b) {
      for (std::size_t c = 0; c < labels_.size(); ++c) {
        if (multiply(product(a, b), labels_[c]) != multiply(labels_[a], product(b, c))) return false;
      }
    }
  }
  return true;
}

nlohmann::ordered_json to_json(const FusionElement& x) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [label, mult] : x.terms()) {
    nlohmann::ordered_json t;
    t["label"] = to_string(label);
    t["mult"] = mult;
    arr.push_back(std::move(t));
  }
  return arr;
}

nlohmann::ordered_json FusionRing::to_json() const {
  nlohmann::ordered_json j;
  auto names = nlohmann::ordered_json::array();
  for (const auto& l : labels_) names.push_back(to_string(l));
  j["labels"] = std::move(names);
  auto prods = nlohmann::ordered_json::array();
  for (std::size_t a = 0; a < labels_.size(); ++a) {
    for (std::size_t b = 0; b < labels_.size(); ++b) {
      nlohmann::ordered_json p;
      p["l"] = to_string(labels_[a]);
      p["r"] = to_string(labels_[b]);
      p["result"] = fusion::to_json(product(a, b));
      prods.push_back(std::move(p));
    }
  }
  j["products"] = std::move(prods);
  return j;
}

SimpleCurrentResult is_simple_current(const ModuleLabel& x, const FusionRing& ring) {
  if (!ring.is_closed()) throw NotClosed("is_simple_current: ring is not closed under fusion");
  const auto unit = ring.unit();
  if (!unit) throw std::invalid_argument("is_simple_current: ring has no unit");
  const auto i = ring.index_of(x);
  if (!i) throw std::invalid_argument("is_simple_current: label not in ring");
  for (std::size_t w = 0; w < ring.size(); ++w) {
    if (ring.product(*i, w) == FusionElement(*unit)) return {true, ring.labels()[w]};
  }
  return {false, std::nullopt};
}

}  // namespace bmvoa::fusion
