#include "bmvoa/fock/fock.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace bmvoa::fock {

namespace {

bool index_allowed(Sector s, int twice_k) {
  const bool odd = (twice_k % 2) != 0;
  return s == Sector::ns ? odd : !odd;
}

int sign_of(std::size_t p) { return (p % 2 == 0) ? 1 : -1; }

// Applies one mode to one monomial; returns false when the result is zero.
bool act(int twice_k, Monomial& m, QSqrt2& c) {
  if (twice_k == 0) {
    const bool has_zero = !m.empty() && m.back() == 0;
    const std::size_t positive = has_zero ? m.size() - 1 : m.size();
    c *= QSqrt2(sign_of(positive));
    if (has_zero) {
      m.pop_back();
      c *= QSqrt2(Rational(1, 2));
    } else {
      m.push_back(0);
    }
    return true;
  }
  if (twice_k < 0) {
    const int k = -twice_k;
    auto it = std::find_if(m.begin(), m.end(), [k](int x) { return x <= k; });
    if (it != m.end() && *it == k) return false;
    c *= QSqrt2(sign_of(static_cast<std::size_t>(it - m.begin())));
    m.insert(it, k);
    return true;
  }
  auto it = std::find(m.begin(), m.end(), twice_k);
  if (it == m.end()) return false;
  c *= QSqrt2(sign_of(static_cast<std::size_t>(it - m.begin())));
  m.erase(it);
  return true;
}

std::size_t rank(const std::vector<StateVector>& vectors) {
  std::map<Monomial, StateVector> pivots;
  for (auto v : vectors) {
    auto it = v.terms().begin();
    while (it != v.terms().end()) {
      const Monomial key = it->first;
      auto p = pivots.find(key);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      v -= it->second * p->second;
      it = v.terms().upper_bound(key);
    }
    if (v.is_zero()) continue;
    const Monomial lead = v.terms().begin()->first;
    const QSqrt2 inv = v.terms().begin()->second.inverse();
    v *= inv;
    pivots.emplace(lead, std::move(v));
  }
  return pivots.size();
}

// Non-increasing sequences of positive integers summing to n.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Rational> weight_grid(Sector s, const Rational& max_weight) {
  std::vector<Rational> grid;
  const Rational start = s == Sector::ns ? Rational(0) : Rational(1, 16);
  const Rational step = s == Sector::ns ? Rational(1, 2) : Rational(1);
  for (Rational w = start; w <= max_weight; w += step) grid.push_back(w);
  return grid;
}

}  // namespace

std::string_view name(Sector s) { return s == Sector::ns ? "NS" : "Ramond"; }

Rational weight(Sector s, const Monomial& m) {
  long twice = 0;
  for (int k : m) twice += k;
  Rational w(twice, 2);
  if (s == Sector::ramond) w += Rational(1, 16);
  w.canonicalize();
  return w;
}

StateVector::StateVector(Sector s, const Monomial& m, QSqrt2 c) : sector_(s) { add(m, c); }

QSqrt2 StateVector::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QSqrt2(0) : it->second;
}

void StateVector::add(const Monomial& m, const QSqrt2& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

StateVector& StateVector::operator+=(const StateVector& o) {
  if (o.sector_ != sector_) throw std::invalid_argument("StateVector: sectors differ");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& o) {
  if (o.sector_ != sector_) throw std::invalid_argument("StateVector: sectors differ");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

StateVector& StateVector::operator*=(const QSqrt2& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

double StateVector::max_abs() const {
  double best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, std::abs(c.to_double()));
  return best;
}

std::string StateVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (int k : m) {
      const bool half = (k % 2) != 0;
      s += (sector_ == Sector::ns ? " psi_-" : " phi_-") + (half ? std::to_string(k) + "/2" : std::to_string(k / 2));
    }
    s += sector_ == Sector::ns ? " |0>" : " v0";
  }
  return s;
}

StateVector vacuum(Sector s) { return StateVector(s, {}); }

StateVector ramond_highest_weight(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("ramond_highest_weight: sign must be ±1");
  StateVector v(Sector::ramond, {0});
  v.add({}, QSqrt2(0, Rational(sign, 2)));
  return v;
}

StateVector apply_mode(int twice_k, const StateVector& v) {
  if (!index_allowed(v.sector(), twice_k))
    throw std::invalid_argument(std::string("apply_mode: index lattice does not match the ") +
                                std::string(name(v.sector())) + " sector");
  StateVector out(v.sector());
  for (const auto& [m, c] : v.terms()) {
    Monomial mm = m;
    QSqrt2 cc = c;
    if (act(twice_k, mm, cc)) out.add(mm, cc);
  }
  return out;
}

StateVector virasoro_mode(int n, const StateVector& v) {
  const Sector s = v.sector();
  StateVector out(s);
  int top = 0;
  for (const auto& [m, c] : v.terms()) {
    if (!m.empty()) top = std::max(top, m.front());
  }
  const int bound = top + 2 * std::abs(n) + 2;
  const int first = s == Sector::ns ? -(bound | 1) : -(bound + (bound % 2));
  for (int r2 = first; r2 <= -first; r2 += 2) {
    const int a2 = 2 * n - r2;
    const Rational coeff(r2 - n, 4);
    if (sgn(coeff) == 0) continue;
    for (const auto& [m, c] : v.terms()) {
      Monomial mm = m;
      QSqrt2 cc = c * QSqrt2(coeff);
      if (a2 > 0 && r2 < 0) {
        cc = -cc;
        if (act(a2, mm, cc) && act(r2, mm, cc)) out.add(mm, cc);
      } else {
        if (act(r2, mm, cc) && act(a2, mm, cc)) out.add(mm, cc);
      }
    }
  }
  if (n == 0 && s == Sector::ramond) out += QSqrt2(Rational(1, 16)) * v;
  return out;
}

std::vector<Monomial> basis(Sector s, const Rational& max_weight) {
  Rational budget = max_weight;
  if (s == Sector::ramond) budget -= Rational(1, 16);
  std::vector<Monomial> out;
  if (budget < 0) return out;
  Rational twice_r = 2 * budget;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), twice_r.get_num_mpz_t(), twice_r.get_den_mpz_t());
  const long limit = fl.get_si();
  Monomial cur;
  std::function<void(int, long)> rec = [&](int below, long left) {
    out.push_back(cur);
    const int start = s == Sector::ns ? 1 : 0;
    for (int k = start; k < below && k <= left; k += 2) {
      cur.push_back(k);
      rec(k, left - k);
      cur.pop_back();
    }
  };
  rec(static_cast<int>(limit) + 2, limit);
  std::stable_sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return weight(s, a) < weight(s, b);
  });
  return out;
}

std::vector<GradedDimension> graded_dimensions(Sector s, const Rational& max_weight) {
  std::vector<GradedDimension> dims;
  for (const auto& w : weight_grid(s, max_weight)) dims.push_back({w, 0});
  for (const auto& m : basis(s, max_weight)) {
    const Rational w = weight(s, m);
    for (auto& d : dims) {
      if (d.weight == w) {
        ++d.dim;
        break;
      }
    }
  }
  return dims;
}

CommutatorResidual check_virasoro(int m, int n, const std::vector<StateVector>& samples) {
  CommutatorResidual res;
  for (const auto& v : samples) {
    StateVector r = virasoro_mode(m, virasoro_mode(n, v)) - virasoro_mode(n, virasoro_mode(m, v));
    r -= QSqrt2(m - n) * virasoro_mode(m + n, v);
    if (m + n == 0) r -= QSqrt2(Rational(static_cast<long>(m) * m * m - m, 24)) * v;
    if (!r.is_zero()) {
      res.exact_zero = false;
      res.max_residual = std::max(res.max_residual, r.max_abs());
    }
  }
  return res;
}

RamondSplit ramond_split(int max_level) {
  if (max_level < 0) throw std::invalid_argument("ramond_split: level must be nonnegative");
  RamondSplit out;
  const std::array<StateVector, 2> hw{ramond_highest_weight(1), ramond_highest_weight(-1)};
  std::array<std::map<std::vector<int>, StateVector>, 2> memo;
  // L(-λ_1) ⋯ L(-λ_k) v, memoized on the suffix of λ.
  std::function<StateVector(std::size_t, const std::vector<int>&)> descend = [&](std::size_t i,
                                                                                  const std::vector<int>& lambda) {
    if (lambda.empty()) return hw[i];
    auto it = memo[i].find(lambda);
    if (it != memo[i].end()) return it->second;
    const std::vector<int> rest(lambda.begin() + 1, lambda.end());
    StateVector v = virasoro_mode(-lambda.front(), descend(i, rest));
    memo[i].emplace(lambda, v);
    return v;
  };
  for (int level = 0; level <= max_level; ++level) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(level, level, cur, parts);
    std::vector<StateVector> plus, minus;
    for (const auto& p : parts) {
      plus.push_back(descend(0, p));
      minus.push_back(descend(1, p));
    }
    const Rational w = Rational(1, 16) + level;
    out.plus.push_back({w, rank(plus)});
    out.minus.push_back({w, rank(minus)});
    plus.insert(plus.end(), minus.begin(), minus.end());
    out.combined.push_back({w, rank(plus)});
  }
  return out;
}

bool FockReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FockCheck& c) { return c.status == Status::pass; });
}

nlohmann::ordered_json FockReport::to_json() const {
  nlohmann::ordered_json j;
  j["sector"] = name(sector);
  auto ws = nlohmann::ordered_json::array();
  for (const auto& d : weights) ws.push_back({{"w", d.weight.get_str()}, {"dim", d.dim}});
  j["weights"] = std::move(ws);
  auto cs = nlohmann::ordered_json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"status", bmvoa::name(c.status)}, {"residual", c.residual}});
  j["checks"] = std::move(cs);
  return j;
}

FockReport fock_report(Sector s, const Rational& max_weight, int mode_range, const Rational& sample_weight) {
  FockReport report{s, graded_dimensions(s, max_weight), {}};
  std::vector<StateVector> samples;
  for (const auto& m : basis(s, sample_weight)) samples.emplace_back(s, m);
  if (s == Sector::ramond) {
    samples.push_back(ramond_highest_weight(1));
    samples.push_back(ramond_highest_weight(-1));
  }

  CommutatorResidual worst;
  for (int m = -mode_range; m <= mode_range; ++m) {
    for (int n = -mode_range; n <= mode_range; ++n) {
      const auto r = check_virasoro(m, n, samples);
      worst.exact_zero = worst.exact_zero && r.exact_zero;
      worst.max_residual = std::max(worst.max_residual, r.max_residual);
    }
  }
  report.checks.push_back({"virasoro commutator c=1/2, |m|,|n|<=" + std::to_string(mode_range) +
                               ", weight<=" + sample_weight.get_str(),
                           status_of(worst.exact_zero), worst.max_residual});

  double l0_res = 0;
  bool l0_ok = true;
  for (const auto& m : basis(s, sample_weight)) {
    const StateVector v(s, m);
    const StateVector r = virasoro_mode(0, v) - QSqrt2(weight(s, m)) * v;
    l0_ok = l0_ok && r.is_zero();
    l0_res = std::max(l0_res, r.max_abs());
  }
  report.checks.push_back({"L(0) diagonal with mode-sum weights", status_of(l0_ok), l0_res});

  std::vector<std::pair<std::string, StateVector>> hws;
  if (s == Sector::ns) {
    hws.emplace_back("|0>", vacuum(s));
    hws.emplace_back("psi_-1/2|0>", apply_mode(-1, vacuum(s)));
  } else {
    hws.emplace_back("v+", ramond_highest_weight(1));
    hws.emplace_back("v-", ramond_highest_weight(-1));
  }
  for (const auto& [label, v] : hws) {
    double res = 0;
    bool ok = true;
    for (int n = 1; n <= mode_range; ++n) {
      const auto r = virasoro_mode(n, v);
      ok = ok && r.is_zero();
      res = std::max(res, r.max_abs());
    }
    report.checks.push_back({"L(n) " + label + " = 0 for 1<=n<=" + std::to_string(mode_range), status_of(ok), res});
  }
  if (s == Sector::ramond) {
    for (int sign : {1, -1}) {
      const auto v = ramond_highest_weight(sign);
      const auto r = virasoro_mode(0, v) - QSqrt2(Rational(1, 16)) * v;
      report.checks.push_back({std::string("L(0) v") + (sign > 0 ? "+" : "-") + " = (1/16) v", status_of(r.is_zero()),
                               r.max_abs()});
    }
  }
  return report;
}

}  // namespace bmvoa::fock
