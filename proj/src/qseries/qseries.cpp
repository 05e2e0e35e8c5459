#include "bmvoa/qseries/qseries.hpp"

#include <numeric>
#include <vector>

namespace bmvoa::qs {

namespace {

long to_units(const Rational& e, long d) {
  Rational k = e * d;
  k.canonicalize();
  if (!is_integer(k)) throw SeriesError("exponent is not a multiple of 1/denom");
  if (!k.get_num().fits_slong_p()) throw SeriesError("exponent out of range");
  return k.get_num().get_si();
}

long den_of(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (!c.get_den().fits_slong_p()) throw SeriesError("denominator out of range");
  return c.get_den().get_si();
}

long lowest_key(const QSeries& s) { return s.empty() ? s.valid() : s.terms().begin()->first; }

}  // namespace

QSeries::QSeries(long denom, long valid) : denom_(denom), valid_(valid) {
  if (denom <= 0) throw SeriesError("QSeries: denominator must be positive");
}

void QSeries::set(long k, Rational c) {
  if (k >= valid_) return;
  if (sgn(c) == 0) {
    terms_.erase(k);
  } else {
    c.canonicalize();
    terms_[k] = std::move(c);
  }
}

QSeries QSeries::monomial(const Rational& c, const Rational& exponent, const Rational& order) {
  const long d = std::lcm(den_of(exponent), den_of(order));
  QSeries s(d, to_units(order, d));
  s.set(to_units(exponent, d), c);
  return s;
}

Rational QSeries::coefficient(const Rational& exponent) const {
  if (exponent >= order()) throw SeriesError("coefficient requested at or beyond the truncation order");
  Rational k = exponent * denom_;
  k.canonicalize();
  if (!is_integer(k)) return 0;
  auto it = terms_.find(k.get_num().get_si());
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Rational, Rational> QSeries::leading() const {
  if (terms_.empty()) throw SeriesError("leading term of a series with no known nonzero term");
  const auto& [k, c] = *terms_.begin();
  Rational e(k, denom_);
  e.canonicalize();
  return {e, c};
}

QSeries QSeries::rebase(long d) const {
  if (d <= 0 || d % denom_ != 0) throw SeriesError("rebase: new denominator must be a multiple of the old one");
  const long f = d / denom_;
  QSeries s(d, valid_ * f);
  for (const auto& [k, c] : terms_) s.terms_.emplace(k * f, c);
  return s;
}

QSeries QSeries::simplify() const {
  long g = std::gcd(denom_, valid_);
  for (const auto& [k, c] : terms_) g = std::gcd(g, k);
  if (g <= 1) return *this;
  QSeries s(denom_ / g, valid_ / g);
  for (const auto& [k, c] : terms_) s.terms_.emplace(k / g, c);
  return s;
}

QSeries QSeries::truncate(const Rational& order) const {
  const long d = std::lcm(denom_, den_of(order));
  QSeries s = rebase(d);
  s.valid_ = std::min(s.valid_, to_units(order, d));
  s.terms_.erase(s.terms_.lower_bound(s.valid_), s.terms_.end());
  return s;
}

QSeries QSeries::shift_exponent(const Rational& e) const {
  const long d = std::lcm(denom_, den_of(e));
  const long off = to_units(e, d);
  const QSeries base = rebase(d);
  QSeries s(d, base.valid_ + off);
  for (const auto& [k, c] : base.terms_) s.terms_.emplace(k + off, c);
  return s;
}

QSeries QSeries::half_argument() const {
  QSeries s(denom_ * 2, valid_);
  s.terms_ = terms_;
  return s;
}

QSeries QSeries::inverse() const {
  if (terms_.empty()) throw SeriesError("inverse: series has no known nonzero term");
  const long k0 = terms_.begin()->first;
  const long span = valid_ - k0;
  long g = span;
  for (const auto& [k, c] : terms_) g = std::gcd(g, k - k0);
  if (g == 0) g = 1;
  const auto n = static_cast<std::size_t>(span / g);
  std::vector<std::pair<std::size_t, Rational>> a;
  for (const auto& [k, c] : terms_) {
    if (k != k0) a.emplace_back(static_cast<std::size_t>((k - k0) / g), c);
  }
  const Rational inv0 = 1 / terms_.begin()->second;
  std::vector<Rational> b(n);
  if (n > 0) b[0] = inv0;
  for (std::size_t m = 1; m < n; ++m) {
    Rational acc = 0;
    for (const auto& [i, ai] : a) {
      if (i > m) break;
      if (sgn(b[m - i]) != 0) acc += ai * b[m - i];
    }
    b[m] = -inv0 * acc;
  }
  QSeries s(denom_, valid_ - 2 * k0);
  for (std::size_t m = 0; m < n; ++m) s.set(-k0 + static_cast<long>(m) * g, std::move(b[m]));
  return s;
}

QSeries QSeries::pow(unsigned n) const {
  if (n == 0) {
    QSeries one(denom_, valid_ - lowest_key(*this));
    one.set(0, 1);
    return one;
  }
  QSeries result = *this;
  QSeries base = *this;
  bool have = false;
  for (unsigned e = n; e != 0; e >>= 1) {
    if (e & 1U) {
      result = have ? result * base : base;
      have = true;
    }
    if (e > 1) base = base * base;
  }
  return result;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  const long d = std::lcm(denom_, o.denom_);
  if (d != denom_) *this = rebase(d);
  const QSeries other = o.denom_ == d ? o : o.rebase(d);
  valid_ = std::min(valid_, other.valid_);
  terms_.erase(terms_.lower_bound(valid_), terms_.end());
  for (const auto& [k, c] : other.terms_) {
    if (k >= valid_) break;
    set(k, terms_.contains(k) ? Rational(terms_[k] + c) : c);
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries& QSeries::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

QSeries operator*(const QSeries& x, const QSeries& y) {
  const long d = std::lcm(x.denom_, y.denom_);
  const QSeries a = x.denom_ == d ? x : x.rebase(d);
  const QSeries b = y.denom_ == d ? y : y.rebase(d);
  const long valid = std::min(a.valid_ + lowest_key(b), b.valid_ + lowest_key(a));
  std::map<long, Rational> acc;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (ka + kb >= valid) break;
      auto [it, fresh] = acc.try_emplace(ka + kb);
      it->second += ca * cb;
    }
  }
  QSeries s(d, valid);
  for (auto& [k, c] : acc) s.set(k, std::move(c));
  return s;
}

bool QSeries::agrees_with(const QSeries& o) const {
  const long d = std::lcm(denom_, o.denom_);
  const QSeries a = rebase(d), b = o.rebase(d);
  const long v = std::min(a.valid_, b.valid_);
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (true) {
    const bool ea = ia == a.terms_.end() || ia->first >= v;
    const bool eb = ib == b.terms_.end() || ib->first >= v;
    if (ea || eb) return ea && eb;
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

bool QSeries::all_nonnegative_integers() const {
  for (const auto& [k, c] : terms_) {
    if (!is_integer(c) || sgn(c) < 0) return false;
  }
  return true;
}

nlohmann::ordered_json QSeries::to_json() const {
  nlohmann::ordered_json j;
  j["denom"] = denom_;
  j["order"] = order().get_str();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [k, c] : terms_) arr.push_back(nlohmann::ordered_json::array({k, c.get_str()}));
  j["terms"] = std::move(arr);
  return j;
}

std::string QSeries::to_string(std::size_t max_terms) const {
  std::string s;
  std::size_t shown = 0;
  for (const auto& [k, c] : terms_) {
    if (shown++ == max_terms) {
      s += " + ...";
      break;
    }
    if (!s.empty()) s += " + ";
    Rational e(k, denom_);
    e.canonicalize();
    s += c.get_str() + "*q^(" + e.get_str() + ")";
  }
  if (s.empty()) s = "0";
  return s + " + O(q^(" + order().get_str() + "))";
}

}  // namespace bmvoa::qs
