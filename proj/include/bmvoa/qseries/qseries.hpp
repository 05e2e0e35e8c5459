#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "bmvoa/exact.hpp"

namespace bmvoa::qs {

/// Raised when a series operation is undefined (e.g. inverting a series
/// whose known part is zero).
class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated formal series Σ c_k q^{k/d}. Coefficients are exact for
/// exponents below order(); nothing is known beyond it.
class QSeries {
 public:
  using Terms = std::map<long, Rational>;

  /// Zero series with denominator d, valid for k < valid.
  QSeries(long denom, long valid);
  QSeries() : QSeries(1, 0) {}

  /// c·q^e + O(q^order).
  static QSeries monomial(const Rational& c, const Rational& exponent, const Rational& order);
  static QSeries constant(const Rational& c, const Rational& order) { return monomial(c, 0, order); }
  /// Σ coeffs[i] q^i + O(q^order), integer exponents.
  template <typename Range>
  static QSeries polynomial(const Range& coeffs, long order) {
    QSeries s(1, order);
    long i = 0;
    for (const auto& c : coeffs) s.set(i++, Rational(c));
    return s;
  }

  long denom() const { return denom_; }
  /// Validity bound in units of 1/denom.
  long valid() const { return valid_; }
  /// Validity bound as an exponent.
  Rational order() const {
    Rational r(valid_, denom_);
    r.canonicalize();
    return r;
  }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of q^e. Throws SeriesError when e is at or beyond order().
  Rational coefficient(const Rational& exponent) const;
  /// Lowest exponent with a nonzero coefficient and its coefficient.
  std::pair<Rational, Rational> leading() const;
  Rational leading_exponent() const { return leading().first; }

  /// Same series over denominator d (a multiple of denom()).
  QSeries rebase(long d) const;
  /// Smallest denominator that represents the series exactly.
  QSeries simplify() const;
  /// Drops all terms at exponents ≥ order and lowers the validity bound.
  QSeries truncate(const Rational& order) const;
  /// q^e · s.
  QSeries shift_exponent(const Rational& e) const;
  /// s(τ/2): every exponent halves.
  QSeries half_argument() const;
  QSeries inverse() const;
  QSeries pow(unsigned n) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }
  QSeries operator-() const { return *this * Rational(-1); }

  /// Agreement of all known coefficients up to the smaller validity bound.
  bool agrees_with(const QSeries& o) const;
  bool all_nonnegative_integers() const;

  nlohmann::ordered_json to_json() const;
  std::string to_string(std::size_t max_terms = 8) const;

  /// Sets the coefficient at q^{k/d}; zero erases the term. Terms at or
  /// beyond the validity bound are dropped.
  void set(long k, Rational c);

 private:
  long denom_;
  long valid_;
  Terms terms_;
};

}  // namespace bmvoa::qs
