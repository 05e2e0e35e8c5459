#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace bmvoa {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Element a + b√2 of Q(√2), kept exact.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {  // NOLINT: implicit from Q
    a_.canonicalize();
    b_.canonicalize();
  }
  QSqrt2(long a) : a_(a), b_(0) {}                                          // NOLINT

  static QSqrt2 sqrt2() { return {0, 1}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  double to_double() const;
  QSqrt2 conjugate() const { return {a_, -b_}; }
  /// Field norm a² - 2b².
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
  QSqrt2 inverse() const;

  QSqrt2& operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt2& operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
  QSqrt2 operator-() const { return {-a_, -b_}; }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

using QMatrix = std::vector<std::vector<QSqrt2>>;

}  // namespace bmvoa
