#include "bmvoa/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace bmvoa {

double QSqrt2::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

QSqrt2 QSqrt2::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("QSqrt2: division by zero");
  return {a_ / n, -b_ / n};
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string QSqrt2::to_string() const {
  if (is_rational()) return a_.get_str();
  if (sgn(a_) == 0) return b_.get_str() + "*sqrt2";
  return a_.get_str() + (sgn(b_) > 0 ? "+" : "") + b_.get_str() + "*sqrt2";
}

}  // namespace bmvoa
