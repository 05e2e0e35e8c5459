#include "bmvoa/qseries/modular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace bmvoa::qs {

const QMatrix& SMatrix3::exact() {
  static const QMatrix s = [] {
    const QSqrt2 half(Rational(1, 2));
    const QSqrt2 r(0, Rational(1, 2));  // 1/√2 = √2/2
    return QMatrix{{half, half, r}, {half, half, -r}, {r, -r, QSqrt2(0)}};
  }();
  return s;
}

std::array<std::array<double, 3>, 3> SMatrix3::numeric() {
  std::array<std::array<double, 3>, 3> m{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = exact()[i][j].to_double();
  return m;
}

nlohmann::ordered_json SMatrix3::to_json() {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : exact()) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(std::move(r));
  }
  return rows;
}

bool SMatrix3::is_symmetric() {
  const auto& s = exact();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!(s[i][j] == s[j][i])) return false;
  return true;
}

bool SMatrix3::squares_to_identity() {
  const auto& s = exact();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      QSqrt2 sum;
      for (std::size_t k = 0; k < 3; ++k) sum += s[i][k] * s[k][j];
      if (!(sum == QSqrt2(i == j ? 1 : 0))) return false;
    }
  return true;
}

NumericValue numeric_eval(const QSeries& s, Complex tau) {
  if (tau.imag() <= 0) throw std::domain_error("numeric_eval: Im(τ) must be positive");
  const double two_pi = 2 * std::numbers::pi;
  const double d = static_cast<double>(s.denom());
  const double log_abs_q = -two_pi * tau.imag();
  Complex sum = 0;
  for (const auto& [k, c] : s.terms()) sum += c.get_d() * std::exp(Complex(0, two_pi) * tau * (static_cast<double>(k) / d));

  NumericValue out{sum, 0};
  const auto& t = s.terms();
  if (t.size() < 2) {
    out.tail_bound = kTailSafety * std::exp(log_abs_q * s.order().get_d());
    return out;
  }
  auto last = t.rbegin();
  auto prev = std::next(last);
  const double e2 = static_cast<double>(last->first) / d;
  const double e1 = static_cast<double>(prev->first) / d;
  const double c2 = std::abs(last->second.get_d());
  const double c1 = std::abs(prev->second.get_d());
  // Ratio of consecutive terms at this |q|, computed in logs to avoid overflow.
  const double log_r = std::log(c2) - std::log(c1) + log_abs_q * (e2 - e1);
  if (log_r >= 0) {
    out.tail_bound = std::numeric_limits<double>::infinity();
    return out;
  }
  const double r = std::exp(log_r);
  out.tail_bound = kTailSafety * std::exp(std::log(c2) + log_abs_q * e2) * r / (1 - r);
  return out;
}

double STransformReport::max_residual() const {
  double m = 0;
  for (const auto& s : samples)
    for (double r : s.residuals) m = std::max(m, r);
  return m;
}

double STransformReport::max_tail_bound() const {
  double m = 0;
  for (const auto& s : samples) m = std::max(m, s.tail_bound);
  return m;
}

std::string format_tau(Complex tau) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", tau.real(), tau.imag());
  return buf;
}

nlohmann::ordered_json STransformReport::to_json() const {
  nlohmann::ordered_json j;
  j["status"] = name(status);
  j["tol"] = tol;
  j["max_residual"] = max_residual();
  j["max_tail_bound"] = max_tail_bound();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : samples) {
    nlohmann::ordered_json e;
    e["tau"] = format_tau(s.tau);
    e["residuals"] = s.residuals;
    e["tail_bound"] = s.tail_bound;
    arr.push_back(std::move(e));
  }
  j["samples"] = std::move(arr);
  return j;
}

STransformReport verify_s_transform(const std::array<QSeries, 3>& triple, const std::vector<Complex>& taus, double tol,
                                    const RealMatrix3& s) {
  if (!(tol > 0)) throw std::invalid_argument("verify_s_transform: tolerance must be positive");
  STransformReport report;
  report.tol = tol;
  bool inconclusive = false, failed = false;
  for (const auto& tau : taus) {
    const Complex image = -1.0 / tau;
    std::array<NumericValue, 3> at_tau, at_image;
    for (std::size_t i = 0; i < 3; ++i) {
      at_tau[i] = numeric_eval(triple[i], tau);
      at_image[i] = numeric_eval(triple[i], image);
    }
    STransformSample sample{tau, {}, 0};
    for (std::size_t i = 0; i < 3; ++i) {
      Complex rhs = 0;
      double bound = at_image[i].tail_bound;
      for (std::size_t j = 0; j < 3; ++j) {
        rhs += s[i][j] * at_tau[j].value;
        bound += std::abs(s[i][j]) * at_tau[j].tail_bound;
      }
      sample.residuals[i] = std::abs(at_image[i].value - rhs);
      sample.tail_bound = std::max(sample.tail_bound, bound);
      if (!(sample.residuals[i] < tol)) failed = true;
    }
    if (!(sample.tail_bound <= tol / 10)) inconclusive = true;
    report.samples.push_back(sample);
  }
  report.status = inconclusive ? Status::inconclusive : (failed ? Status::fail : Status::pass);
  return report;
}

}  // namespace bmvoa::qs
