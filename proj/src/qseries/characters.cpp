#include "bmvoa/qseries/characters.hpp"

#include <vector>

namespace bmvoa::qs {

namespace {

using Dense = std::vector<Integer>;

// poly *= (1 + sign·x^e)^power, truncated to poly.size() coefficients.
// Negative powers multiply by the geometric series.
void multiply_factor(Dense& poly, std::size_t e, int sign, int power) {
  const std::size_t n = poly.size();
  if (e == 0 || e >= n) return;
  if (power >= 0) {
    for (int p = 0; p < power; ++p)
      for (std::size_t i = n - 1; i >= e; --i) poly[i] += sign * poly[i - e];
  } else {
    for (int p = 0; p < -power; ++p)
      for (std::size_t i = e; i < n; ++i) poly[i] -= sign * poly[i - e];
  }
}

Dense unit_poly(std::size_t n) {
  Dense p(n, 0);
  if (n > 0) p[0] = 1;
  return p;
}

// Σ poly[m] q^{(m·step + offset)/d}, valid below exponent (n·step + offset)/d.
QSeries from_dense(const Dense& poly, long step, long offset, long d) {
  QSeries s(d, static_cast<long>(poly.size()) * step + offset);
  for (std::size_t m = 0; m < poly.size(); ++m) {
    if (sgn(poly[m]) != 0) s.set(static_cast<long>(m) * step + offset, Rational(poly[m]));
  }
  return s;
}

void require_valid(const QSeries& s, long order, const char* what) {
  if (s.order() < order) throw SeriesError(std::string(what) + ": internal precision too low");
}

// ∏_{n≥0} (1 + sign·q^{n+1/2}) in x = q^{1/2} up to q^order.
Dense half_odd_product(long order, int sign) {
  const auto n = static_cast<std::size_t>(2 * order + 1);
  Dense p = unit_poly(n);
  for (std::size_t e = 1; e < n; e += 2) multiply_factor(p, e, sign, 1);
  return p;
}

}  // namespace

QSeries ising_char(fusion::IsingLabel h, long order, SixteenthConvention conv) {
  using fusion::IsingLabel;
  if (order < 1) throw std::invalid_argument("ising_char: order must be at least 1");
  if (h == IsingLabel::h116) {
    const auto n = static_cast<std::size_t>(order + 1);
    Dense p = unit_poly(n);
    for (std::size_t e = 1; e < n; ++e) multiply_factor(p, e, 1, 1);
    const long offset = conv == SixteenthConvention::corrected ? 2 : -2;
    return from_dense(p, 48, offset, 48).truncate(order);
  }
  const Dense plus = half_odd_product(order + 1, 1);
  const Dense minus = half_odd_product(order + 1, -1);
  Dense p(plus.size());
  const int sign = h == IsingLabel::h0 ? 1 : -1;
  for (std::size_t m = 0; m < p.size(); ++m) p[m] = plus[m] + sign * minus[m];
  return (from_dense(p, 24, -1, 48) * Rational(1, 2)).truncate(order);
}

QSeries eisenstein_e4(long order) {
  QSeries s(1, order);
  s.set(0, 1);
  for (long n = 1; n < order; ++n) {
    Integer sigma = 0;
    for (long k = 1; k <= n; ++k) {
      if (n % k == 0) sigma += Integer(k) * k * k;
    }
    s.set(n, Rational(240 * sigma));
  }
  return s;
}

QSeries delta(long order) {
  const auto n = static_cast<std::size_t>(std::max(order - 1, 0L));
  Dense p = unit_poly(n);
  for (std::size_t e = 1; e < n; ++e) multiply_factor(p, e, -1, 24);
  return from_dense(p, 1, 1, 1);
}

QSeries j_series(long order) {
  const long inner = order + 2;
  QSeries j = eisenstein_e4(inner).pow(3) / delta(inner) - QSeries::constant(744, inner);
  require_valid(j, order, "j_series");
  return j.truncate(order);
}

QSeries t2a_series(long order, long constant) {
  const auto n = static_cast<std::size_t>(order + 2);
  Dense g = unit_poly(n);
  Dense ginv = unit_poly(n);
  for (std::size_t e = 1; e < n; e += 2) {
    multiply_factor(g, e, -1, 24);
    multiply_factor(ginv, e, -1, -24);
  }
  QSeries f = from_dense(g, 1, -1, 1);
  QSeries rest = from_dense(ginv, 1, 1, 1) * Rational(4096);
  QSeries t = f + rest + QSeries::constant(constant, order + 1);
  require_valid(t, order, "t2a_series");
  return t.truncate(order);
}

namespace {

struct Inputs {
  QSeries ch0, ch12, ch16, j, t, t_half;
};

Inputs solver_inputs(long order, const SolverOptions& o) {
  using fusion::IsingLabel;
  return {ising_char(IsingLabel::h0, order), ising_char(IsingLabel::h12, order),
          ising_char(IsingLabel::h116, order, o.convention), j_series(order),
          t2a_series(order, o.t2a_constant), t2a_series(2 * order + 2, o.t2a_constant).half_argument()};
}

void require_graded_dimension(const QSeries& s, const char* name) {
  for (const auto& [k, c] : s.terms()) {
    if (!is_integer(c) || sgn(c) < 0) {
      Rational e(k, s.denom());
      e.canonicalize();
      throw DerivationInconsistency(std::string(name) + " has coefficient " + c.get_str() + " at q^(" +
                                    e.get_str() + "); check the T_2A series and character conventions");
    }
  }
}

}  // namespace

CharacterTriple solve_baby_characters(long order, const SolverOptions& options) {
  if (order < 2) throw std::invalid_argument("solve_baby_characters: order must be at least 2");
  const long inner = order + 4;
  const auto in = solver_inputs(inner, options);
  const QSeries bt = (in.j - in.t) * Rational(1, 2) / in.ch16;
  const QSeries a = (in.j + in.t) * Rational(1, 2);
  const QSeries b = in.t_half - in.ch16 * bt;
  const QSeries den = in.ch0 * in.ch0 - in.ch12 * in.ch12;
  const QSeries b0 = (in.ch0 * a - in.ch12 * b) / den;
  const QSeries b1 = (in.ch0 * b - in.ch12 * a) / den;
  for (const auto* s : {&b0, &b1, &bt}) require_valid(*s, order, "solve_baby_characters");
  CharacterTriple t{b0.truncate(order).simplify(), b1.truncate(order).simplify(), bt.truncate(order).simplify()};
  require_graded_dimension(t.b0, "b0");
  require_graded_dimension(t.b1, "b1");
  require_graded_dimension(t.bT, "bT");
  return t;
}

EquationResiduals equation_residuals(const CharacterTriple& t, long order, const SolverOptions& options) {
  const auto in = solver_inputs(order + 1, options);
  const QSeries even = in.ch0 * t.b0 + in.ch12 * t.b1;
  const QSeries odd = in.ch16 * t.bT;
  return {even + odd - in.j, even - odd - in.t, in.ch12 * t.b0 + in.ch0 * t.b1 + odd - in.t_half};
}

QSeries code_voa_char(const code::LinearCode& d, const code::BitWord& gamma, long order) {
  using fusion::IsingLabel;
  const std::size_t n = d.length();
  if (gamma.length() != n) throw code::LengthMismatch("code_voa_char: γ and D differ in length");
  std::vector<std::uint64_t> dist(n + 1, 0);
  if (d.contains(gamma)) {
    dist = d.weight_distribution();
  } else {
    d.for_each_word([&](const code::BitWord& w) { ++dist[(w ^ gamma).weight()]; });
  }
  const long inner = order + 2 + static_cast<long>(n) / 48;
  const QSeries c0 = ising_char(IsingLabel::h0, inner);
  const QSeries c1 = ising_char(IsingLabel::h12, inner);
  QSeries sum;
  bool first = true;
  for (std::size_t w = 0; w <= n; ++w) {
    if (dist[w] == 0) continue;
    QSeries term = c0.pow(static_cast<unsigned>(n - w)) * c1.pow(static_cast<unsigned>(w));
    term *= Rational(static_cast<unsigned long>(dist[w]));
    sum = first ? term : sum + term;
    first = false;
  }
  require_valid(sum, order, "code_voa_char");
  return sum.truncate(order);
}

}  // namespace bmvoa::qs
