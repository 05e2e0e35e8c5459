#pragma once

#include <array>
#include <complex>
#include <vector>

#include <json.hpp>

#include "bmvoa/exact.hpp"
#include "bmvoa/qseries/qseries.hpp"
#include "bmvoa/status.hpp"

namespace bmvoa::qs {

using Complex = std::complex<double>;

/// The 3×3 matrix of τ ↦ -1/τ on (ch_0, ch_{1/2}, ch_{1/16}); the same matrix
/// governs the baby-monster triple (b0, b1, bT).
class SMatrix3 {
 public:
  /// Entries in Q(√2).
  static const QMatrix& exact();
  static std::array<std::array<double, 3>, 3> numeric();
  static nlohmann::ordered_json to_json();
  static bool is_symmetric();
  static bool squares_to_identity();
};

/// Truncated sum and an estimate of the omitted tail.
struct NumericValue {
  Complex value;
  double tail_bound = 0;
};

/// Safety factor applied to the geometric tail estimate.
inline constexpr double kTailSafety = 10.0;

/// Evaluates s at q = e^{2πiτ}. The tail Σ_{k≥K} |c_k||q|^{k/d} is estimated
/// from the last two nonzero terms as a geometric series and multiplied by
/// kTailSafety; it is infinite when the estimated ratio reaches 1.
NumericValue numeric_eval(const QSeries& s, Complex tau);

struct STransformSample {
  Complex tau;
  std::array<double, 3> residuals{};
  double tail_bound = 0;
};

struct STransformReport {
  Status status = Status::pass;
  double tol = 0;
  std::vector<STransformSample> samples;

  double max_residual() const;
  double max_tail_bound() const;
  nlohmann::ordered_json to_json() const;
};

using RealMatrix3 = std::array<std::array<double, 3>, 3>;

/// For every τ and row i compares ch_i(-1/τ) with Σ_j S_ij ch_j(τ).
/// Inconclusive when a tail bound exceeds tol/10, fail when a residual is
/// at least tol.
STransformReport verify_s_transform(const std::array<QSeries, 3>& triple, const std::vector<Complex>& taus, double tol,
                                    const RealMatrix3& s = SMatrix3::numeric());

std::string format_tau(Complex tau);

}  // namespace bmvoa::qs
