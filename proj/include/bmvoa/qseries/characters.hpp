#pragma once

#include <stdexcept>

#include "bmvoa/code/linear_code.hpp"
#include "bmvoa/fusion/labels.hpp"
#include "bmvoa/qseries/qseries.hpp"

namespace bmvoa::qs {

/// Prefactor of ch_{1/16}: q^{1/16 - 1/48} = q^{+1/24} (consistent with the
/// conformal weight), or the sign-flipped q^{-1/24} kept for comparison.
enum class SixteenthConvention { corrected, sign_flipped };

/// Raised when the solved characters are not graded dimensions.
class DerivationInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ising characters, valid for exponents below `order`:
///   ch_0 ± ch_{1/2} = q^{-1/48} ∏_{n≥0} (1 ± q^{n+1/2}),
///   ch_{1/16} = q^{1/24} ∏_{n≥1} (1 + q^n).
QSeries ising_char(fusion::IsingLabel h, long order,
                   SixteenthConvention conv = SixteenthConvention::corrected);

/// 1 + 240 Σ σ_3(n) q^n.
QSeries eisenstein_e4(long order);
/// q ∏ (1 - q^n)^24.
QSeries delta(long order);
/// E4^3/Δ - 744 = q^{-1} + 196884 q + ...
QSeries j_series(long order);
/// f + 4096/f + c with f = q^{-1} ∏ (1 - q^{2n-1})^24 = (η(τ)/η(2τ))^24.
/// The McKay-Thompson series of class 2A has c = 24; other constants are
/// accepted so that negative controls can be run.
QSeries t2a_series(long order, long constant = 24);

struct CharacterTriple {
  QSeries b0;
  QSeries b1;
  QSeries bT;
};

struct SolverOptions {
  long t2a_constant = 24;
  SixteenthConvention convention = SixteenthConvention::corrected;
};

/// Solves
///   j        = ch_0 b0 + ch_{1/2} b1 + ch_{1/16} bT
///   T_2A     = ch_0 b0 + ch_{1/2} b1 - ch_{1/16} bT
///   T_2A(τ/2) = ch_{1/2} b0 + ch_0 b1 + ch_{1/16} bT
/// for series valid below `order`. Throws DerivationInconsistency when a
/// coefficient of the result is negative or not an integer.
CharacterTriple solve_baby_characters(long order, const SolverOptions& options = {});

/// Residuals of the three defining equations; each should have no known term.
struct EquationResiduals {
  QSeries untwisted;
  QSeries graded_trace;
  QSeries twisted;

  bool all_zero() const { return untwisted.empty() && graded_trace.empty() && twisted.empty(); }
};

EquationResiduals equation_residuals(const CharacterTriple& t, long order, const SolverOptions& options = {});

/// Σ_{β∈D+γ} ∏ ch_{L(1/2,β_i/2)}: the weight enumerator of the coset at (ch_0, ch_{1/2}).
QSeries code_voa_char(const code::LinearCode& d, const code::BitWord& gamma, long order);

}  // namespace bmvoa::qs
