#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bmvoa/exact.hpp"
#include "bmvoa/status.hpp"

namespace bmvoa::fock {

/// NS: the module M over ψ_k, k ∈ ℤ+1/2. Ramond: the twisted module N over
/// φ_n, n ∈ ℤ, with φ_0² = 1/2.
enum class Sector { ns, ramond };

std::string_view name(Sector s);

/// Monomial ψ_{-k_1} ⋯ ψ_{-k_r} |0⟩ with k_1 > ⋯ > k_r. Mode indices are
/// stored doubled so both sectors use integers: NS entries are odd and
/// positive, Ramond entries are even and nonnegative (0 is φ_0).
using Monomial = std::vector<int>;

/// Weight of a monomial: Σ k_i, plus 1/16 in the Ramond sector.
Rational weight(Sector s, const Monomial& m);

/// Finite linear combination of monomials with coefficients in Q(√2).
class StateVector {
 public:
  explicit StateVector(Sector s) : sector_(s) {}
  StateVector(Sector s, const Monomial& m, QSqrt2 c = QSqrt2(1));

  Sector sector() const { return sector_; }
  const std::map<Monomial, QSqrt2>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QSqrt2 coefficient(const Monomial& m) const;

  void add(const Monomial& m, const QSqrt2& c);
  StateVector& operator+=(const StateVector& o);
  StateVector& operator-=(const StateVector& o);
  StateVector& operator*=(const QSqrt2& c);
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(const QSqrt2& c, StateVector a) { return a *= c; }
  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.sector_ == b.sector_ && a.terms_ == b.terms_;
  }

  /// Largest |coefficient| as a double; 0 for the zero vector.
  double max_abs() const;
  std::string to_string() const;

 private:
  Sector sector_;
  std::map<Monomial, QSqrt2> terms_;
};

/// |0⟩ (NS) or v_0 (Ramond).
StateVector vacuum(Sector s);
/// v^± = φ_0 v_0 ± (1/√2) v_0.
StateVector ramond_highest_weight(int sign);

/// Applies the mode with doubled index `twice_k` (ψ_{k} or φ_{k}). Negative
/// indices create, positive ones contract via the anticommutator, and φ_0
/// squares to 1/2. Throws std::invalid_argument when the index parity does
/// not match the sector.
StateVector apply_mode(int twice_k, const StateVector& v);

/// L(n) = ½ Σ_k (k - n/2) :ψ_{n-k} ψ_k:, plus 1/16 on L(0) in the Ramond sector.
StateVector virasoro_mode(int n, const StateVector& v);

/// All monomials of weight ≤ max_weight, ordered by weight.
std::vector<Monomial> basis(Sector s, const Rational& max_weight);

struct GradedDimension {
  Rational weight;
  std::uint64_t dim = 0;
};

/// Dimensions of the weight spaces up to max_weight, zero-dimensional ones included.
std::vector<GradedDimension> graded_dimensions(Sector s, const Rational& max_weight);

struct CommutatorResidual {
  bool exact_zero = true;
  /// Largest |coefficient| of any residual vector.
  double max_residual = 0;
};

/// Residual of [L(m),L(n)] - (m-n)L(m+n) - δ_{m+n,0}(m³-m)/24 on each sample.
CommutatorResidual check_virasoro(int m, int n, const std::vector<StateVector>& samples);

struct RamondSplit {
  std::vector<GradedDimension> plus;
  std::vector<GradedDimension> minus;
  /// Dimensions of the sum of both submodules, per weight.
  std::vector<GradedDimension> combined;
};

/// Dimensions of the Virasoro submodules generated by v^+ and v^- up to
/// weight 1/16 + max_level, computed as ranks of the spans of L(-λ)v^±.
RamondSplit ramond_split(int max_level);

struct FockCheck {
  std::string name;
  Status status = Status::pass;
  double residual = 0;
};

struct FockReport {
  Sector sector;
  std::vector<GradedDimension> weights;
  std::vector<FockCheck> checks;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

/// Graded dimensions up to max_weight plus the commutator identity for
/// |m|,|n| ≤ mode_range on all states of weight ≤ sample_weight, L(0)
/// eigenvalues, and highest-weight conditions.
FockReport fock_report(Sector s, const Rational& max_weight, int mode_range = 4, const Rational& sample_weight = 6);

}  // namespace bmvoa::fock
