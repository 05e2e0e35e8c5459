#pragma once

#include <cstdint>
#include <vector>

#include "bmvoa/exact.hpp"
#include "bmvoa/fusion/ring.hpp"

namespace bmvoa::fusion {

/// N[i][j][k] = multiplicity of label k in label i ⊠ label j.
using FusionCoefficients = std::vector<std::vector<std::vector<QSqrt2>>>;

/// Verlinde formula N_ij^k = Σ_m S_im S_jm S_km / S_0m for a real symmetric
/// unitary S whose row 0 is the unit. Throws if some S_0m vanishes.
FusionCoefficients verlinde(const QMatrix& s);

/// Structure constants of `ring` in the label order given by `order`.
FusionCoefficients structure_constants(const FusionRing& ring, const std::vector<ModuleLabel>& order);

}  // namespace bmvoa::fusion
