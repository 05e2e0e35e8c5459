#include "bmvoa/fusion/verlinde.hpp"

#include <stdexcept>

namespace bmvoa::fusion {

FusionCoefficients verlinde(const QMatrix& s) {
  const std::size_t n = s.size();
  for (const auto& row : s) {
    if (row.size() != n) throw std::invalid_argument("verlinde: S is not square");
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (s[0][m].is_zero()) throw std::domain_error("verlinde: S_0m vanishes");
  }
  FusionCoefficients out(n, std::vector<std::vector<QSqrt2>>(n, std::vector<QSqrt2>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        QSqrt2 sum;
        for (std::size_t m = 0; m < n; ++m) sum += s[i][m] * s[j][m] * s[k][m] / s[0][m];
        out[i][j][k] = sum;
      }
  return out;
}

FusionCoefficients structure_constants(const FusionRing& ring, const std::vector<ModuleLabel>& order) {
  const std::size_t n = order.size();
  FusionCoefficients out(n, std::vector<std::vector<QSqrt2>>(n, std::vector<QSqrt2>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = ring.product(order[i], order[j]);
      for (std::size_t k = 0; k < n; ++k) out[i][j][k] = QSqrt2(static_cast<long>(p.multiplicity(order[k])));
    }
  return out;
}

}  // namespace bmvoa::fusion
