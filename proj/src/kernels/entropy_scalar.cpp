#include <algorithm>
#include <cmath>

#include "entropy_common.hpp"
#include "variants.hpp"
#include "mqdimer/kernels.hpp"

namespace mqdimer::kernels {

namespace {

inline double binary_entropy_pair(double lo, double hi) {
  double h = 0.0;
  if (lo > detail::kTinyEigenvalue) h -= lo * std::log2(lo);
  if (hi > detail::kTinyEigenvalue) h -= hi * std::log2(hi);
  return h;
}

}  // namespace

double conditional_entropy_one(const MeasurementModel& m, double nx, double ny, double nz) {
  const double nb = nx * m.measured[0] + ny * m.measured[1] + nz * m.measured[2];
  const double tn[3] = {
      m.corr[0] * nx + m.corr[1] * ny + m.corr[2] * nz,
      m.corr[3] * nx + m.corr[4] * ny + m.corr[5] * nz,
      m.corr[6] * nx + m.corr[7] * ny + m.corr[8] * nz,
  };

  double total = 0.0;
  for (const double sign : {1.0, -1.0}) {
    const double p = 0.5 * (1.0 + sign * nb);
    if (!(p >= detail::kMinOutcomeProbability)) continue;
    const double vx = m.kept[0] + sign * tn[0];
    const double vy = m.kept[1] + sign * tn[1];
    const double vz = m.kept[2] + sign * tn[2];
    // Bloch length of the post-measurement state of the kept spin.
    const double len = std::min(std::sqrt(vx * vx + vy * vy + vz * vz) / (2.0 * p), 1.0);
    total += p * binary_entropy_pair(0.5 * (1.0 - len), 0.5 * (1.0 + len));
  }
  return total;
}

namespace detail {

void binary_entropy_scalar(std::span<const double> x, std::span<double> out) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = binary_entropy_pair(x[i], 1.0 - x[i]);
}

void conditional_entropy_scalar(const MeasurementModel& model, const DirectionBatch& dirs, std::span<double> out) {
  for (std::size_t i = 0; i < dirs.size(); ++i) out[i] = conditional_entropy_one(model, dirs.x[i], dirs.y[i], dirs.z[i]);
}

}  // namespace detail

}  // namespace mqdimer::kernels
