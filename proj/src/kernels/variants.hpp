#pragma once

#include "mqdimer/kernels.hpp"

namespace mqdimer::kernels::detail {

void binary_entropy_scalar(std::span<const double> x, std::span<double> out);
void conditional_entropy_scalar(const MeasurementModel& model, const DirectionBatch& dirs, std::span<double> out);

#if defined(MQDIMER_HAVE_AVX2)
void binary_entropy_avx2(std::span<const double> x, std::span<double> out);
void conditional_entropy_avx2(const MeasurementModel& model, const DirectionBatch& dirs, std::span<double> out);
#endif

}  // namespace mqdimer::kernels::detail
