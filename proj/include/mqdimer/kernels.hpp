#pragma once

// Batched inner loops of the discord optimizer.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The dispatching entry points pick the widest variant the running
// CPU supports. Variants agree with the scalar reference to roughly 1e-15 in
// absolute terms; they are not bit-identical because the AVX2 path uses its
// own logarithm.

#include <array>
#include <span>
#include <string_view>

namespace mqdimer::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True if the variant was compiled in and the CPU can run it.
bool isa_available(Isa isa) noexcept;

/// Widest available variant. Setting the environment variable
/// MQDIMER_ISA=scalar forces the scalar path.
Isa active_isa() noexcept;

/// Pauli-basis form of a two-spin state with the measured spin singled out:
/// rho = (I + kept·sigma ⊗ I + I ⊗ measured·sigma + sum corr_ij sigma_i ⊗ sigma_j)/4
/// where sigma_i acts on the kept spin and sigma_j on the measured one.
struct MeasurementModel {
  std::array<double, 3> kept{};
  std::array<double, 3> measured{};
  std::array<double, 9> corr{};  // row-major, corr[3*i + j]
};

/// Structure-of-arrays batch of unit vectors.
struct DirectionBatch {
  std::span<const double> x;
  std::span<const double> y;
  std::span<const double> z;

  std::size_t size() const noexcept { return x.size(); }
};

/// -x log2 x - (1-x) log2(1-x) for x in [0, 1]. Requesting an unavailable
/// variant falls back to the scalar one.
void binary_entropy_batch(std::span<const double> x, std::span<double> out, Isa isa = active_isa());

/// Conditional entropy (bits) of the kept spin after a projective measurement
/// of the measured spin along each direction of the batch.
void conditional_entropy_batch(const MeasurementModel& model, const DirectionBatch& dirs, std::span<double> out,
                               Isa isa = active_isa());

/// Single-direction scalar evaluation; the reference every variant is tested
/// against.
double conditional_entropy_one(const MeasurementModel& model, double nx, double ny, double nz);

}  // namespace mqdimer::kernels
