#pragma once

// Concurrence of two-spin states.

#include <array>

#include "mqdimer/dimer_model.hpp"

namespace mqdimer {

/// Square roots of the eigenvalues of rho·rho~, descending, each >= 0.
struct ConcurrenceSpectrum {
  std::array<double, 4> lambdas{};

  /// max{0, lambda_1 - lambda_2 - lambda_3 - lambda_4}
  double concurrence() const;
};

/// rho~ = (sigma_y ⊗ sigma_y) rho* (sigma_y ⊗ sigma_y)
CMat4 spin_flip(const DensityMatrix4& rho);

/// Spectrum from the singular values of sqrt(rho)·sqrt(rho~). These equal the
/// square roots of the eigenvalues of rho·rho~ but avoid taking a square root
/// of roundoff noise when rho is rank deficient.
ConcurrenceSpectrum concurrence_spectrum(const DensityMatrix4& rho);

/// Literal route: eig_general_moduli(rho·rho~), clamp, then square roots.
/// Accurate to about sqrt(machine epsilon) on rank-deficient states. Throws
/// SpectrumNotReal from the eigensolver.
ConcurrenceSpectrum concurrence_spectrum_direct(const DensityMatrix4& rho);

double concurrence_numeric(const DensityMatrix4& rho);

/// C = |F sin(2 tau_bar)|.
double concurrence_analytic(const DimerParams& p, double tau);
double concurrence_analytic(const DimerParams& p, DimensionlessTime tau_bar);

/// C = sqrt(|(e^b|alpha|^2 - |beta|^2)(G2 + G-2)| / (e^b+1)) with j2 = G2 + G-2.
/// j2 has the sign of the polarization factor. Throws InvalidParams for non-finite j2.
double concurrence_from_intensities(const DimerParams& p, double j2);

}  // namespace mqdimer
