#include "mqdimer/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mqdimer {

namespace {

const CMat4& yy() {
  static const CMat4 m = kron(pauli::y(), pauli::y());
  return m;
}

}  // namespace

double ConcurrenceSpectrum::concurrence() const {
  const double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
  return std::clamp(c, 0.0, 1.0);
}

CMat4 spin_flip(const DensityMatrix4& rho) { return yy() * rho.matrix().conjugate() * yy(); }

ConcurrenceSpectrum concurrence_spectrum(const DensityMatrix4& rho) {
  const CMat4 root = psd_sqrt(rho.matrix());
  const CMat4 flipped_root = yy() * root.conjugate() * yy();
  return {singular_values(root * flipped_root)};
}

ConcurrenceSpectrum concurrence_spectrum_direct(const DensityMatrix4& rho) {
  const auto moduli = eig_general_moduli(rho.matrix() * spin_flip(rho));
  ConcurrenceSpectrum out;
  for (int k = 0; k < 4; ++k) out.lambdas[k] = std::sqrt(std::max(moduli[k], 0.0));
  return out;
}

double concurrence_numeric(const DensityMatrix4& rho) { return concurrence_spectrum(rho).concurrence(); }

double concurrence_analytic(const DimerParams& p, DimensionlessTime tau_bar) {
  p.validate();
  return std::abs(polarization_factor(p) * std::sin(2.0 * tau_bar.value));
}

double concurrence_analytic(const DimerParams& p, double tau) {
  return concurrence_analytic(p, DimensionlessTime{p.d * tau});
}

double concurrence_from_intensities(const DimerParams& p, double j2) {
  p.validate();
  if (!std::isfinite(j2)) throw Error(ErrorCode::InvalidParams, "J2 must be finite");
  // (e^b|a|^2 - |b|^2)/(e^b+1) is exactly F. J2 carries the sign of F, so
  // negative intensities are legitimate when the spin-down weight dominates.
  return std::sqrt(std::abs(polarization_factor(p) * j2));
}

}  // namespace mqdimer
