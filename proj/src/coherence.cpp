#include "mqdimer/coherence.hpp"

#include <cmath>
#include <string>

namespace mqdimer {

namespace {

void require_order(int n) {
  if (n < -2 || n > 2) throw Error(ErrorCode::InvalidParams, "coherence order must lie in [-2, 2], got " + std::to_string(n));
}

}  // namespace

int basis_mz(int index) {
  static constexpr std::array<int, 4> kMz{1, 0, 0, -1};
  return kMz.at(static_cast<std::size_t>(index));
}

const CMat4& CoherenceComponents::order(int n) const {
  require_order(n);
  return comp[static_cast<std::size_t>(n + 2)];
}

CMat4 CoherenceComponents::sum() const {
  CMat4 s = CMat4::Zero();
  for (const auto& c : comp) s += c;
  return s;
}

CoherenceComponents decompose(const CMat4& m) {
  CoherenceComponents out;
  for (auto& c : out.comp) c.setZero();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const int n = basis_mz(r) - basis_mz(c);
      out.comp[static_cast<std::size_t>(n + 2)](r, c) = m(r, c);
    }
  return out;
}

double intensity(const CoherenceComponents& rho_comps, const CoherenceComponents& ht_comps, int n) {
  require_order(n);
  const cplx g = (rho_comps.order(n) * ht_comps.order(-n)).trace();
  if (std::abs(g.imag()) > 1e-9)
    throw Error(ErrorCode::NonRealIntensity, "G_" + std::to_string(n) + " has imaginary part " + std::to_string(g.imag()));
  return g.real();
}

IntensityProfile matrix_intensities(const DimerParams& p, DimensionlessTime tau_bar) {
  // Work at d = 1 so physical and dimensionless time coincide.
  const auto rho = decompose(evolve_analytic(p, tau_bar).matrix());
  const auto ht = decompose(ht_reference(1.0, tau_bar.value));
  IntensityProfile out;
  out.g0 = intensity(rho, ht, 0);
  out.g_plus2 = intensity(rho, ht, 2);
  out.g_minus2 = intensity(rho, ht, -2);
  out.j2 = out.g_plus2 + out.g_minus2;
  return out;
}

IntensityProfile analytic_intensities(const DimerParams& p, DimensionlessTime tau_bar) {
  p.validate();
  const double f = polarization_factor(p);
  const double c = std::cos(2.0 * tau_bar.value);
  const double s = std::sin(2.0 * tau_bar.value);
  IntensityProfile out;
  out.g0 = f * c * c;
  out.g_plus2 = 0.5 * f * s * s;
  out.g_minus2 = out.g_plus2;
  out.j2 = out.g_plus2 + out.g_minus2;
  return out;
}

IntensityProfile analytic_intensities(const DimerParams& p, double tau) {
  return analytic_intensities(p, DimensionlessTime{p.d * tau});
}

}  // namespace mqdimer
