#pragma once

// Coherence-order grading of two-spin operators and the observable MQ
// intensities G_n = Tr{rho_n · rho^ht_{-n}}.

#include <array>

#include "mqdimer/dimer_model.hpp"

namespace mqdimer {

/// Total magnetization of basis state 0..3: (+1, 0, 0, -1).
int basis_mz(int index);

/// A matrix split by coherence order n in {-2, ..., +2}. Entry (r, c) belongs
/// to order Mz(r) - Mz(c).
struct CoherenceComponents {
  std::array<CMat4, 5> comp;

  const CMat4& order(int n) const;
  CMat4 sum() const;
};

struct IntensityProfile {
  double g0 = 0.0;
  double g_plus2 = 0.0;
  double g_minus2 = 0.0;
  double j2 = 0.0;  // g_plus2 + g_minus2
};

CoherenceComponents decompose(const CMat4& m);

/// G_n. Throws InvalidParams for |n| > 2 and NonRealIntensity if the trace
/// has an imaginary part above 1e-9.
double intensity(const CoherenceComponents& rho_comps, const CoherenceComponents& ht_comps, int n);

/// Intensities through the matrices: evolve, decompose, pair with the
/// high-temperature reference.
IntensityProfile matrix_intensities(const DimerParams& p, DimensionlessTime tau_bar);

/// G0 = F cos^2(2 tau_bar), G+-2 = (F/2) sin^2(2 tau_bar).
IntensityProfile analytic_intensities(const DimerParams& p, double tau);
IntensityProfile analytic_intensities(const DimerParams& p, DimensionlessTime tau_bar);

}  // namespace mqdimer
