#pragma once

// Two dipolar-coupled spins during the preparation period of a
// multiple-quantum NMR experiment.
//
// Basis order is |00>, |01>, |10>, |11> with |0> the I_z = +1/2 state. Spin 1
// starts in the pure state alpha|0> + beta|1>; spin 2 starts in thermal
// equilibrium with populations e^b/(e^b+1) and 1/(e^b+1).

#include "mqdimer/qlinalg.hpp"

namespace mqdimer {

/// Physical inputs of the dimer. `b` is hbar·omega0/kT; `d` is the dipolar
/// coupling constant.
struct DimerParams {
  cplx alpha{1.0, 0.0};
  cplx beta{0.0, 0.0};
  double b = 0.0;
  double d = 1.0;

  /// Throws InvalidParams on |alpha|^2 + |beta|^2 != 1 (tolerance 1e-9),
  /// non-finite or negative b, or d that is not finite and positive.
  void validate() const;
};

/// tau_bar = d·tau, the time axis used by the sweeps.
struct DimensionlessTime {
  double value = 0.0;
};

/// Hermitian, unit-trace, positive semidefinite 4x4 matrix.
class DensityMatrix4 {
 public:
  /// Checks Hermiticity and trace to 1e-12 and eigenvalues >= -1e-10;
  /// throws NotAState otherwise.
  static DensityMatrix4 from_matrix(const CMat4& m);
  /// Wraps a matrix already known to be a state (closed-form constructions,
  /// unitary conjugations of states).
  static DensityMatrix4 trusted(const CMat4& m) { return DensityMatrix4(m); }

  const CMat4& matrix() const { return m_; }
  cplx operator()(int r, int c) const { return m_(r, c); }

 private:
  explicit DensityMatrix4(const CMat4& m) : m_(m) {}
  CMat4 m_;
};

/// e^b/(e^b+1) and 1/(e^b+1), evaluated without overflow for large b.
struct ThermalWeights {
  double up;
  double down;
};
ThermalWeights thermal_weights(double b);

/// F = (e^b|alpha|^2 - |beta|^2)/(e^b+1), the common prefactor of the
/// intensities and of the concurrence.
double polarization_factor(const DimerParams& p);

/// I_z = I_1z + I_2z = diag(1, 0, 0, -1).
CMat4 total_iz();

DensityMatrix4 initial_state(const DimerParams& p);

/// H = d·(I1+ I2+ + I1- I2-): couples |00> and |11> with amplitude d.
CMat4 mq_hamiltonian(double d);

/// exp(-i H tau), built from the Hermitian eigendecomposition of H.
CMat4 propagator(double d, double tau);

/// U rho0 U† with U = propagator(d, tau).
DensityMatrix4 evolve_numeric(const DensityMatrix4& rho0, double d, double tau);

/// Closed-form evolved state at physical time tau (tau_bar = p.d·tau).
DensityMatrix4 evolve_analytic(const DimerParams& p, double tau);
DensityMatrix4 evolve_analytic(const DimerParams& p, DimensionlessTime tau_bar);

/// exp(-i H tau) I_z exp(i H tau).
CMat4 ht_reference(double d, double tau);

}  // namespace mqdimer
