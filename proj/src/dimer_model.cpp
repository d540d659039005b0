#include "mqdimer/dimer_model.hpp"

#include <cmath>
#include <string>

namespace mqdimer {

namespace {

void require_coupling(double d) {
  if (!std::isfinite(d) || !(d > 0.0))
    throw Error(ErrorCode::InvalidParams, "dipolar constant d must be finite and > 0, got " + std::to_string(d));
}

void require_time(double tau) {
  if (!std::isfinite(tau)) throw Error(ErrorCode::InvalidParams, "time must be finite");
}

}  // namespace

void DimerParams::validate() const {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-9)
    throw Error(ErrorCode::InvalidParams, "|alpha|^2 + |beta|^2 = " + std::to_string(norm) + ", expected 1");
  if (!std::isfinite(b) || b < 0.0)
    throw Error(ErrorCode::InvalidParams, "b must be finite and >= 0, got " + std::to_string(b));
  require_coupling(d);
}

DensityMatrix4 DensityMatrix4::from_matrix(const CMat4& m) {
  if (!all_finite(m)) throw Error(ErrorCode::NotAState, "non-finite entry");
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) throw Error(ErrorCode::NotAState, "not Hermitian, defect " + std::to_string(defect));
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kHermitianTol)
    throw Error(ErrorCode::NotAState, "trace " + std::to_string(trace) + " differs from 1");
  const auto eig = eig_hermitian(m);
  if (eig.values[3] < -kPsdClampTol)
    throw Error(ErrorCode::NotAState, "negative eigenvalue " + std::to_string(eig.values[3]));
  return DensityMatrix4(m);
}

ThermalWeights thermal_weights(double b) {
  const double e = std::exp(-b);
  return {1.0 / (1.0 + e), e / (1.0 + e)};
}

double polarization_factor(const DimerParams& p) {
  const auto w = thermal_weights(p.b);
  return w.up * std::norm(p.alpha) - w.down * std::norm(p.beta);
}

CMat4 total_iz() {
  CMat4 m = CMat4::Zero();
  m(0, 0) = 1.0;
  m(3, 3) = -1.0;
  return m;
}

DensityMatrix4 initial_state(const DimerParams& p) {
  p.validate();
  const auto w = thermal_weights(p.b);
  const double a2 = std::norm(p.alpha);
  const double b2 = std::norm(p.beta);
  const cplx ab = p.alpha * std::conj(p.beta);
  const cplx ba = std::conj(ab);

  CMat4 m = CMat4::Zero();
  m(0, 0) = w.up * a2;
  m(0, 2) = w.up * ab;
  m(1, 1) = w.down * a2;
  m(1, 3) = w.down * ab;
  m(2, 0) = w.up * ba;
  m(2, 2) = w.up * b2;
  m(3, 1) = w.down * ba;
  m(3, 3) = w.down * b2;
  return DensityMatrix4::trusted(m);
}

CMat4 mq_hamiltonian(double d) {
  require_coupling(d);
  CMat4 h = CMat4::Zero();
  h(0, 3) = d;
  h(3, 0) = d;
  return h;
}

CMat4 propagator(double d, double tau) {
  require_time(tau);
  const auto eig = eig_hermitian(mq_hamiltonian(d));
  Eigen::Matrix<cplx, 4, 1> phases;
  for (int k = 0; k < 4; ++k) phases(k) = std::polar(1.0, -eig.values[k] * tau);
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

DensityMatrix4 evolve_numeric(const DensityMatrix4& rho0, double d, double tau) {
  const CMat4 u = propagator(d, tau);
  return DensityMatrix4::trusted(u * rho0.matrix() * u.adjoint());
}

DensityMatrix4 evolve_analytic(const DimerParams& p, DimensionlessTime tau_bar) {
  p.validate();
  require_time(tau_bar.value);
  const auto w = thermal_weights(p.b);
  const double a2 = std::norm(p.alpha);
  const double b2 = std::norm(p.beta);
  const cplx ab = p.alpha * std::conj(p.beta);
  const cplx ba = std::conj(ab);
  const double c = std::cos(tau_bar.value);
  const double s = std::sin(tau_bar.value);
  const double s2 = std::sin(2.0 * tau_bar.value);
  const double f = w.up * a2 - w.down * b2;
  const cplx i{0.0, 1.0};

  CMat4 m;
  m(0, 0) = w.up * a2 * c * c + w.down * b2 * s * s;
  m(0, 1) = -i * ba * s * w.down;
  m(0, 2) = w.up * ab * c;
  m(0, 3) = i * s2 * f / 2.0;

  m(1, 0) = i * ab * s * w.down;
  m(1, 1) = w.down * a2;
  m(1, 2) = 0.0;
  m(1, 3) = w.down * ab * c;

  m(2, 0) = w.up * ba * c;
  m(2, 1) = 0.0;
  m(2, 2) = w.up * b2;
  m(2, 3) = i * w.up * ba * s;

  m(3, 0) = -i * s2 * f / 2.0;
  m(3, 1) = w.down * ba * c;
  m(3, 2) = -i * w.up * ab * s;
  m(3, 3) = w.up * a2 * s * s + w.down * b2 * c * c;
  return DensityMatrix4::trusted(m);
}

DensityMatrix4 evolve_analytic(const DimerParams& p, double tau) {
  return evolve_analytic(p, DimensionlessTime{p.d * tau});
}

CMat4 ht_reference(double d, double tau) {
  const CMat4 u = propagator(d, tau);
  return u * total_iz() * u.adjoint();
}

}  // namespace mqdimer
