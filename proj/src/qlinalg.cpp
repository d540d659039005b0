#include "mqdimer/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace mqdimer {

Subsystem Subsystem::from_index(int id) {
  if (id != 1 && id != 2)
    throw Error(ErrorCode::BadSubsystemId, "subsystem id must be 1 or 2, got " + std::to_string(id));
  return Subsystem(id);
}

namespace pauli {
CMat2 identity() { return CMat2::Identity(); }
CMat2 x() {
  CMat2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
CMat2 y() {
  CMat2 m;
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}
CMat2 z() {
  CMat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

CMat4 kron(const CMat2& a, const CMat2& b) {
  CMat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

namespace {

template <int N>
HermitianEigen<N> eig_hermitian_impl(const Eigen::Matrix<cplx, N, N>& m) {
  const double defect = hermiticity_defect(m);
  if (!(defect <= kHermitianTol))
    throw Error(ErrorCode::NotHermitian, "max |m - m^H| = " + std::to_string(defect));

  // Symmetrize so the solver sees an exactly Hermitian input.
  const Eigen::Matrix<cplx, N, N> h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<cplx, N, N>> solver(h);

  HermitianEigen<N> out;
  // Eigen sorts ascending.
  for (int k = 0; k < N; ++k) {
    out.values[k] = solver.eigenvalues()(N - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(N - 1 - k);
  }
  return out;
}

template <int N>
double entropy_impl(const Eigen::Matrix<cplx, N, N>& rho) {
  const auto eig = eig_hermitian_impl<N>(rho);
  double trace = 0.0;
  std::array<double, N> p{};
  for (int k = 0; k < N; ++k) {
    if (eig.values[k] < -kPsdClampTol)
      throw Error(ErrorCode::NotAState, "negative eigenvalue " + std::to_string(eig.values[k]));
    p[k] = std::max(eig.values[k], 0.0);
    trace += eig.values[k];
  }
  if (std::abs(trace - 1.0) > 1e-9)
    throw Error(ErrorCode::NotAState, "trace " + std::to_string(trace) + " differs from 1");
  return shannon_bits(p);
}

}  // namespace

HermitianEigen<2> eig_hermitian(const CMat2& m) { return eig_hermitian_impl<2>(m); }
HermitianEigen<4> eig_hermitian(const CMat4& m) { return eig_hermitian_impl<4>(m); }

std::array<double, 4> eig_general_moduli(const CMat4& m) {
  Eigen::ComplexEigenSolver<CMat4> solver(m, /*computeEigenvectors=*/false);
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) {
    const cplx ev = solver.eigenvalues()(k);
    if (std::abs(ev.imag()) > 1e-9 * (1.0 + std::abs(ev.real())))
      throw Error(ErrorCode::SpectrumNotReal,
                  "eigenvalue " + std::to_string(ev.real()) + (ev.imag() < 0 ? "" : "+") +
                      std::to_string(ev.imag()) + "i is not real");
    double re = ev.real();
    if (re < 0.0 && re >= -kPsdClampTol) re = 0.0;
    out[k] = re;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::array<double, 4> singular_values(const CMat4& m) {
  Eigen::JacobiSVD<CMat4> svd(m);
  std::array<double, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = svd.singularValues()(k);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

CMat4 psd_sqrt(const CMat4& m, double floor) {
  const auto eig = eig_hermitian(m);
  Eigen::Matrix<double, 4, 1> roots;
  for (int k = 0; k < 4; ++k) roots(k) = eig.values[k] > floor ? std::sqrt(eig.values[k]) : 0.0;
  return eig.vectors * roots.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
}

CMat2 partial_trace(const CMat4& rho, Subsystem keep) {
  CMat2 out = CMat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int s = 0; s < 2; ++s) {
        if (keep == Subsystem::first())
          out(i, j) += rho(2 * i + s, 2 * j + s);
        else
          out(i, j) += rho(2 * s + i, 2 * s + j);
      }
  return out;
}

double shannon_bits(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities)
    if (p > 0.0) s -= p * std::log2(p);
  return std::max(s, 0.0);
}

double von_neumann_entropy(const CMat2& rho) { return entropy_impl<2>(rho); }
double von_neumann_entropy(const CMat4& rho) { return entropy_impl<4>(rho); }

}  // namespace mqdimer
