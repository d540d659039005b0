#pragma once

// Fixed-size complex matrix kernels for one and two spin-1/2 systems.
//
// Only dimensions 2 and 4 are supported. Storage and arithmetic are Eigen's
// fixed-size types; this header adds the quantum-information primitives
// (tensor products, ordered spectra, partial trace, entropy) on top.

#include <array>
#include <cmath>
#include <complex>
#include <span>

#include <Eigen/Core>

#include "mqdimer/error.hpp"

namespace mqdimer {

using cplx = std::complex<double>;
using CMat2 = Eigen::Matrix<cplx, 2, 2>;
using CMat4 = Eigen::Matrix<cplx, 4, 4>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kPsdClampTol = 1e-10;

/// Subsystem index of a two-spin state: 1 is the left tensor factor.
class Subsystem {
 public:
  static constexpr Subsystem first() { return Subsystem(1); }
  static constexpr Subsystem second() { return Subsystem(2); }
  /// Throws BadSubsystemId unless `id` is 1 or 2.
  static Subsystem from_index(int id);

  constexpr int index() const { return id_; }
  constexpr Subsystem other() const { return Subsystem(3 - id_); }
  constexpr bool operator==(const Subsystem&) const = default;

 private:
  constexpr explicit Subsystem(int id) : id_(id) {}
  int id_;
};

namespace pauli {
CMat2 identity();
CMat2 x();
CMat2 y();
CMat2 z();
}  // namespace pauli

/// (a ⊗ b)[2i+k][2j+l] = a[i][j]·b[k][l]
CMat4 kron(const CMat2& a, const CMat2& b);

/// Largest elementwise |m - m†|.
template <int N>
double hermiticity_defect(const Eigen::Matrix<cplx, N, N>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <int N>
double max_abs(const Eigen::Matrix<cplx, N, N>& m) {
  return m.cwiseAbs().maxCoeff();
}

template <int N>
bool all_finite(const Eigen::Matrix<cplx, N, N>& m) {
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c)
      if (!std::isfinite(m(r, c).real()) || !std::isfinite(m(r, c).imag())) return false;
  return true;
}

template <int N>
struct HermitianEigen {
  std::array<double, N> values;             // descending
  Eigen::Matrix<cplx, N, N> vectors;        // column k pairs with values[k]
};

/// Hermitian eigendecomposition, eigenvalues sorted descending. Throws
/// NotHermitian when |m - m†| exceeds 1e-12 anywhere.
HermitianEigen<2> eig_hermitian(const CMat2& m);
HermitianEigen<4> eig_hermitian(const CMat4& m);

/// Real parts of the eigenvalues of a general (non-Hermitian) matrix, sorted
/// descending. Negative parts down to -1e-10 are clamped to zero. Throws
/// SpectrumNotReal if any |Im| > 1e-9·(1 + |Re|).
std::array<double, 4> eig_general_moduli(const CMat4& m);

/// Singular values, descending.
std::array<double, 4> singular_values(const CMat4& m);

/// Principal square root of a positive semidefinite matrix. Eigenvalues at or
/// below `floor` are treated as exact zeros.
CMat4 psd_sqrt(const CMat4& m, double floor = 1e-14);

/// Reduced state on `keep`.
CMat2 partial_trace(const CMat4& rho, Subsystem keep);

/// Von Neumann entropy in bits. Throws NotAState if an eigenvalue is below
/// -1e-10 or the trace differs from 1 by more than 1e-9.
double von_neumann_entropy(const CMat2& rho);
double von_neumann_entropy(const CMat4& rho);

/// Shannon entropy in bits of a probability vector, with 0·log 0 = 0.
double shannon_bits(std::span<const double> probabilities);

}  // namespace mqdimer
