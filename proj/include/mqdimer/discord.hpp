#pragma once

// Quantum discord of a two-spin state under projective measurements of one
// spin. All entropies are in bits.

#include <utility>

#include "mqdimer/dimer_model.hpp"
#include "mqdimer/kernels.hpp"

namespace mqdimer {

/// Unit Bloch vector (directional cosines) of a projective measurement.
class MeasurementDirection {
 public:
  /// Throws NotUnitVector unless nx^2 + ny^2 + nz^2 = 1 within 1e-12.
  static MeasurementDirection from_components(double nx, double ny, double nz);
  static MeasurementDirection from_angles(double theta, double phi);

  double nx() const { return nx_; }
  double ny() const { return ny_; }
  double nz() const { return nz_; }

  MeasurementDirection operator-() const { return {-nx_, -ny_, -nz_}; }

  /// Representative of {n, -n}: n_z >= 0, and n_y >= 0 on the equator
  /// (|n_z| <= 1e-6), then n_x >= 0 on the y = z = 0 axis.
  MeasurementDirection canonical() const;

 private:
  MeasurementDirection(double nx, double ny, double nz) : nx_(nx), ny_(ny), nz_(nz) {}
  double nx_, ny_, nz_;
};

struct ProjectorPair {
  CMat2 plus;
  CMat2 minus;
};

/// (I ± n·sigma)/2.
ProjectorPair projector_pair(const MeasurementDirection& n);

/// Pauli-basis form of rho with `measured` as the measured spin.
kernels::MeasurementModel measurement_model(const DensityMatrix4& rho, Subsystem measured);

/// sum_k p_k S(rho_k): measure `measured` along n, average the entropy of the
/// other spin's post-measurement states. Outcomes with p_k < 1e-14 are
/// dropped. Built from explicit projectors and partial traces.
double conditional_entropy(const DensityMatrix4& rho, const MeasurementDirection& n, Subsystem measured);

struct MinimizerOptions {
  int theta_points = 64;   // on [0, pi], both ends included
  int phi_points = 128;    // on [0, 2 pi)
  int seeds = 5;           // best distinct grid cells refined by the simplex
  double flat_tolerance = 1e-12;
  kernels::Isa isa = kernels::active_isa();
};

struct EntropyMinimum {
  MeasurementDirection direction;
  double value;
  bool flat;  // objective constant over the grid; direction is arbitrary
};

/// Global minimum of the conditional entropy over the sphere: coarse angular
/// grid, then Nelder-Mead on the tangent plane from the best grid cells.
/// Deterministic for a given state and options.
EntropyMinimum minimize_conditional_entropy(const DensityMatrix4& rho, Subsystem measured,
                                            const MinimizerOptions& options = {});

/// S(rho_1) + S(rho_2) - S(rho).
double mutual_information(const DensityMatrix4& rho);

/// S(rho_unmeasured) - min_n conditional entropy.
double classical_correlations(const DensityMatrix4& rho, Subsystem measured);

struct DiscordResult {
  double q;
  double classical;
  double mutual;
  MeasurementDirection best_direction;
  double min_cond_entropy;
  Subsystem measured_subsystem;
  bool flat;
};

/// q = mutual - classical, clamped to 0 when in [-1e-9, 0).
DiscordResult discord(const DensityMatrix4& rho, Subsystem measured = Subsystem::second(),
                      const MinimizerOptions& options = {});

}  // namespace mqdimer
