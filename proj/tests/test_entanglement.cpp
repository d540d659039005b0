#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "mqdimer/coherence.hpp"
#include "mqdimer/entanglement.hpp"
#include "support/oracles.hpp"

using namespace mqdimer;
using mqdimer::testing::bell_phi_plus;
using std::numbers::pi;

TEST(SpinFlip, FixedPointsAndBasisFlip) {
  const auto mixed = DensityMatrix4::trusted(CMat4::Identity() / 4.0);
  EXPECT_LE(max_abs<4>(spin_flip(mixed) - mixed.matrix()), 1e-16);

  const auto bell = DensityMatrix4::trusted(bell_phi_plus());
  EXPECT_LE(max_abs<4>(spin_flip(bell) - bell.matrix()), 1e-16);

  CMat4 up = CMat4::Zero();
  up(0, 0) = 1.0;
  CMat4 down = CMat4::Zero();
  down(3, 3) = 1.0;
  EXPECT_LE(max_abs<4>(spin_flip(DensityMatrix4::trusted(up)) - down), 1e-16);
}

TEST(ConcurrenceNumeric, BellAndProducts) {
  EXPECT_NEAR(concurrence_numeric(DensityMatrix4::trusted(bell_phi_plus())), 1.0, 1e-10);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    CMat2 a = mqdimer::testing::random_su2(rng), b = mqdimer::testing::random_su2(rng);
    // Random mixed single-spin states.
    std::uniform_real_distribution<double> w(0.0, 1.0);
    CMat2 da = CMat2::Zero(), db = CMat2::Zero();
    da(0, 0) = w(rng);
    da(1, 1) = 1.0 - da(0, 0).real();
    db(0, 0) = w(rng);
    db(1, 1) = 1.0 - db(0, 0).real();
    const CMat4 rho = kron(a * da * a.adjoint(), b * db * b.adjoint());
    ASSERT_NEAR(concurrence_numeric(DensityMatrix4::trusted(rho)), 0.0, 1e-10);
  }
}

TEST(ConcurrenceNumeric, FigureOnePeak) {
  const auto rho = evolve_analytic({1.0, 0.0, 10.0, 1.0}, DimensionlessTime{pi / 4.0});
  EXPECT_NEAR(concurrence_numeric(rho), 0.9999546, 1e-7);
}

TEST(ConcurrenceAnalytic, ReferenceValues) {
  const double s = std::numbers::sqrt2 / 2.0;
  EXPECT_EQ(concurrence_analytic({1.0, 0.0, 4.0, 1.0}, DimensionlessTime{0.0}), 0.0);
  EXPECT_NEAR(concurrence_analytic({s, s, 0.0, 1.0}, DimensionlessTime{0.6}), 0.0, 1e-16);
  EXPECT_NEAR(concurrence_analytic({s, s, 0.1, 1.0}, DimensionlessTime{pi / 4.0}), 0.024979, 1e-6);
}

TEST(ConcurrenceFromIntensities, ReferenceValues) {
  const DimerParams p{1.0, 0.0, 10.0, 1.0};
  EXPECT_EQ(concurrence_from_intensities(p, 0.0), 0.0);
  EXPECT_NEAR(concurrence_from_intensities(p, 0.9999546021312976), 0.9999546, 1e-7);
  const double j2 = analytic_intensities(p, DimensionlessTime{pi / 6.0}).j2;
  EXPECT_NEAR(j2, 0.7499659, 1e-7);
  EXPECT_NEAR(concurrence_from_intensities(p, j2), 0.8659861, 1e-7);
  EXPECT_THROW(concurrence_from_intensities(p, std::nan("")), Error);

  // Spin-down dominated: F < 0 and J2 < 0, the product is still positive.
  const DimerParams down{0.0, 1.0, 2.0, 1.0};
  const auto g = analytic_intensities(down, DimensionlessTime{0.5});
  EXPECT_LT(g.j2, 0.0);
  EXPECT_NEAR(concurrence_from_intensities(down, g.j2), concurrence_analytic(down, DimensionlessTime{0.5}), 1e-15);
}

TEST(Concurrence, NumericMatchesClosedFormOnRandomDraws) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * pi);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = mqdimer::testing::random_params(rng);
    const DimensionlessTime t{ut(rng)};
    const double numeric = concurrence_numeric(evolve_analytic(p, t));
    const double analytic = concurrence_analytic(p, t);
    ASSERT_NEAR(numeric, analytic, 1e-10) << "trial " << trial;
    ASSERT_GE(numeric, 0.0);
    ASSERT_LE(numeric, 1.0);
    ASSERT_NEAR(concurrence_from_intensities(p, analytic_intensities(p, t).j2), analytic, 1e-12);
  }
}

TEST(Concurrence, DirectEigenRouteAgreesLoosely) {
  // The literal eig(rho rho~) route is only sqrt(eps) accurate on the
  // rank-two evolved states; it must still agree at that level.
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * pi);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = mqdimer::testing::random_params(rng);
    const auto rho = evolve_analytic(p, DimensionlessTime{ut(rng)});
    ASSERT_NEAR(concurrence_spectrum_direct(rho).concurrence(), concurrence_numeric(rho), 1e-6);
  }
}

TEST(Concurrence, SpectrumIsSortedAndNonNegative) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = concurrence_spectrum(DensityMatrix4::trusted(mqdimer::testing::random_state(rng)));
    ASSERT_TRUE(std::is_sorted(spec.lambdas.rbegin(), spec.lambdas.rend()));
    ASSERT_GE(spec.lambdas[3], 0.0);
  }
}

TEST(Concurrence, InvariantUnderLocalUnitaries) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * pi);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = mqdimer::testing::random_params(rng);
    const auto rho = evolve_analytic(p, DimensionlessTime{ut(rng)});
    const CMat4 u = kron(mqdimer::testing::random_su2(rng), mqdimer::testing::random_su2(rng));
    const auto rotated = DensityMatrix4::trusted(u * rho.matrix() * u.adjoint());
    ASSERT_NEAR(concurrence_numeric(rotated), concurrence_numeric(rho), 1e-9);
  }
}
