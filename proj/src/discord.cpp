#include "mqdimer/discord.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace mqdimer {

using Vec3 = std::array<double, 3>;

namespace {

constexpr double kEquatorTol = 1e-6;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized(const Vec3& v) {
  const double n = std::sqrt(dot(v, v));
  return {v[0] / n, v[1] / n, v[2] / n};
}

// Direction parametrized by tangent-plane offsets around a base point; avoids
// the coordinate singularity of spherical angles at the poles.
struct TangentChart {
  Vec3 base, e1, e2;

  explicit TangentChart(const Vec3& n) : base(n) {
    // Helper axis least aligned with n.
    Vec3 axis{0.0, 0.0, 0.0};
    const Vec3 mag{std::abs(n[0]), std::abs(n[1]), std::abs(n[2])};
    axis[static_cast<std::size_t>(std::min_element(mag.begin(), mag.end()) - mag.begin())] = 1.0;
    e1 = normalized(cross(n, axis));
    e2 = cross(n, e1);
  }

  Vec3 at(double u, double v) const {
    return normalized({base[0] + u * e1[0] + v * e2[0], base[1] + u * e1[1] + v * e2[1],
                       base[2] + u * e1[2] + v * e2[2]});
  }
};

struct Vertex {
  double u, v, f;
};

// Nelder-Mead in the chart's (u, v) plane, standard coefficients.
template <class Objective>
Vertex nelder_mead(const Objective& f, double step, int max_iter) {
  std::array<Vertex, 3> s = {Vertex{0.0, 0.0, f(0.0, 0.0)}, Vertex{step, 0.0, f(step, 0.0)},
                             Vertex{0.0, step, f(0.0, step)}};
  const auto order = [&] {
    std::stable_sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  const auto eval = [&](double u, double v) { return Vertex{u, v, f(u, v)}; };

  for (int it = 0; it < max_iter; ++it) {
    order();
    const double size = std::max(std::hypot(s[1].u - s[0].u, s[1].v - s[0].v), std::hypot(s[2].u - s[0].u, s[2].v - s[0].v));
    if (size < 1e-11 || (s[2].f - s[0].f <= 1e-16 && size < 1e-7)) break;

    const double cu = 0.5 * (s[0].u + s[1].u);
    const double cv = 0.5 * (s[0].v + s[1].v);
    const Vertex r = eval(cu + (cu - s[2].u), cv + (cv - s[2].v));
    if (r.f < s[0].f) {
      const Vertex e = eval(cu + 2.0 * (cu - s[2].u), cv + 2.0 * (cv - s[2].v));
      s[2] = e.f < r.f ? e : r;
    } else if (r.f < s[1].f) {
      s[2] = r;
    } else {
      const bool outside = r.f < s[2].f;
      const Vertex c = outside ? eval(cu + 0.5 * (r.u - cu), cv + 0.5 * (r.v - cv))
                               : eval(cu + 0.5 * (s[2].u - cu), cv + 0.5 * (s[2].v - cv));
      if (c.f < (outside ? r.f : s[2].f)) {
        s[2] = c;
      } else {
        for (int k = 1; k < 3; ++k) s[k] = eval(s[0].u + 0.5 * (s[k].u - s[0].u), s[0].v + 0.5 * (s[k].v - s[0].v));
      }
    }
  }
  order();
  return s[0];
}

struct Candidate {
  Vec3 n;
  double f;
};

// Simplex refinement with restarts re-centred on the incumbent.
Candidate refine(const kernels::MeasurementModel& model, Candidate start, double step) {
  Candidate best = start;
  for (int restart = 0; restart < 6; ++restart) {
    const TangentChart chart(best.n);
    const auto objective = [&](double u, double v) {
      const Vec3 n = chart.at(u, v);
      return kernels::conditional_entropy_one(model, n[0], n[1], n[2]);
    };
    const Vertex v = nelder_mead(objective, step, 400);
    const bool improved = v.f < best.f - 1e-16;
    if (v.f < best.f) best = {chart.at(v.u, v.v), v.f};
    if (!improved && restart > 0) break;
    step = std::max(std::hypot(v.u, v.v), 1e-5);
  }
  return best;
}

}  // namespace

MeasurementDirection MeasurementDirection::from_components(double nx, double ny, double nz) {
  const double norm2 = nx * nx + ny * ny + nz * nz;
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-12)
    throw Error(ErrorCode::NotUnitVector, "|n|^2 = " + std::to_string(norm2));
  return {nx, ny, nz};
}

MeasurementDirection MeasurementDirection::from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

MeasurementDirection MeasurementDirection::canonical() const {
  bool flip;
  if (std::abs(nz_) > kEquatorTol)
    flip = nz_ < 0.0;
  else if (std::abs(ny_) > kEquatorTol)
    flip = ny_ < 0.0;
  else
    flip = nx_ < 0.0;
  return flip ? -*this : *this;
}

ProjectorPair projector_pair(const MeasurementDirection& n) {
  const CMat2 ns = n.nx() * pauli::x() + n.ny() * pauli::y() + n.nz() * pauli::z();
  return {0.5 * (pauli::identity() + ns), 0.5 * (pauli::identity() - ns)};
}

double conditional_entropy(const DensityMatrix4& rho, const MeasurementDirection& n, Subsystem measured) {
  const auto pair = projector_pair(n);
  double total = 0.0;
  for (const CMat2* proj : {&pair.plus, &pair.minus}) {
    const CMat4 lifted = measured == Subsystem::second() ? kron(pauli::identity(), *proj) : kron(*proj, pauli::identity());
    const CMat4 post = lifted * rho.matrix() * lifted;
    const double p = post.trace().real();
    if (p < 1e-14) continue;
    const CMat2 reduced = partial_trace(post / p, measured.other());
    const CMat2 symmetric = 0.5 * (reduced + reduced.adjoint());
    total += p * von_neumann_entropy(symmetric);
  }
  return total;
}

EntropyMinimum minimize_conditional_entropy(const DensityMatrix4& rho, Subsystem measured,
                                            const MinimizerOptions& options) {
  const auto model = measurement_model(rho, measured);
  const int nt = options.theta_points;
  const int np = options.phi_points;
  if (nt < 2 || np < 1 || options.seeds < 1) throw Error(ErrorCode::InvalidParams, "minimizer grid too small");

  const std::size_t count = static_cast<std::size_t>(nt) * static_cast<std::size_t>(np);
  std::vector<double> xs(count), ys(count), zs(count), values(count);
  for (int i = 0; i < nt; ++i) {
    const double theta = std::numbers::pi * i / (nt - 1);
    for (int j = 0; j < np; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / np;
      const std::size_t k = static_cast<std::size_t>(i) * np + j;
      xs[k] = std::sin(theta) * std::cos(phi);
      ys[k] = std::sin(theta) * std::sin(phi);
      zs[k] = std::cos(theta);
    }
  }
  kernels::conditional_entropy_batch(model, {xs, ys, zs}, values, options.isa);

  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  // Index order breaks ties, so the result does not depend on sort internals.
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b] || (values[a] == values[b] && a < b);
  });

  const double spread = values[idx.back()] - values[idx.front()];
  if (spread <= options.flat_tolerance) {
    const std::size_t k = idx.front();
    return {MeasurementDirection::from_components(xs[k], ys[k], zs[k]).canonical(), values[k], true};
  }

  // Seeds: best grid points, skipping duplicates (poles repeat across phi)
  // and antipodes (same projector pair).
  std::vector<Candidate> seeds;
  for (std::size_t k : idx) {
    const Vec3 n{xs[k], ys[k], zs[k]};
    const bool seen = std::any_of(seeds.begin(), seeds.end(),
                                  [&](const Candidate& c) { return std::abs(dot(c.n, n)) > 1.0 - 1e-9; });
    if (seen) continue;
    seeds.push_back({n, values[k]});
    if (static_cast<int>(seeds.size()) == options.seeds) break;
  }

  const double step = std::numbers::pi / (nt - 1);
  Candidate best = refine(model, seeds.front(), step);
  for (std::size_t s = 1; s < seeds.size(); ++s) {
    const Candidate c = refine(model, seeds[s], step);
    if (c.f < best.f) best = c;
  }

  const Vec3 n = normalized(best.n);
  auto dir = MeasurementDirection::from_components(n[0], n[1], n[2]).canonical();
  return {dir, kernels::conditional_entropy_one(model, dir.nx(), dir.ny(), dir.nz()), false};
}

double mutual_information(const DensityMatrix4& rho) {
  return von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::first())) +
         von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::second())) - von_neumann_entropy(rho.matrix());
}

double classical_correlations(const DensityMatrix4& rho, Subsystem measured) {
  const auto minimum = minimize_conditional_entropy(rho, measured);
  return von_neumann_entropy(partial_trace(rho.matrix(), measured.other())) - minimum.value;
}

DiscordResult discord(const DensityMatrix4& rho, Subsystem measured, const MinimizerOptions& options) {
  const auto minimum = minimize_conditional_entropy(rho, measured, options);
  const double mutual = mutual_information(rho);
  const double classical = von_neumann_entropy(partial_trace(rho.matrix(), measured.other())) - minimum.value;
  double q = mutual - classical;
  if (q < 0.0 && q >= -1e-9) q = 0.0;
  return {q, classical, mutual, minimum.direction, minimum.value, measured, minimum.flat};
}

}  // namespace mqdimer
