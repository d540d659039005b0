// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Runtime limits are part of each criterion.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "mqdimer/cli.hpp"
#include "mqdimer/coherence.hpp"
#include "mqdimer/discord.hpp"
#include "mqdimer/entanglement.hpp"
#include "support/oracles.hpp"

using namespace mqdimer;
using std::numbers::pi;
namespace fs = std::filesystem;
namespace oracle = mqdimer::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

struct Draw {
  DimerParams p;
  DimensionlessTime t;
};

std::vector<Draw> random_draws(unsigned seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * pi);
  std::vector<Draw> out;
  for (int i = 0; i < n; ++i) {
    DimerParams p = oracle::random_params(rng, 15.0);
    p.d = 1.0;
    out.push_back({p, DimensionlessTime{ut(rng)}});
  }
  return out;
}

Outcome evolution_oracle() {
  Outcome o;
  double worst = 0.0;
  for (const auto& [p, t] : random_draws(1001, 1000)) {
    const auto a = evolve_analytic(p, t);
    const auto n = evolve_numeric(initial_state(p), p.d, t.value);
    worst = std::max(worst, max_abs<4>(a.matrix() - n.matrix()));
  }
  o.require(worst <= 1e-12, "max elementwise gap " + fmt("%.3g", worst));
  o.detail = o.ok ? "max gap " + fmt("%.3g", worst) : o.detail;
  return o;
}

Outcome intensity_closed_forms() {
  Outcome o;
  double worst = 0.0, worst_odd = 0.0;
  for (const auto& [p, t] : random_draws(1001, 1000)) {
    const auto m = matrix_intensities(p, t);
    const auto a = analytic_intensities(p, t);
    worst = std::max({worst, std::abs(m.g0 - a.g0), std::abs(m.g_plus2 - a.g_plus2), std::abs(m.g_minus2 - a.g_minus2)});
    const auto rho = decompose(evolve_analytic(p, t).matrix());
    const auto ht = decompose(ht_reference(1.0, t.value));
    worst_odd = std::max({worst_odd, std::abs(intensity(rho, ht, 1)), std::abs(intensity(rho, ht, -1))});
  }
  o.require(worst <= 1e-12, "closed-form gap " + fmt("%.3g", worst));
  o.require(worst_odd <= 1e-12, "order +-1 intensity " + fmt("%.3g", worst_odd));
  if (o.ok) o.detail = "gap " + fmt("%.3g", worst) + ", odd orders " + fmt("%.3g", worst_odd);
  return o;
}

Outcome sum_rule() {
  Outcome o;
  double worst = 0.0;
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    DimerParams p = oracle::random_params(rng, 15.0);
    p.d = 1.0;
    const double eb = std::exp(p.b);
    const double expected = (eb * std::norm(p.alpha) - std::norm(p.beta)) / (eb + 1.0);
    for (int s = 0; s < 50; ++s) {
      const auto g = matrix_intensities(p, DimensionlessTime{2.0 * pi * s / 49.0});
      worst = std::max(worst, std::abs(g.g0 + g.g_plus2 + g.g_minus2 - expected));
    }
  }
  o.require(worst <= 1e-12, "sum rule deviation " + fmt("%.3g", worst));
  if (o.ok) o.detail = "max deviation " + fmt("%.3g", worst);
  return o;
}

Outcome concurrence_consistency() {
  Outcome o;
  double worst = 0.0, worst_identity = 0.0, worst_product = 0.0;
  for (const auto& [p, t] : random_draws(1004, 1000)) {
    const double analytic = concurrence_analytic(p, t);
    worst = std::max(worst, std::abs(concurrence_numeric(evolve_analytic(p, t)) - analytic));
    worst_identity =
        std::max(worst_identity, std::abs(concurrence_from_intensities(p, analytic_intensities(p, t).j2) - analytic));
  }
  const double bell = concurrence_numeric(DensityMatrix4::trusted(oracle::bell_phi_plus()));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const CMat4 full = oracle::random_state(rng);
    const CMat4 product = kron(partial_trace(full, Subsystem::first()), partial_trace(full, Subsystem::second()));
    worst_product = std::max(worst_product, concurrence_numeric(DensityMatrix4::trusted(product)));
  }
  o.require(worst <= 1e-10, "numeric vs closed form " + fmt("%.3g", worst));
  o.require(worst_identity <= 1e-12, "intensity identity " + fmt("%.3g", worst_identity));
  o.require(std::abs(bell - 1.0) <= 1e-10, "Bell concurrence " + fmt("%.17g", bell));
  o.require(worst_product <= 1e-10, "product concurrence " + fmt("%.3g", worst_product));
  if (o.ok)
    o.detail = "gap " + fmt("%.3g", worst) + ", identity " + fmt("%.3g", worst_identity) + ", product max " +
               fmt("%.3g", worst_product);
  return o;
}

Outcome figure_one() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto cfg = cli::validated(cli::preset_fig1());
  const auto rows = cli::compute_sweep(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(rows.size() == 501, "expected 501 rows");
  if (!o.ok) return o;
  for (int i : {125, 375}) {
    o.require(std::abs(rows[i].tau_bar - (i == 125 ? pi / 4 : 3 * pi / 4)) < 1e-15, "peak sample misplaced");
    o.require(std::abs(*rows[i].j2 - 0.9999546) <= 1e-6, "J2 peak " + fmt("%.10f", *rows[i].j2));
    o.require(std::abs(*rows[i].concurrence - 0.9999546) <= 1e-6, "C peak " + fmt("%.10f", *rows[i].concurrence));
  }
  for (int i : {0, 250, 500}) {
    o.require(std::abs(*rows[i].j2) <= 1e-9, "J2 zero " + fmt("%.3g", *rows[i].j2));
    o.require(std::abs(*rows[i].concurrence) <= 1e-9, "C zero " + fmt("%.3g", *rows[i].concurrence));
  }
  // The peaks are the maxima of the curves.
  double jmax = 0.0, cmax = 0.0;
  for (const auto& r : rows) {
    jmax = std::max(jmax, *r.j2);
    cmax = std::max(cmax, *r.concurrence);
  }
  o.require(jmax == std::max(*rows[125].j2, *rows[375].j2), "J2 maximum away from the quarter periods");
  o.require(cmax == std::max(*rows[125].concurrence, *rows[375].concurrence), "C maximum away from the quarter periods");
  o.require(secs < 1.0, "sweep took " + fmt("%.3f", secs) + " s");
  if (o.ok) o.detail = "peak J2 " + fmt("%.10f", *rows[125].j2) + ", sweep " + fmt("%.3f", secs) + " s";
  return o;
}

Outcome high_temperature_direction() {
  Outcome o;
  const double s = std::numbers::sqrt2 / 2.0;
  const DimerParams p{s, s, 0.1, 1.0};
  double worst_xz = 0.0, worst_y = 1.0;
  // Product states at multiples of pi/2 have a flat landscape; skip a 0.05
  // neighbourhood of each.
  for (int i = 0; i < 50; ++i) {
    const double tau = 0.05 + (pi / 2.0 - 0.1) * (i % 25) / 24.0 + (i >= 25 ? pi / 2.0 : 0.0);
    const auto m = minimize_conditional_entropy(evolve_analytic(p, DimensionlessTime{tau}), Subsystem::second());
    worst_xz = std::max({worst_xz, std::abs(m.direction.nx()), std::abs(m.direction.nz())});
    worst_y = std::min(worst_y, std::abs(m.direction.ny()));
    if (m.flat) o.require(false, "flat landscape at tau_bar " + fmt("%.4f", tau));
  }
  o.require(worst_xz <= 1e-3, "max |nx|,|nz| " + fmt("%.3g", worst_xz));
  o.require(worst_y >= 0.999, "min |ny| " + fmt("%.6f", worst_y));
  if (o.ok) o.detail = "50 samples, max |nx|,|nz| " + fmt("%.3g", worst_xz) + ", min |ny| " + fmt("%.12f", worst_y);
  return o;
}

Outcome discord_properties() {
  Outcome o;
  const auto fig2 = cli::validated(cli::preset_fig2());
  const auto rows = cli::compute_sweep(fig2);
  o.require(*rows.front().discord <= 1e-9, "q(0) = " + fmt("%.3g", *rows.front().discord));
  double qmin = 1.0;
  for (const auto& r : rows) qmin = std::min(qmin, *r.discord);

  std::vector<DensityMatrix4> states;
  const auto p2 = cli::dimer_params(fig2);
  for (int i = 0; i < 201; i += 10) states.push_back(evolve_analytic(p2, DimensionlessTime{rows[i].tau_bar}));
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * pi);
  for (int k = 0; k < 20; ++k) states.push_back(evolve_analytic(oracle::random_params(rng), DimensionlessTime{ut(rng)}));
  for (int k = 0; k < 10; ++k) states.push_back(DensityMatrix4::trusted(oracle::random_state(rng)));

  double worst_mc = -1e300;
  for (const auto& rho : states) {
    for (int m : {1, 2}) {
      const auto r = discord(rho, Subsystem::from_index(m));
      qmin = std::min(qmin, r.q);
      const double mc = oracle::oracle_mc_minimum(rho.matrix(), m, 10000, rng);
      worst_mc = std::max(worst_mc, r.min_cond_entropy - mc);
    }
  }
  o.require(qmin >= -1e-9, "negative discord " + fmt("%.3g", qmin));
  o.require(worst_mc <= 1e-9, "optimizer above Monte-Carlo by " + fmt("%.3g", worst_mc));

  double worst_grid = 0.0;
  for (int k = 0; k < 10; ++k) {
    const auto& rho = k < 5 ? states[2 + 4 * k] : states[21 + 3 * (k - 5)];
    const int m = k % 2 == 0 ? 2 : 1;
    const auto ref = oracle::oracle_minimize(rho.matrix(), m, 1024, 2048);
    const double found = minimize_conditional_entropy(rho, Subsystem::from_index(m)).value;
    worst_grid = std::max(worst_grid, std::abs(found - ref.value));
  }
  o.require(worst_grid <= 1e-7, "dense-grid oracle gap " + fmt("%.3g", worst_grid));
  if (o.ok)
    o.detail = "min q " + fmt("%.3g", qmin) + ", optimizer minus MC <= " + fmt("%.3g", worst_mc) + ", grid gap " +
               fmt("%.3g", worst_grid);
  return o;
}

Outcome local_unitary_invariance() {
  Outcome o;
  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * pi);
  double worst_c = 0.0, worst_q = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto rho = evolve_analytic(oracle::random_params(rng, 5.0), DimensionlessTime{ut(rng)});
    const CMat4 u = kron(oracle::random_su2(rng), oracle::random_su2(rng));
    const auto rotated = DensityMatrix4::trusted(u * rho.matrix() * u.adjoint());
    worst_c = std::max(worst_c, std::abs(concurrence_numeric(rotated) - concurrence_numeric(rho)));
    worst_q = std::max(worst_q, std::abs(discord(rotated).q - discord(rho).q));
  }
  o.require(worst_c <= 1e-9, "concurrence changed by " + fmt("%.3g", worst_c));
  o.require(worst_q <= 1e-6, "discord changed by " + fmt("%.3g", worst_q));
  if (o.ok) o.detail = "concurrence " + fmt("%.3g", worst_c) + ", discord " + fmt("%.3g", worst_q);
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "mqdimer_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const char* preset : {"fig1", "fig2"}) {
    std::string runs[2];
    for (int k = 0; k < 2; ++k) {
      const fs::path out = dir / (std::string(preset) + "_" + std::to_string(k) + ".csv");
      const std::string cmd =
          std::string("\"") + MQDIMER_TOOL_PATH + "\" " + preset + " --format csv --out \"" + out.string() + "\" >/dev/null";
      const int status = std::system(cmd.c_str());
      o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, std::string(preset) + " run failed");
      runs[k] = slurp(out);
    }
    o.require(!runs[0].empty() && runs[0] == runs[1], std::string(preset) + " output differs between runs");
  }
  fs::remove_all(dir);
  if (o.ok) o.detail = "fig1 and fig2 byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "closed-form evolution matches propagator", 1.0, evolution_oracle},
      {2, "intensity closed forms", 1.0, intensity_closed_forms},
      {3, "intensity sum rule", 0.0, sum_rule},
      {4, "concurrence consistency", 0.0, concurrence_consistency},
      {5, "fig1 peaks and zeros", 1.0, figure_one},
      {6, "high-temperature optimal direction", 30.0, high_temperature_direction},
      {7, "discord properties", 300.0, discord_properties},
      {8, "local-unitary invariance", 0.0, local_unitary_invariance},
      {9, "CLI determinism", 0.0, cli_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0.0 && secs >= c.limit_s) {
      o.ok = false;
      o.detail += " (runtime " + fmt("%.3f", secs) + " s exceeds " + fmt("%g", c.limit_s) + " s)";
    }
    std::printf("%s [%d] %s: %s [%.3f s]\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
