#include <fstream>

#include "mqdimer/cli.hpp"
#include "mqdimer/coherence.hpp"
#include "mqdimer/discord.hpp"
#include "mqdimer/entanglement.hpp"

namespace mqdimer::cli {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to " + path.string() + " failed");
}

}  // namespace

double sample_tau_bar(const SweepConfig& cfg, int i) {
  if (i == cfg.points - 1) return cfg.tau_bar_end;
  return cfg.tau_bar_start + (cfg.tau_bar_end - cfg.tau_bar_start) * i / (cfg.points - 1);
}

SweepRow compute_row(const SweepConfig& cfg, double tau_bar) {
  const DimerParams p = dimer_params(cfg);
  const DimensionlessTime t{tau_bar};
  SweepRow row;
  row.tau_bar = tau_bar;

  if (cfg.wants(Quantity::G0) || cfg.wants(Quantity::J2)) {
    const auto g = matrix_intensities(p, t);
    if (cfg.wants(Quantity::G0)) row.g0 = g.g0;
    if (cfg.wants(Quantity::J2)) {
      row.g2 = g.g_plus2;
      row.gm2 = g.g_minus2;
      row.j2 = g.j2;
    }
  }
  if (cfg.wants(Quantity::Concurrence) || cfg.wants(Quantity::Discord)) {
    const auto rho = evolve_analytic(p, t);
    if (cfg.wants(Quantity::Concurrence)) row.concurrence = concurrence_numeric(rho);
    if (cfg.wants(Quantity::Discord)) row.discord = discord(rho, Subsystem::from_index(cfg.measured_subsystem)).q;
  }
  return row;
}

std::vector<SweepRow> compute_sweep(const SweepConfig& cfg) {
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(cfg.points));
  for (int i = 0; i < cfg.points; ++i) rows.push_back(compute_row(cfg, sample_tau_bar(cfg, i)));
  return rows;
}

OutputPaths run_sweep(const SweepConfig& raw) {
  const SweepConfig cfg = validated(raw);
  const auto rows = compute_sweep(cfg);
  const OutputPaths paths = output_paths(cfg);
  if (paths.csv) write_file(*paths.csv, render_csv(rows));
  if (paths.svg) write_file(*paths.svg, render_svg(rows, cfg));
  return paths;
}

}  // namespace mqdimer::cli
