// mqdimer: MQ NMR dynamics of a dipolar-coupled spin pair.
//
//   mqdimer sweep --alpha 1 --beta 0 --b 10 --tau-end 3.14159 --points 501 --quantities j2,concurrence
//   mqdimer state --alpha 1 --beta 0 --b 10 --tau 0.785398
//   mqdimer fig1 [--out fig1.csv] [--format both]
//   mqdimer fig2 [--out fig2.csv] [--format both]
//
// Exit codes: 0 success, 2 invalid configuration, 3 I/O failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mqdimer/cli.hpp"
#include "mqdimer/kernels.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct SweepFlags {
  std::optional<std::string> alpha, beta, quantities, out, format, config;
  std::optional<double> b, tau_start, tau_end;
  std::optional<int> points, measured;
  std::optional<unsigned long> seed;  // reserved; every algorithm is deterministic
  bool renormalize = false;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--config", f.config, "JSON file with sweep settings; flags override it");
  cmd->add_option("--alpha", f.alpha, "amplitude of |0> for spin 1: re | re,im | r@degrees");
  cmd->add_option("--beta", f.beta, "amplitude of |1> for spin 1");
  cmd->add_option("--b", f.b, "hbar*omega0/kT");
  cmd->add_option("--tau-start", f.tau_start, "first tau_bar = d*tau");
  cmd->add_option("--tau-end", f.tau_end, "last tau_bar");
  cmd->add_option("--points", f.points, "number of samples (>= 2)");
  cmd->add_option("--quantities", f.quantities, "comma list of g0,j2,concurrence,discord");
  cmd->add_option("--measured", f.measured, "measured spin for discord (1 or 2)");
  cmd->add_option("--out", f.out, "output path");
  cmd->add_option("--format", f.format, "csv | svg | both");
  cmd->add_option("--seed", f.seed, "reserved, unused");
  cmd->add_flag("--renormalize", f.renormalize, "rescale alpha, beta to unit norm");
}

void apply_flags(mqdimer::cli::SweepConfig& cfg, const SweepFlags& f) {
  using namespace mqdimer::cli;
  if (f.config) apply_json_file(cfg, *f.config);
  if (f.alpha) cfg.alpha = parse_complex(*f.alpha);
  if (f.beta) cfg.beta = parse_complex(*f.beta);
  if (f.b) cfg.b = *f.b;
  if (f.tau_start) cfg.tau_bar_start = *f.tau_start;
  if (f.tau_end) cfg.tau_bar_end = *f.tau_end;
  if (f.points) cfg.points = *f.points;
  if (f.quantities) cfg.quantities = parse_quantities(*f.quantities);
  if (f.measured) cfg.measured_subsystem = *f.measured;
  if (f.out) cfg.output_path = *f.out;
  if (f.format) cfg.format = parse_format(*f.format);
  if (f.renormalize) cfg.renormalize = true;
}

void report(const mqdimer::cli::OutputPaths& paths) {
  if (paths.csv) std::cout << "wrote " << paths.csv->string() << '\n';
  if (paths.svg) std::cout << "wrote " << paths.svg->string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mqdimer::cli;

  CLI::App app{"MQ NMR dynamics, concurrence and discord of a spin dimer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mqdimer 1.0");
  bool show_isa = false;
  app.add_flag("--isa", show_isa, "print the selected kernel variant to stderr");

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "tau_bar sweep of intensities, concurrence and discord");
  add_sweep_flags(sweep, sweep_flags);

  std::string alpha = "1", beta = "0";
  double b = 0.0, tau = 0.0;
  bool state_renormalize = false;
  auto* state = app.add_subcommand("state", "print the evolved density matrix");
  state->add_option("--alpha", alpha, "amplitude of |0> for spin 1");
  state->add_option("--beta", beta, "amplitude of |1> for spin 1");
  state->add_option("--b", b, "hbar*omega0/kT");
  state->add_option("--tau", tau, "tau_bar = d*tau");
  state->add_flag("--renormalize", state_renormalize, "rescale alpha, beta to unit norm");

  std::optional<std::string> fig_out, fig_format;
  auto* fig1 = app.add_subcommand("fig1", "J2 and concurrence at b = 10, alpha = 1, beta = 0");
  auto* fig2 = app.add_subcommand("fig2", "discord at b = 0.1, alpha = beta = 1/sqrt(2)");
  for (auto* fig : {fig1, fig2}) {
    fig->add_option("--out", fig_out, "output path");
    fig->add_option("--format", fig_format, "csv | svg | both");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  if (show_isa) std::cerr << "kernels: " << mqdimer::kernels::isa_name(mqdimer::kernels::active_isa()) << '\n';

  try {
    if (*sweep) {
      SweepConfig cfg;
      apply_flags(cfg, sweep_flags);
      report(run_sweep(cfg));
    } else if (*state) {
      std::cout << show_state(parse_complex(alpha), parse_complex(beta), b, tau, state_renormalize);
    } else {
      SweepConfig cfg = *fig1 ? preset_fig1() : preset_fig2();
      if (fig_out) cfg.output_path = *fig_out;
      if (fig_format) cfg.format = parse_format(*fig_format);
      report(run_sweep(cfg));
    }
  } catch (const mqdimer::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == mqdimer::ErrorCode::IoError ? kExitIo : kExitInvalid;
  }
  return 0;
}
