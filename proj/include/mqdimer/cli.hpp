#pragma once

// Sweep driver behind the `mqdimer` command-line tool.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mqdimer/dimer_model.hpp"

namespace mqdimer::cli {

enum class Quantity { G0, J2, Concurrence, Discord };
enum class Format { Csv, Svg, Both };

inline constexpr std::string_view kCsvHeader = "tau_bar,g0,g2,gm2,j2,concurrence,discord";

struct SweepConfig {
  cplx alpha{1.0, 0.0};
  cplx beta{0.0, 0.0};
  double b = 0.0;
  double tau_bar_start = 0.0;
  double tau_bar_end = 0.0;
  int points = 2;
  std::vector<Quantity> quantities;
  int measured_subsystem = 2;
  std::string output_path = "sweep.csv";
  Format format = Format::Csv;
  bool renormalize = false;

  bool wants(Quantity q) const;
};

/// Parses "re", "re,im" or "r@phase_degrees". Throws InvalidConfig naming the
/// character position where parsing failed.
cplx parse_complex(std::string_view text);

Quantity parse_quantity(std::string_view name);
std::vector<Quantity> parse_quantities(std::string_view comma_list);
Format parse_format(std::string_view name);
std::string_view quantity_name(Quantity q);

/// Shortest decimal that reads back to the same double; "-0" prints as "0".
std::string format_number(double value);

/// Overlays the keys present in a JSON object onto `cfg`. Throws InvalidConfig
/// on unknown keys or wrong types and IoError if the file cannot be read.
void apply_json(SweepConfig& cfg, std::string_view json_text);
void apply_json_file(SweepConfig& cfg, const std::filesystem::path& path);

/// Throws InvalidConfig on any violated constraint; scales the amplitudes
/// when `renormalize` is set.
SweepConfig validated(SweepConfig cfg);

SweepConfig preset_fig1();
SweepConfig preset_fig2();

/// Dimer parameters of a validated config (d = 1, so tau = tau_bar).
DimerParams dimer_params(const SweepConfig& cfg);

struct SweepRow {
  double tau_bar = 0.0;
  std::optional<double> g0, g2, gm2, j2, concurrence, discord;
};

/// tau_bar of sample i on the uniform grid; the last sample is exactly the end.
double sample_tau_bar(const SweepConfig& cfg, int i);

SweepRow compute_row(const SweepConfig& cfg, double tau_bar);
std::vector<SweepRow> compute_sweep(const SweepConfig& cfg);

std::string render_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(std::string_view text);
std::string render_svg(const std::vector<SweepRow>& rows, const SweepConfig& cfg);

struct OutputPaths {
  std::optional<std::filesystem::path> csv;
  std::optional<std::filesystem::path> svg;
};
OutputPaths output_paths(const SweepConfig& cfg);

/// Validates, computes and writes the requested files. Throws InvalidConfig
/// or IoError.
OutputPaths run_sweep(const SweepConfig& cfg);

/// Evolved density matrix, row-major, real and imaginary parts to nine
/// significant digits.
std::string show_state(cplx alpha, cplx beta, double b, double tau_bar, bool renormalize = false);

}  // namespace mqdimer::cli
