#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "mqdimer/cli.hpp"

namespace mqdimer::cli {

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidConfig, why); }

cplx json_complex(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  invalid("'" + key + "' must be a complex literal string, a number, or [re, im]");
}

double json_number(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) invalid("'" + key + "' must be a number");
  return v.get<double>();
}

int json_int(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer()) invalid("'" + key + "' must be an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) invalid("'" + key + "' out of range");
  return static_cast<int>(x);
}

std::string json_string(const nlohmann::json& v, const std::string& key) {
  if (!v.is_string()) invalid("'" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

bool SweepConfig::wants(Quantity q) const { return std::find(quantities.begin(), quantities.end(), q) != quantities.end(); }

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::G0: return "g0";
    case Quantity::J2: return "j2";
    case Quantity::Concurrence: return "concurrence";
    case Quantity::Discord: return "discord";
  }
  return "?";
}

Quantity parse_quantity(std::string_view name) {
  for (auto q : {Quantity::G0, Quantity::J2, Quantity::Concurrence, Quantity::Discord})
    if (quantity_name(q) == name) return q;
  invalid("unknown quantity '" + std::string(name) + "' (expected g0, j2, concurrence, discord)");
}

std::vector<Quantity> parse_quantities(std::string_view list) {
  std::vector<Quantity> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = std::min(list.find(',', start), list.size());
    std::string_view item = list.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const Quantity q = parse_quantity(item);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    start = comma + 1;
  }
  return out;
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "svg") return Format::Svg;
  if (name == "both") return Format::Both;
  invalid("unknown format '" + std::string(name) + "' (expected csv, svg, both)");
}

void apply_json(SweepConfig& cfg, std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    invalid(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) invalid("config must be a JSON object");

  for (const auto& [key, v] : doc.items()) {
    if (key == "alpha") cfg.alpha = json_complex(v, key);
    else if (key == "beta") cfg.beta = json_complex(v, key);
    else if (key == "b") cfg.b = json_number(v, key);
    else if (key == "tau_bar_start") cfg.tau_bar_start = json_number(v, key);
    else if (key == "tau_bar_end") cfg.tau_bar_end = json_number(v, key);
    else if (key == "points") cfg.points = json_int(v, key);
    else if (key == "measured_subsystem") cfg.measured_subsystem = json_int(v, key);
    else if (key == "output_path") cfg.output_path = json_string(v, key);
    else if (key == "format") cfg.format = parse_format(json_string(v, key));
    else if (key == "renormalize") {
      if (!v.is_boolean()) invalid("'renormalize' must be a boolean");
      cfg.renormalize = v.get<bool>();
    } else if (key == "quantities") {
      if (v.is_string()) {
        cfg.quantities = parse_quantities(v.get<std::string>());
      } else if (v.is_array()) {
        cfg.quantities.clear();
        for (const auto& item : v) {
          const Quantity q = parse_quantity(json_string(item, key));
          if (std::find(cfg.quantities.begin(), cfg.quantities.end(), q) == cfg.quantities.end())
            cfg.quantities.push_back(q);
        }
      } else {
        invalid("'quantities' must be a list or a comma-separated string");
      }
    } else {
      invalid("unknown config key '" + key + "'");
    }
  }
}

void apply_json_file(SweepConfig& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  apply_json(cfg, text.str());
}

SweepConfig validated(SweepConfig cfg) {
  const double norm = std::norm(cfg.alpha) + std::norm(cfg.beta);
  if (!std::isfinite(norm)) invalid("amplitudes must be finite");
  if (cfg.renormalize) {
    if (!(norm > 0.0)) invalid("cannot renormalize zero amplitudes");
    const double scale = 1.0 / std::sqrt(norm);
    cfg.alpha *= scale;
    cfg.beta *= scale;
  } else if (std::abs(norm - 1.0) > 1e-9) {
    invalid("|alpha|^2 + |beta|^2 = " + format_number(norm) + " (use --renormalize to rescale)");
  }
  if (!std::isfinite(cfg.b) || cfg.b < 0.0) invalid("b must be finite and >= 0");
  if (!std::isfinite(cfg.tau_bar_start) || !std::isfinite(cfg.tau_bar_end)) invalid("tau range must be finite");
  if (cfg.tau_bar_start < 0.0) invalid("tau_bar_start must be >= 0");
  if (!(cfg.tau_bar_end > cfg.tau_bar_start)) invalid("tau_bar_end must exceed tau_bar_start");
  if (cfg.points < 2 || cfg.points > 1'000'000) invalid("points must lie in [2, 1000000]");
  if (cfg.quantities.empty()) invalid("no quantities requested");
  if (cfg.measured_subsystem != 1 && cfg.measured_subsystem != 2) invalid("measured subsystem must be 1 or 2");
  if (cfg.output_path.empty()) invalid("output path is empty");
  return cfg;
}

SweepConfig preset_fig1() {
  SweepConfig cfg;
  cfg.alpha = 1.0;
  cfg.beta = 0.0;
  cfg.b = 10.0;
  cfg.tau_bar_start = 0.0;
  cfg.tau_bar_end = std::numbers::pi;
  cfg.points = 501;
  cfg.quantities = {Quantity::J2, Quantity::Concurrence};
  cfg.output_path = "fig1.csv";
  cfg.format = Format::Both;
  return cfg;
}

SweepConfig preset_fig2() {
  SweepConfig cfg;
  cfg.alpha = std::numbers::sqrt2 / 2.0;
  cfg.beta = std::numbers::sqrt2 / 2.0;
  cfg.b = 0.1;
  cfg.tau_bar_start = 0.0;
  cfg.tau_bar_end = std::numbers::pi;
  cfg.points = 201;
  cfg.quantities = {Quantity::Discord};
  cfg.measured_subsystem = 2;
  cfg.output_path = "fig2.csv";
  cfg.format = Format::Both;
  return cfg;
}

DimerParams dimer_params(const SweepConfig& cfg) { return DimerParams{cfg.alpha, cfg.beta, cfg.b, 1.0}; }

OutputPaths output_paths(const SweepConfig& cfg) {
  const std::filesystem::path out(cfg.output_path);
  switch (cfg.format) {
    case Format::Csv: return {out, std::nullopt};
    case Format::Svg: return {std::nullopt, out};
    case Format::Both: {
      auto csv = out;
      auto svg = out;
      return {csv.replace_extension(".csv"), svg.replace_extension(".svg")};
    }
  }
  return {};
}

}  // namespace mqdimer::cli
