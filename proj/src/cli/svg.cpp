#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "mqdimer/cli.hpp"

namespace mqdimer::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 160.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

struct Series {
  std::string_view label;
  std::string_view color;
  std::optional<double> SweepRow::*field;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::vector<Series> series_for(const SweepConfig& cfg) {
  std::vector<Series> out;
  for (Quantity q : cfg.quantities) {
    switch (q) {
      case Quantity::G0: out.push_back({"G0", "#1f77b4", &SweepRow::g0}); break;
      case Quantity::J2: out.push_back({"J2", "#d62728", &SweepRow::j2}); break;
      case Quantity::Concurrence: out.push_back({"C", "#2ca02c", &SweepRow::concurrence}); break;
      case Quantity::Discord: out.push_back({"Q", "#9467bd", &SweepRow::discord}); break;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<SweepRow>& rows, const SweepConfig& cfg) {
  const auto series = series_for(cfg);
  const double x0 = cfg.tau_bar_start;
  const double x1 = cfg.tau_bar_end;

  double y0 = 0.0;
  double y1 = 0.0;
  for (const auto& s : series)
    for (const auto& r : rows)
      if (const auto& v = r.*(s.field)) {
        y0 = std::min(y0, *v);
        y1 = std::max(y1, *v);
      }
  if (y1 - y0 <= 0.0) y1 = y0 + 1.0;
  y1 += 0.05 * (y1 - y0);

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  const auto py = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * ph; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
         "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";

  // Axes frame and ticks.
  out += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(pw) + "\" height=\"" + fmt(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    const double xv = x0 + (x1 - x0) * k / 5.0;
    const double yv = y0 + (y1 - y0) * k / 5.0;
    out += "<line x1=\"" + fmt(px(xv)) + "\" y1=\"" + fmt(kTop + ph) + "\" x2=\"" + fmt(px(xv)) + "\" y2=\"" +
           fmt(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(px(xv)) + "\" y=\"" + fmt(kTop + ph + 20) + "\" text-anchor=\"middle\">" +
           tick_label(xv) + "</text>\n";
    out += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(py(yv)) + "\" x2=\"" + fmt(kLeft) + "\" y2=\"" +
           fmt(py(yv)) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(py(yv) + 4) + "\" text-anchor=\"end\">" + tick_label(yv) +
           "</text>\n";
  }
  out += "<text x=\"" + fmt(kLeft + pw / 2) + "\" y=\"" + fmt(kHeight - 15) +
         "\" text-anchor=\"middle\">tau_bar = d tau</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    std::string points;
    for (const auto& r : rows)
      if (const auto& v = r.*(series[s].field)) {
        if (!points.empty()) points += ' ';
        points += fmt(px(r.tau_bar)) + "," + fmt(py(*v));
      }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(series[s].color) + "\" stroke-width=\"1.5\" points=\"" +
           points + "\"/>\n";

    const double ly = kTop + 20.0 + 20.0 * static_cast<double>(s);
    const double lx = kLeft + pw + 15.0;
    out += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(lx + 25) + "\" y2=\"" + fmt(ly) +
           "\" stroke=\"" + std::string(series[s].color) + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fmt(lx + 32) + "\" y=\"" + fmt(ly + 4) + "\">" + std::string(series[s].label) + "</text>\n";
  }

  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace mqdimer::cli
