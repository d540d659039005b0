#include <cmath>
#include <cstdio>
#include <string>

#include "mqdimer/cli.hpp"

namespace mqdimer::cli {

namespace {

std::string sig9(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.9g", v);
  return buf;
}

}  // namespace

std::string show_state(cplx alpha, cplx beta, double b, double tau_bar, bool renormalize) {
  SweepConfig cfg;
  cfg.alpha = alpha;
  cfg.beta = beta;
  cfg.b = b;
  cfg.renormalize = renormalize;
  // Reuse sweep validation for the amplitudes and b; the range is a stand-in.
  cfg.tau_bar_start = 0.0;
  cfg.tau_bar_end = 1.0;
  cfg.quantities = {Quantity::G0};
  cfg = validated(cfg);
  if (!std::isfinite(tau_bar) || tau_bar < 0.0) throw Error(ErrorCode::InvalidConfig, "tau_bar must be finite and >= 0");

  const auto rho = evolve_analytic(dimer_params(cfg), DimensionlessTime{tau_bar});
  std::string out = "# rho(tau_bar = " + format_number(tau_bar) + "), alpha = " + format_number(cfg.alpha.real()) +
                    (cfg.alpha.imag() < 0 ? "" : "+") + format_number(cfg.alpha.imag()) +
                    "i, beta = " + format_number(cfg.beta.real()) + (cfg.beta.imag() < 0 ? "" : "+") +
                    format_number(cfg.beta.imag()) + "i, b = " + format_number(cfg.b) + "\n";
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const cplx v = rho(r, c);
      const double im = v.imag() == 0.0 ? 0.0 : v.imag();
      if (c > 0) out += "  ";
      out += sig9(v.real());
      out += std::signbit(im) ? "-" : "+";
      out += sig9(std::abs(im));
      out += 'i';
    }
    out += '\n';
  }
  return out;
}

}  // namespace mqdimer::cli
