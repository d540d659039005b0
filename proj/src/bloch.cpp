#include <array>

#include "mqdimer/discord.hpp"

namespace mqdimer {

kernels::MeasurementModel measurement_model(const DensityMatrix4& rho, Subsystem measured) {
  const std::array<CMat2, 4> s = {pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
  const auto expect = [&](int kept_op, int measured_op) {
    const CMat4 op = measured == Subsystem::second() ? kron(s[kept_op], s[measured_op]) : kron(s[measured_op], s[kept_op]);
    return (rho.matrix() * op).trace().real();
  };

  kernels::MeasurementModel m;
  for (int i = 0; i < 3; ++i) {
    m.kept[i] = expect(i + 1, 0);
    m.measured[i] = expect(0, i + 1);
    for (int j = 0; j < 3; ++j) m.corr[3 * i + j] = expect(i + 1, j + 1);
  }
  return m;
}

}  // namespace mqdimer
