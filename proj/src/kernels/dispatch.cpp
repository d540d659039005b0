#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "variants.hpp"

namespace mqdimer::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(MQDIMER_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() noexcept {
  if (const char* forced = std::getenv("MQDIMER_ISA"); forced != nullptr && std::strcmp(forced, "scalar") == 0)
    return Isa::Scalar;
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

Isa resolve(Isa requested) noexcept { return isa_available(requested) ? requested : Isa::Scalar; }

void check_sizes(std::size_t in, std::size_t out) {
  if (out < in) throw std::invalid_argument("kernel output span shorter than input");
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: {
      static const bool ok = cpu_has_avx2();
      return ok;
    }
  }
  return false;
}

Isa active_isa() noexcept {
  static const Isa isa = detect();
  return isa;
}

void binary_entropy_batch(std::span<const double> x, std::span<double> out, Isa isa) {
  check_sizes(x.size(), out.size());
  switch (resolve(isa)) {
#if defined(MQDIMER_HAVE_AVX2)
    case Isa::Avx2: detail::binary_entropy_avx2(x, out); return;
#endif
    default: detail::binary_entropy_scalar(x, out); return;
  }
}

void conditional_entropy_batch(const MeasurementModel& model, const DirectionBatch& dirs, std::span<double> out,
                               Isa isa) {
  if (dirs.y.size() != dirs.x.size() || dirs.z.size() != dirs.x.size())
    throw std::invalid_argument("direction batch components differ in length");
  check_sizes(dirs.size(), out.size());
  switch (resolve(isa)) {
#if defined(MQDIMER_HAVE_AVX2)
    case Isa::Avx2: detail::conditional_entropy_avx2(model, dirs, out); return;
#endif
    default: detail::conditional_entropy_scalar(model, dirs, out); return;
  }
}

}  // namespace mqdimer::kernels
