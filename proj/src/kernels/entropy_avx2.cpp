// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma
// and must only be entered after a runtime CPU check.

#include <immintrin.h>

#include <cstdint>

#include "entropy_common.hpp"
#include "variants.hpp"

namespace mqdimer::kernels::detail {

namespace {

// Natural logarithm of four positive normal doubles. Range reduction to
// m in [sqrt(1/2), sqrt(2)) followed by the Cephes rational approximation of
// log(1+z); accurate to about one ulp.
inline __m256d log_pd(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);

  // Exponent field as a double via the 2^52 bias trick (AVX2 has no
  // int64 -> double conversion).
  const __m256i exp_field = _mm256_srli_epi64(bits, 52);
  const __m256d two52 = _mm256_set1_pd(4503599627370496.0);
  const __m256d exp_biased =
      _mm256_sub_pd(_mm256_castsi256_pd(_mm256_or_si256(exp_field, _mm256_castpd_si256(two52))), two52);
  __m256d e = _mm256_sub_pd(exp_biased, _mm256_set1_pd(1023.0));

  const __m256i mant_mask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL);
  const __m256i one_bits = _mm256_set1_epi64x(0x3FF0000000000000LL);
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(_mm256_and_si256(bits, mant_mask), one_bits));

  const __m256d sqrt2 = _mm256_set1_pd(1.41421356237309504880);
  const __m256d big = _mm256_cmp_pd(m, sqrt2, _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
  e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));

  const __m256d z = _mm256_sub_pd(m, _mm256_set1_pd(1.0));
  const __m256d z2 = _mm256_mul_pd(z, z);

  __m256d p = _mm256_set1_pd(1.01875663804580931796e-4);
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(4.97494994976747001425e-1));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(4.70579119878881725854e0));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.44989225341610930846e1));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(1.79368678507819816313e1));
  p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(7.70838733755885391666e0));

  __m256d q = _mm256_add_pd(z, _mm256_set1_pd(1.12873587189167450590e1));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(4.52279145837532221105e1));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(8.29875266912776603211e1));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(7.11544750618563894466e1));
  q = _mm256_fmadd_pd(q, z, _mm256_set1_pd(2.31251620126765340583e1));

  __m256d y = _mm256_mul_pd(_mm256_mul_pd(z, z2), _mm256_div_pd(p, q));
  y = _mm256_fmadd_pd(e, _mm256_set1_pd(-2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z2, y);
  __m256d r = _mm256_add_pd(z, y);
  r = _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), r);
  return r;
}

// -v log2 v, zero where v <= kTinyEigenvalue.
inline __m256d neg_xlog2x_pd(__m256d v) {
  const __m256d tiny = _mm256_set1_pd(kTinyEigenvalue);
  const __m256d live = _mm256_cmp_pd(v, tiny, _CMP_GT_OQ);
  const __m256d safe = _mm256_blendv_pd(_mm256_set1_pd(1.0), v, live);
  const __m256d term = _mm256_mul_pd(_mm256_mul_pd(safe, log_pd(safe)), _mm256_set1_pd(-kInvLn2));
  return _mm256_and_pd(live, term);
}

}  // namespace

void binary_entropy_avx2(std::span<const double> x, std::span<double> out) {
  const std::size_t n = x.size();
  const std::size_t vec_end = n - n % 4;
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d lo = _mm256_loadu_pd(x.data() + i);
    const __m256d hi = _mm256_sub_pd(one, lo);
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(neg_xlog2x_pd(lo), neg_xlog2x_pd(hi)));
  }
  if (vec_end < n) binary_entropy_scalar(x.subspan(vec_end), out.subspan(vec_end));
}

void conditional_entropy_avx2(const MeasurementModel& m, const DirectionBatch& dirs, std::span<double> out) {
  const std::size_t n = dirs.size();
  const std::size_t vec_end = n - n % 4;

  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d min_p = _mm256_set1_pd(kMinOutcomeProbability);
  __m256d rm[3], rk[3], t[9];
  for (int i = 0; i < 3; ++i) {
    rm[i] = _mm256_set1_pd(m.measured[i]);
    rk[i] = _mm256_set1_pd(m.kept[i]);
  }
  for (int i = 0; i < 9; ++i) t[i] = _mm256_set1_pd(m.corr[i]);

  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d nx = _mm256_loadu_pd(dirs.x.data() + i);
    const __m256d ny = _mm256_loadu_pd(dirs.y.data() + i);
    const __m256d nz = _mm256_loadu_pd(dirs.z.data() + i);

    // Same association order as the scalar reference.
    const __m256d nb = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(nx, rm[0]), _mm256_mul_pd(ny, rm[1])),
                                     _mm256_mul_pd(nz, rm[2]));
    __m256d tn[3];
    for (int r = 0; r < 3; ++r)
      tn[r] = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(t[3 * r], nx), _mm256_mul_pd(t[3 * r + 1], ny)),
                            _mm256_mul_pd(t[3 * r + 2], nz));

    __m256d total = _mm256_setzero_pd();
    for (const double sign_value : {1.0, -1.0}) {
      const __m256d sign = _mm256_set1_pd(sign_value);
      const __m256d p = _mm256_mul_pd(half, _mm256_add_pd(one, _mm256_mul_pd(sign, nb)));
      const __m256d live = _mm256_cmp_pd(p, min_p, _CMP_GE_OQ);

      const __m256d vx = _mm256_add_pd(rk[0], _mm256_mul_pd(sign, tn[0]));
      const __m256d vy = _mm256_add_pd(rk[1], _mm256_mul_pd(sign, tn[1]));
      const __m256d vz = _mm256_add_pd(rk[2], _mm256_mul_pd(sign, tn[2]));
      const __m256d norm2 = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy)),
                                          _mm256_mul_pd(vz, vz));
      const __m256d safe_p = _mm256_blendv_pd(one, p, live);
      const __m256d len =
          _mm256_min_pd(_mm256_div_pd(_mm256_sqrt_pd(norm2), _mm256_mul_pd(_mm256_set1_pd(2.0), safe_p)), one);
      const __m256d lo = _mm256_mul_pd(half, _mm256_sub_pd(one, len));
      const __m256d hi = _mm256_mul_pd(half, _mm256_add_pd(one, len));
      const __m256d h = _mm256_add_pd(neg_xlog2x_pd(lo), neg_xlog2x_pd(hi));
      total = _mm256_add_pd(total, _mm256_and_pd(live, _mm256_mul_pd(p, h)));
    }
    _mm256_storeu_pd(out.data() + i, total);
  }

  for (std::size_t i = vec_end; i < n; ++i) out[i] = conditional_entropy_one(m, dirs.x[i], dirs.y[i], dirs.z[i]);
}

}  // namespace mqdimer::kernels::detail
