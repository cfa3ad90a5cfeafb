// AVX2 variants of the reduction kernels. Compiled with -mavx2 only on
// x86-64; callers must check avx2_available() before entering.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cassert>

#include "fairkit/kernels.hpp"

namespace fairkit::kernels {
namespace {

// Four independent Neumaier accumulators, one per lane. Lane sums and
// compensations are merged through a scalar accumulator at the end, in a
// fixed order, so results are deterministic.
struct VecNeumaier {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  inline void add(__m256d v) {
    const __m256d t = _mm256_add_pd(sum, v);
    const __m256d abs_mask =
        _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    const __m256d abs_sum = _mm256_and_pd(sum, abs_mask);
    const __m256d abs_v = _mm256_and_pd(v, abs_mask);
    const __m256d err_sum_big = _mm256_add_pd(_mm256_sub_pd(sum, t), v);
    const __m256d err_v_big = _mm256_add_pd(_mm256_sub_pd(v, t), sum);
    const __m256d sum_is_big = _mm256_cmp_pd(abs_sum, abs_v, _CMP_GE_OQ);
    comp = _mm256_add_pd(comp,
                         _mm256_blendv_pd(err_v_big, err_sum_big, sum_is_big));
    sum = t;
  }

  inline void drain(NeumaierSum& acc) const {
    alignas(32) double s[4];
    alignas(32) double c[4];
    _mm256_store_pd(s, sum);
    _mm256_store_pd(c, comp);
    for (int i = 0; i < 4; ++i) acc.add(s[i]);
    for (int i = 0; i < 4; ++i) acc.add(c[i]);
  }
};

}  // namespace

Moments2 moments2_avx2(std::span<const double> xs) {
  VecNeumaier v1;
  VecNeumaier v2;
  const std::size_t n = xs.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    v1.add(x);
    v2.add(_mm256_mul_pd(x, x));
  }
  NeumaierSum s1;
  NeumaierSum s2;
  v1.drain(s1);
  v2.drain(s2);
  for (; i < n; ++i) {
    const double x = xs[i];
    s1.add(x);
    s2.add(x * x);
  }
  return {s1.value(), s2.value()};
}

Moments4 moments4_avx2(std::span<const double> xs) {
  VecNeumaier v1;
  VecNeumaier v2;
  VecNeumaier v3;
  VecNeumaier v4;
  const std::size_t n = xs.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    const __m256d x2 = _mm256_mul_pd(x, x);
    v1.add(x);
    v2.add(x2);
    v3.add(_mm256_mul_pd(x2, x));
    v4.add(_mm256_mul_pd(x2, x2));
  }
  NeumaierSum s1;
  NeumaierSum s2;
  NeumaierSum s3;
  NeumaierSum s4;
  v1.drain(s1);
  v2.drain(s2);
  v3.drain(s3);
  v4.drain(s4);
  for (; i < n; ++i) {
    const double x = xs[i];
    const double x2 = x * x;
    s1.add(x);
    s2.add(x2);
    s3.add(x2 * x);
    s4.add(x2 * x2);
  }
  return {s1.value(), s2.value(), s3.value(), s4.value()};
}

MinMax minmax_avx2(std::span<const double> xs) {
  assert(!xs.empty());
  const std::size_t n = xs.size();
  double lo = xs[0];
  double hi = xs[0];
  std::size_t i = 0;
  if (n >= 4) {
    __m256d vlo = _mm256_loadu_pd(xs.data());
    __m256d vhi = vlo;
    for (i = 4; i + 4 <= n; i += 4) {
      const __m256d x = _mm256_loadu_pd(xs.data() + i);
      vlo = _mm256_min_pd(vlo, x);
      vhi = _mm256_max_pd(vhi, x);
    }
    alignas(32) double a[4];
    alignas(32) double b[4];
    _mm256_store_pd(a, vlo);
    _mm256_store_pd(b, vhi);
    lo = a[0];
    hi = b[0];
    for (int k = 1; k < 4; ++k) {
      if (a[k] < lo) lo = a[k];
      if (b[k] > hi) hi = b[k];
    }
  }
  for (; i < n; ++i) {
    const double x = xs[i];
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  return {lo, hi};
}

}  // namespace fairkit::kernels

#endif  // x86-64
