// AVX2 + FMA variants. This translation unit alone is compiled with
// -mavx2 -mfma; callers reach it only through the runtime dispatch.

#include <immintrin.h>

#include "qusp/kernels.hpp"

namespace qusp::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

bool compiled() noexcept { return true; }

void monic_table(std::span<const double> u, std::span<const double> x,
                 std::size_t degrees, std::span<double> out) {
  const std::size_t points = x.size();
  if (degrees == 0) return;
  double* base = out.data();
  const std::size_t simd_end = points - points % kLanes;

  for (std::size_t s = 0; s < simd_end; s += kLanes) {
    const __m256d vx = _mm256_loadu_pd(x.data() + s);
    __m256d prev = _mm256_set1_pd(1.0);
    _mm256_storeu_pd(base + s, prev);
    if (degrees == 1) continue;
    __m256d cur = vx;
    _mm256_storeu_pd(base + points + s, cur);
    for (std::size_t n = 1; n + 1 < degrees; ++n) {
      // x * P_n - u_n * P_{n-1}
      const __m256d next =
          _mm256_fnmadd_pd(_mm256_set1_pd(u[n]), prev, _mm256_mul_pd(vx, cur));
      _mm256_storeu_pd(base + (n + 1) * points + s, next);
      prev = cur;
      cur = next;
    }
  }

  for (std::size_t s = simd_end; s < points; ++s) {
    double prev = 1.0;
    base[s] = prev;
    if (degrees == 1) continue;
    double cur = x[s];
    base[points + s] = cur;
    for (std::size_t n = 1; n + 1 < degrees; ++n) {
      const double next = x[s] * cur - u[n] * prev;
      base[(n + 1) * points + s] = next;
      prev = cur;
      cur = next;
    }
  }
}

void weighted_gram(std::span<const double> table, std::size_t degrees,
                   std::span<const double> w, std::span<double> gram) {
  const std::size_t points = w.size();
  const std::size_t simd_end = points - points % kLanes;
  for (std::size_t n = 0; n < degrees; ++n) {
    const double* rn = table.data() + n * points;
    for (std::size_t m = 0; m <= n; ++m) {
      const double* rm = table.data() + m * points;
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t s = 0; s < simd_end; s += kLanes) {
        const __m256d weighted =
            _mm256_mul_pd(_mm256_loadu_pd(rn + s), _mm256_loadu_pd(w.data() + s));
        acc = _mm256_fmadd_pd(weighted, _mm256_loadu_pd(rm + s), acc);
      }
      double sum = horizontal_sum(acc);
      for (std::size_t s = simd_end; s < points; ++s) sum += rn[s] * w[s] * rm[s];
      gram[n * degrees + m] = sum;
      gram[m * degrees + n] = sum;
    }
  }
}

void matmul(std::span<const double> a, std::span<const double> b, std::size_t n,
            std::span<double> c) {
  const std::size_t simd_end = n - n % kLanes;
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double* ci = c.data() + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      if (aik == 0.0) continue;
      const double* bk = b.data() + k * n;
      const __m256d va = _mm256_set1_pd(aik);
      for (std::size_t j = 0; j < simd_end; j += kLanes) {
        _mm256_storeu_pd(ci + j, _mm256_fmadd_pd(va, _mm256_loadu_pd(bk + j),
                                                 _mm256_loadu_pd(ci + j)));
      }
      for (std::size_t j = simd_end; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
}

}  // namespace qusp::kernels::avx2
