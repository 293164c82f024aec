// Compiled with -mavx2 only. Callers reach these through kernels::table(),
// which checks CPU support first.

#include <immintrin.h>

#include "triuncert/kernels.hpp"

namespace triuncert::kernels::avx2 {

namespace {

// Two complex values per register: [re0, im0, re1, im1].
inline __m256d cmul(__m256d v, __m256d coef_re, __m256d coef_im) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(v, coef_re), _mm256_mul_pd(swapped, coef_im));
}

inline __m256d load_pair(const cplx* lo, const cplx* hi) {
  const __m128d l = _mm_loadu_pd(reinterpret_cast<const double*>(lo));
  const __m128d h = _mm_loadu_pd(reinterpret_cast<const double*>(hi));
  return _mm256_insertf128_pd(_mm256_castpd128_pd256(l), h, 1);
}

inline void store_pair(cplx* lo, cplx* hi, __m256d v) {
  _mm_storeu_pd(reinterpret_cast<double*>(lo), _mm256_castpd256_pd128(v));
  _mm_storeu_pd(reinterpret_cast<double*>(hi), _mm256_extractf128_pd(v, 1));
}

}  // namespace

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < n * m; ++i) c[i] = 0.0;
  const std::size_t m2 = m & ~std::size_t{1};
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * m);
    for (std::size_t p = 0; p < k; ++p) {
      const cplx coef = a[i * k + p];
      const __m256d cre = _mm256_set1_pd(coef.real());
      const __m256d cim = _mm256_set1_pd(coef.imag());
      const double* brow = reinterpret_cast<const double*>(b + p * m);
      std::size_t j = 0;
      for (; j < m2; j += 2) {
        const __m256d prod = cmul(_mm256_loadu_pd(brow + 2 * j), cre, cim);
        _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(_mm256_loadu_pd(crow + 2 * j), prod));
      }
      if (j < m) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += br * coef.real() - bi * coef.imag();
        crow[2 * j + 1] += bi * coef.real() + br * coef.imag();
      }
    }
  }
}

void mix_pair(cplx* x, cplx* y, std::size_t count, std::size_t stride, const Mix2& mix) {
  const __m256d xx_re = _mm256_set1_pd(mix.xx.real()), xx_im = _mm256_set1_pd(mix.xx.imag());
  const __m256d xy_re = _mm256_set1_pd(mix.xy.real()), xy_im = _mm256_set1_pd(mix.xy.imag());
  const __m256d yx_re = _mm256_set1_pd(mix.yx.real()), yx_im = _mm256_set1_pd(mix.yx.imag());
  const __m256d yy_re = _mm256_set1_pd(mix.yy.real()), yy_im = _mm256_set1_pd(mix.yy.imag());
  std::size_t i = 0;
  for (; i + 1 < count; i += 2) {
    cplx* x0 = x + i * stride;
    cplx* x1 = x0 + stride;
    cplx* y0 = y + i * stride;
    cplx* y1 = y0 + stride;
    const __m256d xv = load_pair(x0, x1);
    const __m256d yv = load_pair(y0, y1);
    const __m256d nx = _mm256_add_pd(cmul(xv, xx_re, xx_im), cmul(yv, xy_re, xy_im));
    const __m256d ny = _mm256_add_pd(cmul(xv, yx_re, yx_im), cmul(yv, yy_re, yy_im));
    store_pair(x0, x1, nx);
    store_pair(y0, y1, ny);
  }
  if (i < count) scalar::mix_pair(x + i * stride, y + i * stride, 1, stride, mix);
}

double sum_abs2(const cplx* v, std::size_t count) {
  const double* d = reinterpret_cast<const double*>(v);
  const std::size_t n = 2 * count;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(d + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(x, x));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += d[i] * d[i];
  return s;
}

}  // namespace triuncert::kernels::avx2
