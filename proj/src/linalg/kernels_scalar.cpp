#include "triuncert/kernels.hpp"

namespace triuncert::kernels::scalar {

// Complex arithmetic is spelled out on (re, im) pairs so the evaluation order
// matches the SIMD variants exactly; std::complex operator* may take a
// different path for inf/nan handling.

void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < n * m; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cplx* crow = c + i * m;
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[i * k + p].real();
      const double ai = a[i * k + p].imag();
      const cplx* brow = b + p * m;
      for (std::size_t j = 0; j < m; ++j) {
        const double br = brow[j].real();
        const double bi = brow[j].imag();
        const double pr = br * ar - bi * ai;
        const double pi = bi * ar + br * ai;
        crow[j] = cplx(crow[j].real() + pr, crow[j].imag() + pi);
      }
    }
  }
}

namespace {

inline cplx mul(cplx coef, cplx v) {
  const double pr = v.real() * coef.real() - v.imag() * coef.imag();
  const double pi = v.imag() * coef.real() + v.real() * coef.imag();
  return {pr, pi};
}

inline cplx add(cplx u, cplx v) { return {u.real() + v.real(), u.imag() + v.imag()}; }

}  // namespace

void mix_pair(cplx* x, cplx* y, std::size_t count, std::size_t stride, const Mix2& mix) {
  for (std::size_t i = 0; i < count; ++i) {
    const cplx xv = x[i * stride];
    const cplx yv = y[i * stride];
    x[i * stride] = add(mul(mix.xx, xv), mul(mix.xy, yv));
    y[i * stride] = add(mul(mix.yx, xv), mul(mix.yy, yv));
  }
}

double sum_abs2(const cplx* v, std::size_t count) {
  double s = 0.0;
  for (std::size_t i = 0; i < count; ++i) s += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
  return s;
}

}  // namespace triuncert::kernels::scalar
