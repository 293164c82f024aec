#pragma once

// Inner-loop kernels for the dense complex linear algebra. Every kernel has a
// portable scalar reference; SIMD variants are selected at runtime from the
// CPU's capabilities. matmul and mix_pair variants are bitwise identical to
// the scalar reference. sum_abs2 reassociates the reduction and agrees only to
// rounding.

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace triuncert::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// c[n x m] = a[n x k] * b[k x m], all row-major, c overwritten.
using MatmulFn = void (*)(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t k,
                          std::size_t m);

/// Coefficients of a 2x2 complex mix x' = xx*x + xy*y, y' = yx*x + yy*y.
struct Mix2 {
  cplx xx, xy, yx, yy;
};

/// Applies a Mix2 to `count` entries of two strided vectors, in place.
using MixPairFn = void (*)(cplx* x, cplx* y, std::size_t count, std::size_t stride, const Mix2& m);

/// Sum of |v_i|^2.
using SumAbs2Fn = double (*)(const cplx* v, std::size_t count);

struct KernelTable {
  Isa isa;
  MatmulFn matmul;
  MixPairFn mix_pair;
  SumAbs2Fn sum_abs2;
};

/// Whether the running CPU (and this build) can execute the given ISA.
bool isa_available(Isa isa) noexcept;

/// ISAs usable on this machine, scalar first.
std::vector<Isa> available_isas();

/// Table for a specific ISA; throws std::invalid_argument if unavailable.
const KernelTable& table(Isa isa);

/// The table chosen at first use: the widest available ISA, unless the
/// TRIUNCERT_ISA environment variable names another one ("scalar", "avx2").
const KernelTable& active();

namespace scalar {
void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t k, std::size_t m);
void mix_pair(cplx* x, cplx* y, std::size_t count, std::size_t stride, const Mix2& mix);
double sum_abs2(const cplx* v, std::size_t count);
}  // namespace scalar

namespace avx2 {
void matmul(const cplx* a, const cplx* b, cplx* c, std::size_t n, std::size_t k, std::size_t m);
void mix_pair(cplx* x, cplx* y, std::size_t count, std::size_t stride, const Mix2& mix);
double sum_abs2(const cplx* v, std::size_t count);
}  // namespace avx2

}  // namespace triuncert::kernels
