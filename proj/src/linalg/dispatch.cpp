#include <cstdlib>
#include <stdexcept>
#include <string>

#include "triuncert/kernels.hpp"

namespace triuncert::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::matmul, &scalar::mix_pair, &scalar::sum_abs2};

#if defined(TRIUNCERT_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::matmul, &avx2::mix_pair, &avx2::sum_abs2};
#endif

const KernelTable& select_default() {
  if (const char* env = std::getenv("TRIUNCERT_ISA")) {
    const std::string want(env);
    if (want == "scalar") return kScalar;
    if (want == "avx2" && isa_available(Isa::avx2)) return table(Isa::avx2);
  }
  if (isa_available(Isa::avx2)) return table(Isa::avx2);
  return kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(TRIUNCERT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
  if (isa_available(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

const KernelTable& table(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel ISA not available: " + std::string(isa_name(isa)));
  }
#if defined(TRIUNCERT_HAVE_AVX2)
  if (isa == Isa::avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active() {
  static const KernelTable& chosen = select_default();
  return chosen;
}

}  // namespace triuncert::kernels
