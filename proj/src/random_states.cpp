#include <cmath>
#include <random>

#include "triuncert/error.hpp"
#include "triuncert/linalg.hpp"
#include "triuncert/states.hpp"

namespace triuncert {

namespace {

// Closed-interval uniform draw with a fixed bit-level recipe, so sequences do
// not depend on the standard library's distribution implementation.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}

  double operator()(double lo, double hi) {
    constexpr double kMax53 = 9007199254740991.0;  // 2^53 - 1
    const double u = static_cast<double>(engine_() >> 11) / kMax53;
    return lo + (hi - lo) * u;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

std::array<double, 8> cascade(Uniform& f, std::size_t count) {
  std::array<double, 8> p{};
  double prev = 1.0;
  double total = 0.0;
  for (std::size_t m = 0; m < count; ++m) {
    prev = f(0.0, 1.0) * prev;
    p[m] = prev;
    total += prev;
  }
  // f(0,1) can return exactly 0 only with probability 2^-53; fall back to a
  // point mass rather than dividing by zero.
  if (total == 0.0) {
    p.fill(0.0);
    p[0] = 1.0;
    return p;
  }
  for (std::size_t m = 0; m < count; ++m) p[m] /= total;
  return p;
}

}  // namespace

RandomState random_state(std::uint64_t seed, std::size_t rank) {
  if (rank < 1 || rank > 8) throw DomainError("random_state: rank must lie in [1, 8]");
  Uniform f(seed);

  RandomStateRecipe recipe;
  recipe.seed = seed;
  recipe.probs = cascade(f, rank);

  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) recipe.t_matrix(r, c) = f(-1.0, 1.0);

  // H = D + (U^T + U) + i(L^T - L)
  const ComplexMatrix& t = recipe.t_matrix;
  ComplexMatrix h(8, 8);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      const double tr = t(r, c).real();
      const double tc = t(c, r).real();
      if (r == c) {
        h(r, c) = tr;
      } else if (r < c) {
        // upper: U_rc + (U^T)_rc = T_rc; imaginary: (L^T)_rc = T_cr
        h(r, c) = cplx(tr, tc);
      } else {
        // lower: (U^T)_rc = T_cr; imaginary: -L_rc = -T_rc
        h(r, c) = cplx(tc, -tr);
      }
    }
  }
  recipe.unitary = eig_hermitian(h).eigenvectors;

  ComplexMatrix rho(8, 8);
  for (std::size_t n = 0; n < rank; ++n) {
    const double lambda = recipe.probs[n];
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c)
        rho(r, c) += lambda * recipe.unitary(r, n) * std::conj(recipe.unitary(c, n));
  }
  return {DensityMatrix({2, 2, 2}, std::move(rho)), std::move(recipe)};
}

XStateParams random_x_params(std::uint64_t seed) {
  Uniform f(seed);
  XStateParams x;
  x.diag = cascade(f, 8);
  // Fisher-Yates with an explicit index draw (std::shuffle is not portable).
  for (std::size_t i = 7; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(f.raw() % (i + 1));
    std::swap(x.diag[i], x.diag[j]);
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const double bound = std::sqrt(x.diag[k] * x.diag[7 - k]);
    x.offdiag[k] = f(-bound, bound);
  }
  return x;
}

}  // namespace triuncert
