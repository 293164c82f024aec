#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "triuncert/complex_matrix.hpp"

namespace triuncert {

using Dims = std::vector<std::size_t>;
using SubsystemSet = std::vector<std::size_t>;

/// Positive-semidefinite, unit-trace Hermitian matrix over a tensor product
/// of subsystems. Basis ordering is lexicographic with subsystem 0 as the
/// most significant digit, so |abc> sits at index a*4 + b*2 + c for qubits.
class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-10), unit trace (1e-10) and minimum eigenvalue
  /// >= -1e-9. Throws ShapeError if the matrix size does not match the dims,
  /// DomainError naming the failed invariant otherwise.
  DensityMatrix(Dims dims, ComplexMatrix matrix);

  /// Skips the spectral check. For values produced by operations that
  /// preserve the invariants (partial trace, projective measurement).
  static DensityMatrix trusted(Dims dims, ComplexMatrix matrix);

  const Dims& dims() const noexcept { return dims_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  std::size_t num_subsystems() const noexcept { return dims_.size(); }

  static DensityMatrix maximally_mixed(Dims dims);
  static DensityMatrix pure(Dims dims, std::span<const cplx> amplitudes);

 private:
  struct TrustedTag {};
  DensityMatrix(Dims dims, ComplexMatrix matrix, TrustedTag);

  Dims dims_;
  ComplexMatrix matrix_;
};

/// Throws DomainError with a message like "min eigenvalue -0.03 < -1e-9"
/// if the matrix is not a valid state.
void validate_state(const ComplexMatrix& m);

/// Tensor product of states; dims concatenate.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep` (non-empty, strictly increasing, in range).
DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSet& keep);

/// tr(rho^2).
double purity(const DensityMatrix& rho);

/// cos(beta)|000> + sin(beta)|111>, beta in [0, pi/2].
DensityMatrix make_ghz(double beta);

/// cos(theta)|001> + sin(theta)cos(alpha)|010> + sin(theta)sin(alpha)|100>.
DensityMatrix make_w(double theta, double alpha);

/// (1-p)|GHZ><GHZ| + (p/8) I, with the equal-weight GHZ state; p in [0,1].
DensityMatrix make_werner(double p);

/// Real three-qubit X-state: main diagonal rho_11..rho_88 and the
/// anti-diagonal couplings rho_18, rho_27, rho_36, rho_45 (1-based labels).
struct XStateParams {
  std::array<double, 8> diag{};
  std::array<double, 4> offdiag{};

  /// Throws DomainError unless the diagonal sums to 1 within 1e-12, entries
  /// are non-negative and each anti-diagonal 2x2 block is PSD.
  void validate() const;
};

XStateParams ghz_x_params(double beta);
XStateParams werner_x_params(double p);

DensityMatrix make_x_state(const XStateParams& params);

/// Everything the random-state generator drew for one seed.
struct RandomStateRecipe {
  std::uint64_t seed = 0;
  std::array<double, 8> probs{};  // descending
  ComplexMatrix t_matrix{8, 8};   // real entries in [-1, 1]
  ComplexMatrix unitary{8, 8};    // columns are the eigenvectors of H
};

struct RandomState {
  DensityMatrix rho;
  RandomStateRecipe recipe;
};

/// Random three-qubit state from a cascade of uniform draws for the spectrum
/// and the eigenbasis of a random Hermitian matrix built from a uniform real
/// matrix T as H = D + (U^T + U) + i(L^T - L) (D, L, U the diagonal, strictly
/// lower and strictly upper parts of T).
///
/// `rank` (1..8) limits how many cascade weights are drawn; the rest are 0.
/// rank 1 yields pure states.
///
/// Draws come from std::mt19937_64 seeded with `seed`; each uniform value on
/// [a, b] is a + (b - a) * (x >> 11) / (2^53 - 1). The cascade draws happen
/// first, then T in row-major order.
RandomState random_state(std::uint64_t seed, std::size_t rank = 8);

/// Random X-state parameters: a cascade spectrum shuffled across the diagonal,
/// then each coupling uniform in [-sqrt(rho_ii rho_jj), +sqrt(rho_ii rho_jj)].
XStateParams random_x_params(std::uint64_t seed);

}  // namespace triuncert
