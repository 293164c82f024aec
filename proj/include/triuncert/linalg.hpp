#pragma once

#include <vector>

#include "triuncert/complex_matrix.hpp"
#include "triuncert/kernels.hpp"

namespace triuncert {

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]
};

/// Full spectral decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Sweeps until the off-diagonal Frobenius norm drops to
/// 1e-13 * (1 + ||h||_F).
///
/// Throws ShapeError for non-square input and DomainError when h deviates from
/// Hermitian by more than 1e-10 in any entry.
EigenDecomposition eig_hermitian(const ComplexMatrix& h);

/// Same, with an explicit kernel table instead of the active one.
EigenDecomposition eig_hermitian(const ComplexMatrix& h, const kernels::KernelTable& k);

/// Eigenvalues only (ascending); same algorithm and errors as eig_hermitian.
std::vector<double> eigvals_hermitian(const ComplexMatrix& h);

/// V * diag(lambda) * V^dagger.
ComplexMatrix reconstruct(const EigenDecomposition& e);

}  // namespace triuncert
