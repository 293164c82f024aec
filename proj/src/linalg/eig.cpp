#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "triuncert/error.hpp"
#include "triuncert/kernels.hpp"
#include "triuncert/linalg.hpp"

namespace triuncert {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kConvergenceRel = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

EigenDecomposition jacobi(const ComplexMatrix& h, const kernels::KernelTable& k, bool want_vectors) {
  if (!h.is_square()) {
    throw ShapeError("eig_hermitian: non-square " + std::to_string(h.rows()) + "x" +
                     std::to_string(h.cols()) + " matrix");
  }
  const double defect = hermiticity_defect(h);
  if (!(defect <= kHermitianTol)) {
    throw DomainError("eig_hermitian: matrix is not Hermitian (defect " + std::to_string(defect) +
                      ")");
  }

  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(n);
  // The stopping rule uses the scalar reduction so the sweep count does not
  // depend on which kernel table is active.
  const double tol = kConvergenceRel * (1.0 + std::sqrt(kernels::scalar::sum_abs2(h.data().data(), n * n)));

  int sweep = 0;
  for (; sweep < kMaxSweeps && off_diagonal_norm(a) > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const cplx phase = apq / r;
        const double zeta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // A <- J^dagger A J, V <- V J with J_pp = J_qq = c, J_pq = s e^{i phi},
        // J_qp = -s e^{-i phi}.
        const kernels::Mix2 cols{c, -s * std::conj(phase), s * phase, c};
        const kernels::Mix2 rows{c, -s * phase, s * std::conj(phase), c};
        k.mix_pair(&a(0, p), &a(0, q), n, n, cols);
        k.mix_pair(&a(p, 0), &a(q, 0), n, 1, rows);
        if (want_vectors) k.mix_pair(&v(0, p), &v(0, q), n, n, cols);

        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(a) > tol) {
    throw DomainError("eig_hermitian: Jacobi iteration did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    if (want_vectors)
      for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& h) { return jacobi(h, kernels::active(), true); }

EigenDecomposition eig_hermitian(const ComplexMatrix& h, const kernels::KernelTable& k) {
  return jacobi(h, k, true);
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& h) {
  return jacobi(h, kernels::active(), false).eigenvalues;
}

ComplexMatrix reconstruct(const EigenDecomposition& e) {
  const std::size_t n = e.eigenvalues.size();
  ComplexMatrix scaled = e.eigenvectors;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) scaled(r, c) *= e.eigenvalues[c];
  return matmul(scaled, dagger(e.eigenvectors));
}

}  // namespace triuncert
