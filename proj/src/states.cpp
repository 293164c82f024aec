#include "triuncert/states.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

#include "triuncert/error.hpp"
#include "triuncert/linalg.hpp"

namespace triuncert {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdSlack = 1e-9;

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void check_dims(const Dims& dims, const ComplexMatrix& m) {
  if (dims.empty()) throw ShapeError("density matrix needs at least one subsystem");
  for (auto d : dims)
    if (d == 0) throw ShapeError("subsystem dimension must be >= 1");
  const std::size_t total = product(dims);
  if (m.rows() != total || m.cols() != total) {
    throw ShapeError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     " but subsystem dims multiply to " + std::to_string(total));
  }
}

// |abc> for three qubits, A most significant.
constexpr std::size_t ket3(int a, int b, int c) { return static_cast<std::size_t>(a * 4 + b * 2 + c); }

}  // namespace

void validate_state(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("density matrix must be square");
  const double defect = hermiticity_defect(m);
  if (!(defect <= kHermitianTol)) {
    throw DomainError("Hermiticity defect " + fmt_double(defect) + " > 1e-10");
  }
  const cplx tr = m.trace();
  if (!(std::abs(tr - 1.0) <= kTraceTol)) {
    throw DomainError("trace " + fmt_double(tr.real()) + " differs from 1 by more than 1e-10");
  }
  const double min_eig = eigvals_hermitian(m).front();
  if (min_eig < -kPsdSlack) {
    throw DomainError("min eigenvalue " + fmt_double(min_eig) + " < -1e-9");
  }
}

DensityMatrix::DensityMatrix(Dims dims, ComplexMatrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  check_dims(dims_, matrix_);
  validate_state(matrix_);
}

DensityMatrix::DensityMatrix(Dims dims, ComplexMatrix matrix, TrustedTag)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  check_dims(dims_, matrix_);
}

DensityMatrix DensityMatrix::trusted(Dims dims, ComplexMatrix matrix) {
  return DensityMatrix(std::move(dims), std::move(matrix), TrustedTag{});
}

DensityMatrix DensityMatrix::maximally_mixed(Dims dims) {
  const std::size_t n = product(dims);
  ComplexMatrix m = ComplexMatrix::identity(n);
  m *= 1.0 / static_cast<double>(n);
  return trusted(std::move(dims), std::move(m));
}

DensityMatrix DensityMatrix::pure(Dims dims, std::span<const cplx> amplitudes) {
  double norm = 0.0;
  for (auto a : amplitudes) norm += std::norm(a);
  if (!(std::abs(norm - 1.0) <= kTraceTol)) {
    throw DomainError("state vector norm^2 " + fmt_double(norm) + " differs from 1");
  }
  return DensityMatrix(std::move(dims), outer(amplitudes));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::trusted(std::move(dims), kron(a.matrix(), b.matrix()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsystemSet& keep) {
  const Dims& dims = rho.dims();
  if (keep.empty()) throw DomainError("partial_trace: keep set is empty");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= dims.size()) throw DomainError("partial_trace: subsystem index out of range");
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw DomainError("partial_trace: keep indices must be strictly increasing");
    }
  }

  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) kept[k] = true;

  // Split every full index into its (kept, traced) digit groups.
  const std::size_t n = rho.dim();
  std::vector<std::size_t> kept_idx(n), traced_idx(n);
  for (std::size_t full = 0; full < n; ++full) {
    std::size_t rem = full, kstride = 1, tstride = 1, k = 0, t = 0;
    for (std::size_t s = dims.size(); s-- > 0;) {
      const std::size_t digit = rem % dims[s];
      rem /= dims[s];
      if (kept[s]) {
        k += digit * kstride;
        kstride *= dims[s];
      } else {
        t += digit * tstride;
        tstride *= dims[s];
      }
    }
    kept_idx[full] = k;
    traced_idx[full] = t;
  }

  Dims out_dims;
  for (auto k : keep) out_dims.push_back(dims[k]);
  const std::size_t m = product(out_dims);
  ComplexMatrix out(m, m);
  const ComplexMatrix& src = rho.matrix();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (traced_idx[r] == traced_idx[c]) out(kept_idx[r], kept_idx[c]) += src(r, c);
  return DensityMatrix::trusted(std::move(out_dims), std::move(out));
}

double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return frobenius_sq(rho.matrix());
}

DensityMatrix make_ghz(double beta) {
  if (!(beta >= 0.0 && beta <= std::numbers::pi / 2)) {
    throw DomainError("make_ghz: beta must lie in [0, pi/2]");
  }
  std::vector<cplx> psi(8);
  psi[ket3(0, 0, 0)] = std::cos(beta);
  psi[ket3(1, 1, 1)] = std::sin(beta);
  return DensityMatrix::pure({2, 2, 2}, psi);
}

DensityMatrix make_w(double theta, double alpha) {
  std::vector<cplx> psi(8);
  psi[ket3(0, 0, 1)] = std::cos(theta);
  psi[ket3(0, 1, 0)] = std::sin(theta) * std::cos(alpha);
  psi[ket3(1, 0, 0)] = std::sin(theta) * std::sin(alpha);
  return DensityMatrix::pure({2, 2, 2}, psi);
}

DensityMatrix make_werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("make_werner: p must lie in [0, 1]");
  ComplexMatrix m = make_ghz(std::numbers::pi / 4).matrix();
  m *= 1.0 - p;
  for (std::size_t i = 0; i < 8; ++i) m(i, i) += p / 8.0;
  return DensityMatrix({2, 2, 2}, std::move(m));
}

void XStateParams::validate() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    if (diag[i] < -1e-12) throw DomainError("X-state diagonal entry " + std::to_string(i + 1) + " is negative");
    sum += diag[i];
  }
  if (!(std::abs(sum - 1.0) <= 1e-12)) {
    throw DomainError("X-state diagonal sums to " + fmt_double(sum) + ", not 1");
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const double a = diag[k], b = diag[7 - k], c = offdiag[k];
    if (a * b < c * c - 1e-12) {
      throw DomainError("X-state block (" + std::to_string(k + 1) + "," + std::to_string(8 - k) +
                        ") is not positive semidefinite");
    }
  }
}

XStateParams ghz_x_params(double beta) {
  XStateParams x;
  x.diag[0] = std::cos(beta) * std::cos(beta);
  x.diag[7] = std::sin(beta) * std::sin(beta);
  x.offdiag[0] = std::cos(beta) * std::sin(beta);
  return x;
}

XStateParams werner_x_params(double p) {
  XStateParams x;
  x.diag.fill(p / 8.0);
  x.diag[0] += (1.0 - p) / 2.0;
  x.diag[7] += (1.0 - p) / 2.0;
  x.offdiag[0] = (1.0 - p) / 2.0;
  return x;
}

DensityMatrix make_x_state(const XStateParams& params) {
  params.validate();
  ComplexMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = params.diag[i];
  for (std::size_t k = 0; k < 4; ++k) {
    m(k, 7 - k) = params.offdiag[k];
    m(7 - k, k) = params.offdiag[k];
  }
  return DensityMatrix({2, 2, 2}, std::move(m));
}

}  // namespace triuncert
