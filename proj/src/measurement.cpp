#include "triuncert/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "triuncert/error.hpp"

namespace triuncert {

namespace {

constexpr double kBasisTol = 1e-10;

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

void check_same_dim(const MeasurementBasis& x, const MeasurementBasis& z) {
  if (x.dim() != z.dim()) {
    throw ShapeError("bases '" + x.label() + "' and '" + z.label() + "' differ in dimension");
  }
}

// Identity on every subsystem except `subsystem`, where `op` acts.
ComplexMatrix embed(const Dims& dims, std::size_t subsystem, const ComplexMatrix& op) {
  std::size_t before = 1, after = 1;
  for (std::size_t s = 0; s < subsystem; ++s) before *= dims[s];
  for (std::size_t s = subsystem + 1; s < dims.size(); ++s) after *= dims[s];
  return kron(kron(ComplexMatrix::identity(before), op), ComplexMatrix::identity(after));
}

void check_measurable(const DensityMatrix& rho, const MeasurementBasis& basis, std::size_t subsystem,
                      std::size_t min_subsystems) {
  if (rho.num_subsystems() < min_subsystems) {
    throw ShapeError("state has " + std::to_string(rho.num_subsystems()) + " subsystem(s), need at least " +
                     std::to_string(min_subsystems));
  }
  if (subsystem >= rho.num_subsystems()) throw ShapeError("measured subsystem index out of range");
  if (rho.dims()[subsystem] != basis.dim()) {
    throw ShapeError("basis '" + basis.label() + "' has dimension " + std::to_string(basis.dim()) +
                     " but subsystem " + std::to_string(subsystem) + " has dimension " +
                     std::to_string(rho.dims()[subsystem]));
  }
}

SubsystemSet all_but(std::size_t count, std::size_t skip) {
  SubsystemSet out;
  for (std::size_t s = 0; s < count; ++s)
    if (s != skip) out.push_back(s);
  return out;
}

}  // namespace

MeasurementBasis::MeasurementBasis(std::string label, std::vector<std::vector<cplx>> vectors)
    : label_(std::move(label)), vectors_(std::move(vectors)) {
  const std::size_t d = vectors_.size();
  if (d == 0) throw ShapeError("basis '" + label_ + "' has no vectors");
  for (const auto& v : vectors_) {
    if (v.size() != d) {
      throw ShapeError("basis '" + label_ + "' needs " + std::to_string(d) + " vectors of length " +
                       std::to_string(d));
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const cplx g = inner(vectors_[i], vectors_[j]);
      const double expected = i == j ? 1.0 : 0.0;
      if (!(std::abs(g - expected) <= kBasisTol)) {
        throw DomainError("basis '" + label_ + "' is not orthonormal at vectors " + std::to_string(i) +
                          "," + std::to_string(j));
      }
    }
  }
  // Orthonormality of d vectors in dimension d implies completeness; checked
  // explicitly so near-tolerance inputs cannot slip through.
  ComplexMatrix sum(d, d);
  for (std::size_t i = 0; i < d; ++i) sum += outer(vectors_[i]);
  if (!(max_abs_diff(sum, ComplexMatrix::identity(d)) <= kBasisTol)) {
    throw DomainError("basis '" + label_ + "' is not complete");
  }
}

MeasurementBasis pauli_basis(Pauli which) {
  const double h = std::numbers::sqrt2 / 2;
  const cplx i(0.0, 1.0);
  switch (which) {
    case Pauli::x:
      return MeasurementBasis("x", {{h, h}, {h, -h}});
    case Pauli::y:
      return MeasurementBasis("y", {{h, h * i}, {h, -h * i}});
    case Pauli::z:
      return MeasurementBasis("z", {{1.0, 0.0}, {0.0, 1.0}});
  }
  throw DomainError("unknown Pauli basis");
}

MeasurementBasis pauli_basis(const std::string& name) {
  if (name == "x") return pauli_basis(Pauli::x);
  if (name == "y") return pauli_basis(Pauli::y);
  if (name == "z") return pauli_basis(Pauli::z);
  throw DomainError("unknown basis name '" + name + "' (expected x, y or z)");
}

double overlap_c(const MeasurementBasis& x, const MeasurementBasis& z) {
  check_same_dim(x, z);
  double c = 0.0;
  for (const auto& u : x.vectors())
    for (const auto& v : z.vectors()) c = std::max(c, std::norm(inner(u, v)));
  return c;
}

double q_mu(const MeasurementBasis& x, const MeasurementBasis& z) { return -std::log2(overlap_c(x, z)); }

DensityMatrix post_measurement_state(const DensityMatrix& rho, const MeasurementBasis& basis,
                                     std::size_t subsystem) {
  check_measurable(rho, basis, subsystem, 1);
  ComplexMatrix out(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const ComplexMatrix p = embed(rho.dims(), subsystem, basis.projector(i));
    out += matmul(matmul(p, rho.matrix()), p);
  }
  return DensityMatrix::trusted(rho.dims(), std::move(out));
}

MeasurementEnsemble measurement_ensemble(const DensityMatrix& rho, const MeasurementBasis& basis,
                                         std::size_t subsystem) {
  check_measurable(rho, basis, subsystem, 2);
  const SubsystemSet rest = all_but(rho.num_subsystems(), subsystem);
  Dims rest_dims;
  for (auto s : rest) rest_dims.push_back(rho.dims()[s]);

  MeasurementEnsemble ens;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const ComplexMatrix p = embed(rho.dims(), subsystem, basis.projector(i));
    const ComplexMatrix branch = matmul(matmul(p, rho.matrix()), p);
    const double prob = branch.trace().real();
    ens.probs.push_back(prob);
    if (prob <= kNegligibleProbability) {
      ens.cond_states.push_back(DensityMatrix::maximally_mixed(rest_dims));
      continue;
    }
    ComplexMatrix scaled = branch;
    scaled *= 1.0 / prob;
    ens.cond_states.push_back(partial_trace(DensityMatrix::trusted(rho.dims(), std::move(scaled)), rest));
  }
  return ens;
}

std::vector<double> outcome_distribution(const DensityMatrix& rho, const MeasurementBasis& basis) {
  if (rho.num_subsystems() != 1) {
    throw ShapeError("outcome_distribution expects a single-subsystem state");
  }
  check_measurable(rho, basis, 0, 1);
  std::vector<double> probs;
  const ComplexMatrix& m = rho.matrix();
  for (const auto& v : basis.vectors()) {
    cplx s = 0.0;
    for (std::size_t r = 0; r < v.size(); ++r)
      for (std::size_t c = 0; c < v.size(); ++c) s += std::conj(v[r]) * m(r, c) * v[c];
    probs.push_back(s.real());
  }
  return probs;
}

}  // namespace triuncert
