#pragma once

#include <string>
#include <vector>

#include "triuncert/complex_matrix.hpp"
#include "triuncert/states.hpp"

namespace triuncert {

/// Orthonormal basis of rank-1 projectors on one subsystem.
class MeasurementBasis {
 public:
  /// Throws DomainError unless the vectors are pairwise orthonormal and
  /// complete within 1e-10; ShapeError if they differ in length or their
  /// count differs from their length.
  MeasurementBasis(std::string label, std::vector<std::vector<cplx>> vectors);

  const std::string& label() const noexcept { return label_; }
  const std::vector<std::vector<cplx>>& vectors() const noexcept { return vectors_; }
  std::size_t dim() const noexcept { return vectors_.size(); }

  ComplexMatrix projector(std::size_t i) const { return outer(vectors_[i]); }

 private:
  std::string label_;
  std::vector<std::vector<cplx>> vectors_;
};

enum class Pauli { x, y, z };

/// Eigenbasis of a Pauli operator, +1 eigenvector first.
MeasurementBasis pauli_basis(Pauli which);

/// Looks up "x", "y" or "z"; DomainError otherwise.
MeasurementBasis pauli_basis(const std::string& name);

/// max_{j,k} |<x_j|z_k>|^2.
double overlap_c(const MeasurementBasis& x, const MeasurementBasis& z);

/// -log2 overlap_c(x, z).
double q_mu(const MeasurementBasis& x, const MeasurementBasis& z);

/// sum_i (P_i (x) 1) rho (P_i (x) 1) with P_i acting on `subsystem`.
DensityMatrix post_measurement_state(const DensityMatrix& rho, const MeasurementBasis& basis,
                                     std::size_t subsystem = 0);

struct MeasurementEnsemble {
  std::vector<double> probs;
  /// States of the unmeasured subsystems given each outcome. Outcomes with
  /// probability <= 1e-12 carry the maximally mixed state as a placeholder.
  std::vector<DensityMatrix> cond_states;
};

/// Probability of an outcome below which it is treated as impossible.
inline constexpr double kNegligibleProbability = 1e-12;

MeasurementEnsemble measurement_ensemble(const DensityMatrix& rho, const MeasurementBasis& basis,
                                         std::size_t subsystem = 0);

/// <v_i|rho|v_i> for a single-subsystem state.
std::vector<double> outcome_distribution(const DensityMatrix& rho, const MeasurementBasis& basis);

}  // namespace triuncert
