#pragma once

#include <span>
#include <vector>

#include "triuncert/measurement.hpp"
#include "triuncert/states.hpp"

namespace triuncert {

// All entropies are in bits.

/// Eigenvalues at or below this contribute nothing to entropy sums.
inline constexpr double kEntropyCutoff = 1e-12;

double von_neumann(const DensityMatrix& rho);

/// -sum x log2 x over spectrum entries above kEntropyCutoff. No validation.
double spectral_entropy(std::span<const double> spectrum);

/// S(rho) - S(rho restricted to `conditioning`). `conditioning` must be a
/// proper, non-empty, strictly increasing subset of the subsystems.
/// Negative values are returned as-is.
double conditional_entropy(const DensityMatrix& rho, const SubsystemSet& conditioning);

/// S(first) + S(rest) - S(all) for the cut `first | complement`.
double mutual_information(const DensityMatrix& rho, const SubsystemSet& first);

/// Distribution entries must be >= -1e-12 and sum to 1 within 1e-10.
double shannon(std::span<const double> dist);

/// y in [-1e-12, 1 + 1e-12]; endpoints give 0.
double binary_entropy(double y);

/// S(rest) - sum_i p_i S(rest | outcome i) for a measurement on `subsystem`.
double holevo(const DensityMatrix& rho, const MeasurementBasis& basis, std::size_t subsystem = 0);

/// H(X|X') from the joint outcome table of basis_a on subsystem 0 and basis_b
/// on subsystem 1 of a two-subsystem state.
double classical_conditional_entropy(const DensityMatrix& rho_ab, const MeasurementBasis& basis_a,
                                     const MeasurementBasis& basis_b);

}  // namespace triuncert
