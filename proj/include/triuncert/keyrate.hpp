#pragma once

#include "triuncert/measurement.hpp"
#include "triuncert/states.hpp"

namespace triuncert {

// Secret-key-rate bounds for a state rho_ABE prepared by an eavesdropper who
// keeps E. Subsystem order is (A, B, E); E plays the role of C in the
// tripartite relation. Values are raw and may be negative.

struct KeyRateReport {
  double k_berta = 0;     // q_mu - S(X|B) - S(Z|B)
  double k_improved = 0;  // q_mu + max(0, delta) - S(X|B) - S(Z|B)
  double k_measured = 0;  // q_mu + max(0, delta) - S(X|X') - S(Z|Z')
  double s_xb = 0, s_zb = 0;
  double s_xx = 0, s_zz = 0;  // classical conditional entropies on rho_AB
  double delta = 0;
  bool symmetric = false;  // |S(X|X') - S(Z|Z')| <= 1e-9
};

double key_rate_berta(const DensityMatrix& rho_abe, const MeasurementBasis& x, const MeasurementBasis& z);

double key_rate_improved(const DensityMatrix& rho_abe, const MeasurementBasis& x, const MeasurementBasis& z);

/// Bob measures x_prime / z_prime on B; throws DomainError if those do not
/// match B's dimension.
double key_rate_measured(const DensityMatrix& rho_abe, const MeasurementBasis& x, const MeasurementBasis& z,
                         const MeasurementBasis& x_prime, const MeasurementBasis& z_prime);

KeyRateReport key_report(const DensityMatrix& rho_abe, const MeasurementBasis& x, const MeasurementBasis& z,
                         const MeasurementBasis& x_prime, const MeasurementBasis& z_prime);

}  // namespace triuncert
