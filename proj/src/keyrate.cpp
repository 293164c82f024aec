#include "triuncert/keyrate.hpp"

#include <algorithm>
#include <cmath>

#include "triuncert/bounds.hpp"
#include "triuncert/entropy.hpp"
#include "triuncert/error.hpp"

namespace triuncert {

double key_rate_berta(const DensityMatrix& rho_abe, const MeasurementBasis& x, const MeasurementBasis& z) {
  const BoundReport r = full_report(rho_abe, x, z);
  return r.q_mu - r.s_xb - r.s_zb;
}

double key_rate_improved(const DensityMatrix& rho_abe, const MeasurementBasis& x, const MeasurementBasis& z) {
  const BoundReport r = full_report(rho_abe, x, z);
  return r.u_right - r.s_xb - r.s_zb;
}

double key_rate_measured(const DensityMatrix& rho_abe, const MeasurementBasis& x, const MeasurementBasis& z,
                         const MeasurementBasis& x_prime, const MeasurementBasis& z_prime) {
  return key_report(rho_abe, x, z, x_prime, z_prime).k_measured;
}

KeyRateReport key_report(const DensityMatrix& rho_abe, const MeasurementBasis& x, const MeasurementBasis& z,
                         const MeasurementBasis& x_prime, const MeasurementBasis& z_prime) {
  const BoundReport r = full_report(rho_abe, x, z);
  if (x_prime.dim() != rho_abe.dims()[1] || z_prime.dim() != rho_abe.dims()[1]) {
    throw DomainError("Bob's bases do not match the dimension of subsystem B");
  }
  const DensityMatrix rho_ab = partial_trace(rho_abe, {0, 1});

  KeyRateReport k;
  k.delta = r.delta;
  k.s_xb = r.s_xb;
  k.s_zb = r.s_zb;
  k.s_xx = classical_conditional_entropy(rho_ab, x, x_prime);
  k.s_zz = classical_conditional_entropy(rho_ab, z, z_prime);
  const double gain = std::max(0.0, r.delta);
  k.k_berta = r.q_mu - r.s_xb - r.s_zb;
  k.k_improved = r.q_mu + gain - r.s_xb - r.s_zb;
  k.k_measured = r.q_mu + gain - k.s_xx - k.s_zz;
  k.symmetric = std::abs(k.s_xx - k.s_zz) <= 1e-9;
  return k;
}

}  // namespace triuncert
