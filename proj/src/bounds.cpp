#include "triuncert/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "triuncert/entropy.hpp"
#include "triuncert/error.hpp"

namespace triuncert {

namespace {

void require_tripartite(const DensityMatrix& rho, const MeasurementBasis& x, const MeasurementBasis& z) {
  if (rho.num_subsystems() != 3) {
    throw DomainError("expected a three-subsystem state, got " + std::to_string(rho.num_subsystems()));
  }
  if (x.dim() != rho.dims()[0] || z.dim() != rho.dims()[0]) {
    throw DomainError("measurement bases do not match the dimension of subsystem A");
  }
}

// S(M|R) of the post-measurement state of a bipartite (A, R) state.
double measured_conditional(const DensityMatrix& rho_ar, const MeasurementBasis& basis) {
  return conditional_entropy(post_measurement_state(rho_ar, basis), {1});
}

}  // namespace

double u_left(const DensityMatrix& rho_abc, const MeasurementBasis& x, const MeasurementBasis& z) {
  require_tripartite(rho_abc, x, z);
  return measured_conditional(partial_trace(rho_abc, {0, 1}), x) +
         measured_conditional(partial_trace(rho_abc, {0, 2}), z);
}

double delta(const DensityMatrix& rho_abc, const MeasurementBasis& x, const MeasurementBasis& z) {
  return full_report(rho_abc, x, z).delta;
}

double u_right(const DensityMatrix& rho_abc, const MeasurementBasis& x, const MeasurementBasis& z) {
  return full_report(rho_abc, x, z).u_right;
}

double renes_bound(const MeasurementBasis& x, const MeasurementBasis& z) { return q_mu(x, z); }

double berta_bound(const DensityMatrix& rho_ab, const MeasurementBasis& x, const MeasurementBasis& z) {
  if (rho_ab.num_subsystems() != 2) throw DomainError("berta_bound expects a two-subsystem state");
  if (x.dim() != rho_ab.dims()[0] || z.dim() != rho_ab.dims()[0]) {
    throw DomainError("measurement bases do not match the dimension of subsystem A");
  }
  return conditional_entropy(rho_ab, {1}) + q_mu(x, z);
}

double memoryless_bound(const DensityMatrix& rho_a, const MeasurementBasis& x, const MeasurementBasis& z) {
  if (rho_a.num_subsystems() != 1) throw DomainError("memoryless_bound expects a single-subsystem state");
  if (x.dim() != rho_a.dim() || z.dim() != rho_a.dim()) {
    throw DomainError("measurement bases do not match the state dimension");
  }
  return von_neumann(rho_a) + q_mu(x, z);
}

double x_state_analytic(const XStateParams& params) {
  params.validate();
  const auto& d = params.diag;
  const auto ylog = [](double y) { return y > 0.0 ? y * std::log2(y) : 0.0; };
  return 1.0 - binary_entropy(d[0] + d[2] + d[4] + d[6]) - ylog(d[0] + d[2]) - ylog(d[1] + d[3]) -
         ylog(d[4] + d[6]) - ylog(d[5] + d[7]);
}

BoundReport full_report(const DensityMatrix& rho_abc, const MeasurementBasis& x, const MeasurementBasis& z) {
  require_tripartite(rho_abc, x, z);
  const DensityMatrix rho_ab = partial_trace(rho_abc, {0, 1});
  const DensityMatrix rho_ac = partial_trace(rho_abc, {0, 2});
  const DensityMatrix rho_a = partial_trace(rho_abc, {0});
  const DensityMatrix rho_b = partial_trace(rho_abc, {1});
  const DensityMatrix rho_c = partial_trace(rho_abc, {2});

  const double s_ab = von_neumann(rho_ab);
  const double s_ac = von_neumann(rho_ac);
  const double s_b = von_neumann(rho_b);
  const double s_c = von_neumann(rho_c);

  BoundReport r;
  r.s_a = von_neumann(rho_a);
  r.q_mu = q_mu(x, z);
  r.renes = r.q_mu;
  r.purity = purity(rho_abc);

  r.s_xb = von_neumann(post_measurement_state(rho_ab, x)) - s_b;
  r.s_zb = von_neumann(post_measurement_state(rho_ab, z)) - s_b;
  r.s_zc = von_neumann(post_measurement_state(rho_ac, z)) - s_c;
  r.s_xc = von_neumann(post_measurement_state(rho_ac, x)) - s_c;

  r.s_a_given_b = s_ab - s_b;
  r.s_a_given_c = s_ac - s_c;
  r.i_ab = r.s_a + s_b - s_ab;
  r.i_ac = r.s_a + s_c - s_ac;
  r.i_zb = holevo(rho_ab, z);
  r.i_xc = holevo(rho_ac, x);
  r.h_x = shannon(outcome_distribution(rho_a, x));
  r.h_z = shannon(outcome_distribution(rho_a, z));

  r.u_left = r.s_xb + r.s_zc;
  r.delta = r.q_mu + 2.0 * r.s_a - (r.i_ab + r.i_ac) + (r.i_zb + r.i_xc) - r.h_x - r.h_z;
  r.u_right = r.q_mu + std::max(0.0, r.delta);
  return r;
}

}  // namespace triuncert
