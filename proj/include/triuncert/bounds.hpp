#pragma once

#include "triuncert/measurement.hpp"
#include "triuncert/states.hpp"

namespace triuncert {

/// Every quantity entering the tripartite uncertainty relation for one state
/// and one pair of measurements on subsystem A. All in bits except purity.
///
/// Conditional entropies of measured states: s_xb = S(X|B), s_zc = S(Z|C),
/// s_zb = S(Z|B), s_xc = S(X|C). Mutual informations i_ab, i_ac. Holevo
/// quantities i_zb (Z measured on rho_AB) and i_xc (X measured on rho_AC).
/// Shannon entropies h_x, h_z of the outcome distributions on rho_A.
struct BoundReport {
  double u_left = 0;   // S(X|B) + S(Z|C)
  double delta = 0;
  double u_right = 0;  // q_mu + max(0, delta)
  double q_mu = 0;
  double renes = 0;
  double s_xb = 0, s_zc = 0, s_zb = 0, s_xc = 0;
  double i_ab = 0, i_ac = 0, i_zb = 0, i_xc = 0;
  double h_x = 0, h_z = 0;
  double s_a = 0;
  double s_a_given_b = 0, s_a_given_c = 0;
  double purity = 0;
};

/// S(X|B) + S(Z|C) on a three-subsystem state.
double u_left(const DensityMatrix& rho_abc, const MeasurementBasis& x, const MeasurementBasis& z);

/// q_mu + 2 S(A) - [I(A:B) + I(A:C)] + [I(Z:B) + I(X:C)] - H(X) - H(Z).
double delta(const DensityMatrix& rho_abc, const MeasurementBasis& x, const MeasurementBasis& z);

/// q_mu + max(0, delta).
double u_right(const DensityMatrix& rho_abc, const MeasurementBasis& x, const MeasurementBasis& z);

/// State-independent tripartite bound q_mu.
double renes_bound(const MeasurementBasis& x, const MeasurementBasis& z);

/// S(A|B) + q_mu on a two-subsystem state.
double berta_bound(const DensityMatrix& rho_ab, const MeasurementBasis& x, const MeasurementBasis& z);

/// S(A) + q_mu on a single-subsystem state.
double memoryless_bound(const DensityMatrix& rho_a, const MeasurementBasis& x, const MeasurementBasis& z);

/// Closed form of both sides of the relation for X-states under Pauli x, z:
/// 1 - S_bin(r11 + r33 + r55 + r77) - sum over the pairs (r11+r33), (r22+r44),
/// (r55+r77), (r66+r88) of y log2 y.
double x_state_analytic(const XStateParams& params);

/// Computes the reductions once and fills every field from them.
BoundReport full_report(const DensityMatrix& rho_abc, const MeasurementBasis& x, const MeasurementBasis& z);

}  // namespace triuncert
