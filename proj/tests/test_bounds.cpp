#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "triuncert/bounds.hpp"
#include "triuncert/entropy.hpp"
#include "triuncert/error.hpp"

namespace triuncert {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBin34 = 0.8112781244591328;

const MeasurementBasis& X() {
  static const auto b = pauli_basis(Pauli::x);
  return b;
}
const MeasurementBasis& Z() {
  static const auto b = pauli_basis(Pauli::z);
  return b;
}

const DensityMatrix& mixed8() {
  static const auto m = DensityMatrix::maximally_mixed({2, 2, 2});
  return m;
}

TEST(ULeft, GhzIsConstantOne) {
  for (double beta = 0.0; beta <= kPi / 2 + 1e-12; beta += kPi / 40)
    EXPECT_NEAR(u_left(make_ghz(std::min(beta, kPi / 2)), X(), Z()), 1.0, 1e-9);
}

TEST(ULeft, MaximallyMixedIsTwo) { EXPECT_NEAR(u_left(mixed8(), X(), Z()), 2.0, 1e-12); }

TEST(ULeft, XStatesMatchClosedForm) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto params = random_x_params(seed);
    EXPECT_NEAR(u_left(make_x_state(params), X(), Z()), x_state_analytic(params), 1e-9);
  }
}

TEST(ULeft, RejectsWrongSubsystemCount) {
  EXPECT_THROW(u_left(DensityMatrix::maximally_mixed({2, 2}), X(), Z()), DomainError);
  EXPECT_THROW(delta(DensityMatrix::maximally_mixed({2, 2, 2, 2}), X(), Z()), DomainError);
}

TEST(Delta, NonPositiveForPureStates) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) EXPECT_LE(delta(random_state(seed, 1).rho, X(), Z()), 1e-9);
  for (double theta = 0.0; theta < kPi; theta += 0.3) EXPECT_LE(delta(make_w(theta, 0.6), X(), Z()), 1e-9);
}

TEST(Delta, MaximallyMixedIsOne) {
  // 1 + 2*1 - (0 + 0) + (0 + 0) - 1 - 1
  EXPECT_NEAR(delta(mixed8(), X(), Z()), 1.0, 1e-12);
}

TEST(Delta, NonNegativeAlongWernerFamily) {
  for (int i = 0; i <= 20; ++i) EXPECT_GE(delta(make_werner(i / 20.0), X(), Z()), -1e-9);
}

TEST(URight, PureStatesRecoverRenes) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) EXPECT_NEAR(u_right(random_state(seed, 1).rho, X(), Z()), 1.0, 1e-9);
}

TEST(URight, MaximallyMixedIsTwo) { EXPECT_NEAR(u_right(mixed8(), X(), Z()), 2.0, 1e-12); }

TEST(URight, NeverExceedsULeftOnRandomStates) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto r = full_report(random_state(seed).rho, X(), Z());
    EXPECT_GE(r.u_left, r.u_right - 1e-9) << "seed " << seed;
    EXPECT_GE(r.u_right, r.q_mu - 1e-12);
    EXPECT_LE(r.u_right, 2.0 + 1e-9);
  }
}

TEST(URight, HoldsForOtherBasisPairs) {
  const auto y = pauli_basis(Pauli::y);
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = testing::random_density({2, 2, 2}, rng, 1 + trial % 8);
    for (const auto& [a, b] : {std::pair{&X(), &y}, std::pair{&y, &Z()}, std::pair{&Z(), &X()}}) {
      const auto r = full_report(rho, *a, *b);
      EXPECT_GE(r.u_left, r.u_right - 1e-9);
    }
  }
}

TEST(Renes, Values) {
  EXPECT_NEAR(renes_bound(X(), Z()), 1.0, 1e-12);
  EXPECT_NEAR(renes_bound(Z(), Z()), 0.0, 1e-15);
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    EXPECT_GE(u_right(random_state(seed).rho, X(), Z()), renes_bound(X(), Z()) - 1e-12);
}

TEST(Berta, Examples) {
  EXPECT_NEAR(berta_bound(testing::bell_pair(), X(), Z()), 0.0, 1e-12);
  std::mt19937_64 rng(52);
  const auto product = tensor(testing::qubit_diag(0.5), testing::random_density({2}, rng));
  EXPECT_NEAR(berta_bound(product, X(), Z()), 2.0, 1e-12);
  EXPECT_THROW(berta_bound(mixed8(), X(), Z()), DomainError);
}

TEST(Berta, HoldsOnRandomPairs) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = testing::random_density({2, 2}, rng, 1 + trial % 4);
    const double lhs = conditional_entropy(post_measurement_state(rho, X()), {1}) +
                       conditional_entropy(post_measurement_state(rho, Z()), {1});
    EXPECT_GE(lhs, berta_bound(rho, X(), Z()) - 1e-9);
  }
}

TEST(Memoryless, Examples) {
  EXPECT_NEAR(memoryless_bound(testing::qubit_diag(1.0), X(), Z()), 1.0, 1e-12);

  const auto mixed = testing::qubit_diag(0.5);
  EXPECT_NEAR(memoryless_bound(mixed, X(), Z()), 2.0, 1e-12);
  EXPECT_NEAR(shannon(outcome_distribution(mixed, X())) + shannon(outcome_distribution(mixed, Z())), 2.0, 1e-12);

  // Incoherent state: H(Z) = S_bin(3/4), H(X) = 1, so the bound is tight.
  const auto diag = testing::qubit_diag(0.75);
  const double hsum = shannon(outcome_distribution(diag, X())) + shannon(outcome_distribution(diag, Z()));
  EXPECT_NEAR(memoryless_bound(diag, X(), Z()), kBin34 + 1.0, 1e-12);
  EXPECT_NEAR(hsum, kBin34 + 1.0, 1e-12);
  EXPECT_THROW(memoryless_bound(mixed8(), X(), Z()), DomainError);
}

TEST(Memoryless, HoldsOnRandomQubits) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = testing::random_density({2}, rng);
    const double hsum = shannon(outcome_distribution(rho, X())) + shannon(outcome_distribution(rho, Z()));
    EXPECT_GE(hsum, memoryless_bound(rho, X(), Z()) - 1e-9);
  }
}

TEST(XStateAnalytic, Examples) {
  // p=0: 1 - S_bin(1/2) + 1/2 + 0 + 0 + 1/2
  EXPECT_NEAR(x_state_analytic(werner_x_params(0.0)), 1.0, 1e-12);
  // p=1: 1 - 1 + 4 * (1/4 * 2)
  EXPECT_NEAR(x_state_analytic(werner_x_params(1.0)), 2.0, 1e-12);
  EXPECT_NEAR(x_state_analytic(ghz_x_params(kPi / 4)), 1.0, 1e-12);
  XStateParams bad;
  EXPECT_THROW(x_state_analytic(bad), DomainError);
}

TEST(FullReport, Ghz) {
  const auto r = full_report(make_ghz(kPi / 4), X(), Z());
  EXPECT_NEAR(r.u_left, 1.0, 1e-9);
  EXPECT_NEAR(r.u_right, 1.0, 1e-9);
  EXPECT_NEAR(r.renes, 1.0, 1e-9);
  EXPECT_NEAR(r.s_zc, 0.0, 1e-9);
  EXPECT_NEAR(r.s_xb, 1.0, 1e-9);
}

TEST(FullReport, MaximallyMixed) {
  const auto r = full_report(mixed8(), X(), Z());
  EXPECT_NEAR(r.u_left, 2.0, 1e-12);
  EXPECT_NEAR(r.u_right, 2.0, 1e-12);
  EXPECT_NEAR(r.delta, 1.0, 1e-12);
  EXPECT_NEAR(r.purity, 0.125, 1e-15);
}

TEST(FullReport, AgreesWithStandaloneOperations) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rho = random_state(seed).rho;
    const auto r = full_report(rho, X(), Z());
    EXPECT_NEAR(r.u_left, u_left(rho, X(), Z()), 1e-12);
    EXPECT_EQ(r.u_right, r.q_mu + std::max(0.0, r.delta));
    EXPECT_NEAR(r.i_ab, mutual_information(partial_trace(rho, {0, 1}), {0}), 1e-12);
    EXPECT_NEAR(r.s_zb, conditional_entropy(post_measurement_state(partial_trace(rho, {0, 1}), Z()), {1}), 1e-12);
  }
}

// Proof chain: the QMA relation on each pair, their sum, and the entropy
// decompositions that turn it into delta.
TEST(ProofChain, HoldsOnRandomStates) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto r = full_report(random_state(seed).rho, X(), Z());
    EXPECT_GE(r.s_xb + r.s_zb, r.s_a_given_b + r.q_mu - 1e-9);
    EXPECT_GE(r.s_xc + r.s_zc, r.s_a_given_c + r.q_mu - 1e-9);
    const double chained = 2 * r.q_mu + r.s_a_given_b + r.s_a_given_c - r.s_zb - r.s_xc;
    EXPECT_GE(r.u_left, chained - 1e-9);
    EXPECT_NEAR(r.s_a, r.s_a_given_b + r.i_ab, 1e-9);
    EXPECT_NEAR(r.s_a, r.s_a_given_c + r.i_ac, 1e-9);
    EXPECT_NEAR(r.h_z, r.s_zb + r.i_zb, 1e-9);
    EXPECT_NEAR(r.h_x, r.s_xc + r.i_xc, 1e-9);
    // delta is the chained bound minus q_mu
    EXPECT_NEAR(r.delta, chained - r.q_mu, 1e-9);
  }
}

TEST(PureStates, ConditionalEntropiesCancel) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto r = full_report(random_state(seed, 1).rho, X(), Z());
    EXPECT_LE(std::abs(r.s_a_given_b + r.s_a_given_c), 1e-9);
    EXPECT_LE(r.q_mu - r.s_zb - r.s_xc, 1e-9);
    EXPECT_LE(r.delta, 1e-9);
    EXPECT_NEAR(r.u_right, r.q_mu, 1e-9);
  }
}

// When H(X) + H(Z) = q_mu + S(A), delta drops the q_mu, S(A), H terms.
TEST(ReducedDelta, MatchesFullFormWhereEqualityHolds) {
  std::vector<DensityMatrix> states;
  for (double beta : {0.0, 0.3, kPi / 4, 1.2}) states.push_back(make_ghz(beta));
  for (double theta : {0.2, 0.9, 2.0}) states.push_back(make_w(theta, kPi / 4));
  for (double p : {0.0, 0.4, 1.0}) states.push_back(make_werner(p));
  for (const auto& rho : states) {
    const auto r = full_report(rho, X(), Z());
    ASSERT_NEAR(r.h_x + r.h_z, r.q_mu + r.s_a, 1e-9);
    const double reduced = r.s_a - (r.i_ab + r.i_ac) + (r.i_zb + r.i_xc);
    EXPECT_NEAR(r.delta, reduced, 1e-9);
  }
}

TEST(XStates, BoundIsTight) {
  for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
    const auto params = random_x_params(seed);
    const auto r = full_report(make_x_state(params), X(), Z());
    EXPECT_LE(std::abs(r.u_left - r.u_right), 1e-8);
    EXPECT_LE(std::abs(r.u_left - x_state_analytic(params)), 1e-8);
  }
}

}  // namespace
}  // namespace triuncert
