#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "triuncert/bounds.hpp"
#include "triuncert/entropy.hpp"
#include "triuncert/error.hpp"
#include "triuncert/keyrate.hpp"

namespace triuncert {
namespace {

const MeasurementBasis& X() {
  static const auto b = pauli_basis(Pauli::x);
  return b;
}
const MeasurementBasis& Z() {
  static const auto b = pauli_basis(Pauli::z);
  return b;
}

// Devetak-Winter rate with Z as the key basis: S(Z|E) - S(Z|B).
double devetak_winter(const DensityMatrix& rho_abe) {
  const auto measured = post_measurement_state(rho_abe, Z());
  return conditional_entropy(partial_trace(measured, {0, 2}), {1}) -
         conditional_entropy(partial_trace(measured, {0, 1}), {1});
}

TEST(KeyRate, BellPairWithUncorrelatedEve) {
  std::mt19937_64 rng(61);
  const auto rho = tensor(testing::bell_pair(), testing::random_density({2}, rng));
  const auto k = key_report(rho, X(), Z(), X(), Z());
  EXPECT_NEAR(k.k_berta, 1.0, 1e-9);
  EXPECT_NEAR(k.k_improved, 1.0, 1e-9);
  EXPECT_NEAR(k.k_measured, 1.0, 1e-9);
  EXPECT_NEAR(k.s_xx, 0.0, 1e-12);
  EXPECT_NEAR(k.s_zz, 0.0, 1e-12);
  EXPECT_TRUE(k.symmetric);
}

TEST(KeyRate, MaximallyMixed) {
  const auto k = key_report(DensityMatrix::maximally_mixed({2, 2, 2}), X(), Z(), X(), Z());
  EXPECT_NEAR(k.k_berta, -1.0, 1e-12);
  EXPECT_NEAR(k.k_improved, 0.0, 1e-12);
  EXPECT_NEAR(k.k_measured, 0.0, 1e-12);
  EXPECT_NEAR(k.delta, 1.0, 1e-12);
  EXPECT_TRUE(k.symmetric);
}

TEST(KeyRate, StandaloneFunctionsMatchReport) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto rho = random_state(seed).rho;
    const auto k = key_report(rho, X(), Z(), X(), Z());
    EXPECT_NEAR(k.k_berta, key_rate_berta(rho, X(), Z()), 1e-12);
    EXPECT_NEAR(k.k_improved, key_rate_improved(rho, X(), Z()), 1e-12);
    EXPECT_NEAR(k.k_measured, key_rate_measured(rho, X(), Z(), X(), Z()), 1e-12);
    EXPECT_NEAR(k.delta, delta(rho, X(), Z()), 1e-12);
  }
}

TEST(KeyRate, OrderingOnRandomStates) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto rho = random_state(seed, 1 + seed % 8).rho;
    const auto k = key_report(rho, X(), Z(), X(), Z());
    EXPECT_NEAR(k.k_improved - k.k_berta, std::max(0.0, k.delta), 1e-12) << "seed " << seed;
    EXPECT_LE(k.k_measured, k.k_improved + 1e-9) << "seed " << seed;
    EXPECT_GE(k.s_xx, k.s_xb - 1e-9);
    EXPECT_GE(k.s_zz, k.s_zb - 1e-9);
    EXPECT_EQ(k.symmetric, std::abs(k.s_xx - k.s_zz) <= 1e-9);
  }
}

TEST(KeyRate, DevetakWinterDominatesBounds) {
  for (std::uint64_t seed = 500; seed < 700; ++seed) {
    const auto rho = random_state(seed).rho;
    const auto k = key_report(rho, X(), Z(), X(), Z());
    const double dw = devetak_winter(rho);
    EXPECT_GE(dw, k.k_berta - 1e-9);
    EXPECT_GE(dw, k.k_improved - 1e-9);
  }
}

TEST(KeyRate, AsymmetricErrors) {
  // Bell pair with a Z flip channel on B only: X outcomes decorrelate, Z stay.
  const auto bell = testing::bell_pair().matrix();
  ComplexMatrix zb{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
  auto m = 0.8 * bell + 0.2 * matmul(matmul(zb, bell), dagger(zb));
  const DensityMatrix rho_ab({2, 2}, m);
  const auto k = key_report(tensor(rho_ab, testing::qubit_diag(1.0)), X(), Z(), X(), Z());
  EXPECT_GT(k.s_xx, 0.5);
  EXPECT_NEAR(k.s_zz, 0.0, 1e-12);
  EXPECT_FALSE(k.symmetric);
}

TEST(KeyRate, RejectsMismatchedBobBasis) {
  const auto rho = DensityMatrix::maximally_mixed({2, 3, 2});
  EXPECT_THROW(key_rate_measured(rho, X(), Z(), X(), Z()), DomainError);
}

}  // namespace
}  // namespace triuncert
