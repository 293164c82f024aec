#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <limits>
#include <random>

#include "test_support.hpp"
#include "triuncert/error.hpp"
#include "triuncert/serialize.hpp"

namespace triuncert {
namespace {

TEST(Serialize, DensityMatrixRoundTripIsExact) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    const auto rho = testing::random_density({2, 2, 2}, rng, 1 + trial % 8);
    const auto back = parse_density_matrix(to_json(rho).dump());
    EXPECT_EQ(back.dims(), rho.dims());
    EXPECT_EQ(back.matrix(), rho.matrix());
  }
}

TEST(Serialize, RandomRecipeStateRoundTrips) {
  const auto rho = random_state(17).rho;
  EXPECT_EQ(parse_density_matrix(to_json(rho).dump(2)).matrix(), rho.matrix());
}

TEST(Serialize, MalformedTextReportsOffset) {
  const std::string text = R"({"dims": [2], "re": [[1, 0], [0, 0]] "im": []})";
  try {
    parse_density_matrix(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    // the offending token is the unexpected "im" key
    const auto at = text.find("\"im\"");
    EXPECT_GE(e.offset(), at);
    EXPECT_LE(e.offset(), at + 4);
  }
}

TEST(Serialize, TruncatedTextReportsOffset) {
  try {
    parse_json("[1, 2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
}

TEST(Serialize, StructuralErrors) {
  EXPECT_THROW(parse_density_matrix(R"([1, 2])"), ParseError);
  EXPECT_THROW(parse_density_matrix(R"({"dims": [2], "re": [[1, 0], [0, 0]]})"), ParseError);
  EXPECT_THROW(parse_density_matrix(R"({"dims": [2], "re": [[1, 0], [0]], "im": [[0, 0], [0, 0]]})"), ParseError);
  EXPECT_THROW(parse_density_matrix(R"({"dims": [2], "re": [[1, "a"], [0, 0]], "im": [[0, 0], [0, 0]]})"),
               ParseError);
  EXPECT_THROW(parse_density_matrix(R"({"dims": [0], "re": [[1]], "im": [[0]]})"), ParseError);
  EXPECT_THROW(parse_density_matrix(R"({"dims": [-2], "re": [[1]], "im": [[0]]})"), ParseError);
}

TEST(Serialize, InvalidStatesAreDomainErrors) {
  // Hermitian, unit trace, eigenvalues 1.5 and -0.5
  EXPECT_THROW(parse_density_matrix(R"({"dims": [2], "re": [[0.5, 1], [1, 0.5]], "im": [[0, 0], [0, 0]]})"),
               DomainError);
  EXPECT_THROW(parse_density_matrix(R"({"dims": [2], "re": [[1, 0], [0, 1]], "im": [[0, 0], [0, 0]]})"),
               DomainError);
}

TEST(Serialize, DimsMismatchIsShapeError) {
  EXPECT_THROW(parse_density_matrix(R"({"dims": [3], "re": [[1, 0], [0, 0]], "im": [[0, 0], [0, 0]]})"),
               ShapeError);
}

TEST(Serialize, BasisRoundTrip) {
  for (auto p : {Pauli::x, Pauli::y, Pauli::z}) {
    const auto b = pauli_basis(p);
    const auto back = parse_basis(to_json(b).dump());
    EXPECT_EQ(back.label(), b.label());
    EXPECT_EQ(back.vectors(), b.vectors());
  }
}

TEST(Serialize, CustomBasis) {
  const auto b = parse_basis(R"({"vectors": [{"re": [0.6, 0.8], "im": [0, 0]}, {"re": [0.8, -0.6], "im": [0, 0]}]})");
  EXPECT_EQ(b.label(), "custom");
  EXPECT_NEAR(q_mu(b, pauli_basis(Pauli::z)), -std::log2(0.64), 1e-12);
  EXPECT_THROW(parse_basis(R"({"vectors": [{"re": [1, 0], "im": [0, 0]}, {"re": [1, 0], "im": [0, 0]}]})"),
               DomainError);
  EXPECT_THROW(parse_basis(R"({"vectors": [{"re": [1, 0], "im": [0]}]})"), ParseError);
  EXPECT_THROW(parse_basis(R"({"label": "x"})"), ParseError);
}

TEST(Serialize, FormatDoubleRoundTrips) {
  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> dist(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const double v = dist(rng) * std::pow(10.0, i % 20 - 10);
    const auto s = format_double(v);
    double back = 0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    EXPECT_EQ(back, v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0), "1");
}

TEST(Serialize, ReportRowsFollowColumns) {
  BoundReport r;
  r.u_left = 1.5;
  r.s_a = 0.25;
  const auto row = bound_report_row(3, r);
  ASSERT_EQ(row.size(), bound_report_columns().size());
  EXPECT_EQ(row[0], 3);
  EXPECT_EQ(row[2], 1.5);
  EXPECT_EQ(row.back(), 0.25);
  const auto j = to_json(r);
  EXPECT_EQ(j.at("u_left").get<double>(), 1.5);

  KeyRateReport k;
  k.k_improved = -0.2;
  k.symmetric = true;
  const auto krow = key_report_row(k);
  ASSERT_EQ(krow.size(), key_report_columns().size());
  EXPECT_EQ(krow.back(), 1.0);
  const auto kj = to_json(k);
  EXPECT_EQ(kj.at("certifiable_key").get<double>(), 0.0);
}

TEST(Serialize, MissingFileIsParseError) {
  EXPECT_THROW(read_json_file("/nonexistent/state.json"), ParseError);
}

}  // namespace
}  // namespace triuncert
