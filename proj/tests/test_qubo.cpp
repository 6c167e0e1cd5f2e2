// Copyright 2026 The vqpm-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "example_problem.hpp"
#include "vqpm/qubo.hpp"

using namespace vqpm;
using vqpm::testing::fourVarExample;
using vqpm::testing::kExampleSpectrum;
using vqpm::testing::referenceObjective;

namespace {

QuboInstance linearOnly(std::initializer_list<double> coefficients) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(coefficients.size()));
  Eigen::Index i = 0;
  for (double value : coefficients) c(i++) = value;
  return QuboInstance(c, Eigen::MatrixXd::Zero(c.size(), c.size()));
}

}  // namespace

TEST_CASE("objective evaluates the quadratic form") {
  const QuboInstance p = fourVarExample();
  CHECK(std::abs(objective(p, Bitstring::fromString("0011")) - -4.93112) <
        5e-6);
  CHECK(objective(p, Bitstring::fromString("0000")) == 0.0);
  CHECK(std::abs(objective(p, Bitstring::fromString("1111")) - -0.21059) <
        5e-6);
}

TEST_CASE("objective rejects a bitstring of the wrong length") {
  const QuboInstance p = fourVarExample();
  CHECK_THROWS_AS(objective(p, Bitstring::fromString("001")),
                  DimensionError);
}

TEST_CASE("objective matches the independent evaluation on every basis "
          "state") {
  const QuboInstance p = generateRandom(7, 99);
  for (std::uint64_t idx = 0; idx < (1u << 7); ++idx) {
    CHECK(objective(p, Bitstring::fromIndex(7, idx)) ==
          doctest::Approx(referenceObjective(p, idx)).epsilon(1e-12));
  }
}

TEST_CASE("flipping one bit shifts the objective by its interaction sum") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng() % 9);
    const QuboInstance p = generateRandom(n, rng());
    Bitstring x = Bitstring::fromIndex(
        n, rng() % (std::uint64_t{1} << n));
    const Eigen::Index k = static_cast<Eigen::Index>(rng() % n);

    double delta = p.linear()(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      if (x.bit(i)) delta += p.quadratic(i, k);
    }
    for (Eigen::Index j = k + 1; j < n; ++j) {
      if (x.bit(j)) delta += p.quadratic(k, j);
    }

    const double before = objective(p, x);
    const int sign = x.bit(k) ? -1 : 1;
    x.setBit(k, 1 - x.bit(k));
    CHECK(objective(p, x) ==
          doctest::Approx(before + sign * delta).epsilon(1e-12));
  }
}

TEST_CASE("scaleProblem maps the coefficient sum onto pi/4") {
  SUBCASE("four-variable example") {
    const ScaledProblem s = scaleProblem(fourVarExample());
    CHECK(std::abs(s.base().linear()(0) - 0.216386) < 1e-6);
    CHECK(s.phaseShift() == doctest::Approx(std::numbers::pi / 4));
    CHECK(s.base().coefficientNorm() ==
          doctest::Approx(std::numbers::pi / 4).epsilon(1e-12));
  }
  SUBCASE("single coefficient scales to the full range") {
    const ScaledProblem s = scaleProblem(linearOnly({5.0}));
    CHECK(s.base().linear()(0) ==
          doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
  }
  SUBCASE("two variables with a quadratic term") {
    Eigen::VectorXd c(2);
    c << 1.0, 1.0;
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(2, 2);
    q(0, 1) = 2.0;
    const ScaledProblem s = scaleProblem(QuboInstance(c, q));
    CHECK(s.base().linear()(0) ==
          doctest::Approx(std::numbers::pi / 16).epsilon(1e-15));
    CHECK(s.base().linear()(1) ==
          doctest::Approx(std::numbers::pi / 16).epsilon(1e-15));
    CHECK(s.base().quadratic(0, 1) ==
          doctest::Approx(std::numbers::pi / 8).epsilon(1e-15));
  }
  SUBCASE("all-zero problems are rejected") {
    CHECK_THROWS_AS(scaleProblem(linearOnly({0.0, 0.0})),
                    DegenerateProblemError);
  }
}

TEST_CASE("scaled objectives stay within [-pi/4, pi/4]") {
  std::mt19937 rng(7);
  for (Eigen::Index n = 1; n <= 12; ++n) {
    const ScaledProblem s = scaleProblem(generateRandom(n, rng()));
    const Eigen::VectorXd values = objectiveTable(s.base());
    CHECK(values.cwiseAbs().maxCoeff() <=
          std::numbers::pi / 4 + 1e-12);
  }
}

TEST_CASE("generateRandom is deterministic in the seed") {
  CHECK(generateRandom(4, 7) == generateRandom(4, 7));
  CHECK_FALSE(generateRandom(4, 7) == generateRandom(4, 8));
  CHECK_THROWS_AS(generateRandom(0, 1), std::invalid_argument);
}

TEST_CASE("generateRandom draws coefficients in [-1, 1]") {
  const QuboInstance p = generateRandom(9, 123);
  CHECK(p.linear().cwiseAbs().maxCoeff() <= 1.0);
  CHECK(p.quadratic().cwiseAbs().maxCoeff() <= 1.0);
  // dense upper triangle: every pair is drawn
  for (Eigen::Index i = 0; i < 9; ++i) {
    for (Eigen::Index j = i + 1; j < 9; ++j) {
      CHECK(p.quadratic(i, j) != 0.0);
    }
  }
}

TEST_CASE("bruteForceSolve finds the known optimum") {
  const auto [best, value] = bruteForceSolve(fourVarExample());
  CHECK(best.str() == "0011");
  CHECK(std::abs(value - -4.93112) < 5e-6);
}

TEST_CASE("bruteForceSolve returns all-zeros for positive coefficients") {
  Eigen::VectorXd c(3);
  c << 0.3, 1.2, 0.7;
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(3, 3);
  q(0, 1) = 0.4;
  q(1, 2) = 0.1;
  const auto [best, value] = bruteForceSolve(QuboInstance(c, q));
  CHECK(best.str() == "000");
  CHECK(value == 0.0);
}

TEST_CASE("bruteForceSolve agrees with exhaustive enumeration") {
  std::mt19937 rng(31);
  for (Eigen::Index n = 1; n <= 12; n += 2) {
    const QuboInstance p = generateRandom(n, rng());
    const auto [best, value] = bruteForceSolve(p);

    double minimum = referenceObjective(p, 0);
    std::uint64_t argmin = 0;
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << n); ++idx) {
      const double candidate = referenceObjective(p, idx);
      if (candidate < minimum) {
        minimum = candidate;
        argmin = idx;
      }
    }
    CHECK(best.index() == argmin);
    CHECK(value == doctest::Approx(minimum).epsilon(1e-12));
  }
}

TEST_CASE("bruteForceSolve breaks ties toward the smallest basis index") {
  // 01 and 10 both evaluate to the minimum -1.
  Eigen::VectorXd c(2);
  c << -1.0, -1.0;
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(2, 2);
  q(0, 1) = 2.0;
  const auto [best, value] = bruteForceSolve(QuboInstance(c, q));
  CHECK(value == -1.0);
  CHECK(best.str() == "01");  // -1 twice: 01 and 10; smaller index wins
}

TEST_CASE("bruteForceSolve refuses oversized problems") {
  CHECK_THROWS_AS(bruteForceSolve(generateRandom(kMaxQubits + 1, 1)),
                  CapacityError);
}

TEST_CASE("problem files round-trip exactly") {
  const QuboInstance p = fourVarExample();
  CHECK(parseProblem(serializeProblem(p)) == p);

  const QuboInstance r = generateRandom(6, 555);
  CHECK(parseProblem(serializeProblem(r)) == r);
}

TEST_CASE("parseProblem names the offending element") {
  SUBCASE("lower-triangular key") {
    const char* text = R"({"n": 4, "c": [0, 0, 0, 1],
                           "q": [{"i": 2, "j": 1, "value": 1.0}]})";
    CHECK_THROWS_WITH_AS(parseProblem(text),
                         doctest::Contains("lower-triangular key"),
                         ParseError);
  }
  SUBCASE("index out of range") {
    const char* text = R"({"n": 4, "c": [0, 0, 0, 1],
                           "q": [{"i": 1, "j": 5, "value": 1.0}]})";
    CHECK_THROWS_WITH_AS(parseProblem(text),
                         doctest::Contains("index out of range"),
                         ParseError);
  }
  SUBCASE("duplicate key") {
    const char* text = R"({"n": 3, "c": [0, 0, 1],
                           "q": [{"i": 0, "j": 1, "value": 1.0},
                                 {"i": 0, "j": 1, "value": 2.0}]})";
    CHECK_THROWS_WITH_AS(parseProblem(text),
                         doctest::Contains("duplicate key"), ParseError);
  }
  SUBCASE("diagonal key") {
    const char* text = R"({"n": 3, "c": [0, 0, 1],
                           "q": [{"i": 1, "j": 1, "value": 1.0}]})";
    CHECK_THROWS_WITH_AS(parseProblem(text),
                         doctest::Contains("diagonal key"), ParseError);
  }
  SUBCASE("unknown top-level field") {
    CHECK_THROWS_WITH_AS(
        parseProblem(R"({"n": 1, "c": [1], "q": [], "extra": 1})"),
        doctest::Contains("unknown field"), ParseError);
  }
  SUBCASE("unknown record field") {
    const char* text = R"({"n": 2, "c": [0, 1],
                           "q": [{"i": 0, "j": 1, "value": 1, "w": 2}]})";
    CHECK_THROWS_WITH_AS(parseProblem(text),
                         doctest::Contains("unknown field"), ParseError);
  }
  SUBCASE("malformed document") {
    CHECK_THROWS_AS(parseProblem("{"), ParseError);
    CHECK_THROWS_AS(parseProblem("[1, 2]"), ParseError);
  }
  SUBCASE("missing fields") {
    CHECK_THROWS_WITH_AS(parseProblem(R"({"n": 1, "c": [1]})"),
                         doctest::Contains("missing field"), ParseError);
  }
  SUBCASE("wrong c length") {
    CHECK_THROWS_AS(parseProblem(R"({"n": 2, "c": [1], "q": []})"),
                    ParseError);
  }
}

TEST_CASE("QuboInstance validates its construction") {
  Eigen::VectorXd c(2);
  c << 1.0, 2.0;
  SUBCASE("quadratic matrix must match n") {
    CHECK_THROWS_AS(QuboInstance(c, Eigen::MatrixXd::Zero(3, 3)),
                    DimensionError);
  }
  SUBCASE("lower triangle must be zero") {
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(2, 2);
    q(1, 0) = 1.0;
    CHECK_THROWS_AS(QuboInstance(c, q), std::invalid_argument);
  }
  SUBCASE("coefficients must be finite") {
    Eigen::VectorXd bad(2);
    bad << 1.0, std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(QuboInstance(bad, Eigen::MatrixXd::Zero(2, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("known spectrum rows pin the raw objective") {
  const QuboInstance p = fourVarExample();
  for (const auto& row : kExampleSpectrum) {
    CHECK(std::abs(objective(p, Bitstring::fromString(row.bits)) - row.raw) <
          5e-6);
  }
}
