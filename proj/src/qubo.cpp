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

#include "vqpm/qubo.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"

namespace vqpm {

namespace {

// Deterministic across platforms, unlike std::uniform_real_distribution.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [-1, 1).
  double uniformSigned() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }
};

int bitAt(std::uint64_t index, Eigen::Index n, Eigen::Index pos) {
  return static_cast<int>((index >> (n - 1 - pos)) & 1u);
}

}  // namespace

QuboInstance::QuboInstance(Eigen::VectorXd linear, Eigen::MatrixXd quadratic)
    : linear_(std::move(linear)), quadratic_(std::move(quadratic)) {
  const Eigen::Index n = linear_.size();
  if (n < 1) {
    throw std::invalid_argument("QuboInstance: need at least one variable");
  }
  if (quadratic_.rows() != n || quadratic_.cols() != n) {
    throw DimensionError("QuboInstance: quadratic matrix must be n-by-n");
  }
  if (!linear_.allFinite() || !quadratic_.allFinite()) {
    throw std::invalid_argument("QuboInstance: coefficients must be finite");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      if (quadratic_(i, j) != 0.0) {
        throw std::invalid_argument(
            "QuboInstance: quadratic matrix must be strictly upper "
            "triangular");
      }
    }
  }
}

double QuboInstance::coefficientNorm() const {
  return linear_.cwiseAbs().sum() + quadratic_.cwiseAbs().sum();
}

bool QuboInstance::operator==(const QuboInstance& other) const {
  return linear_.size() == other.linear_.size() &&
         (linear_.array() == other.linear_.array()).all() &&
         (quadratic_.array() == other.quadratic_.array()).all();
}

double objective(const QuboInstance& problem, const Bitstring& x) {
  if (x.size() != problem.size()) {
    throw DimensionError("objective: bitstring length does not match n");
  }
  return objectiveAtIndex(problem, x.index());
}

double objectiveAtIndex(const QuboInstance& problem, std::uint64_t index) {
  const Eigen::Index n = problem.size();
  const auto& c = problem.linear();
  const auto& q = problem.quadratic();
  double value = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!bitAt(index, n, i)) continue;
    value += c(i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (bitAt(index, n, j)) value += q(i, j);
    }
  }
  return value;
}

Eigen::VectorXd objectiveTable(const QuboInstance& problem) {
  const Eigen::Index n = problem.size();
  if (n > kMaxQubits) {
    throw CapacityError("objectiveTable: n exceeds the 2^n table guard");
  }
  const Eigen::Index size = Eigen::Index{1} << n;
  Eigen::VectorXd values(size);
  for (Eigen::Index idx = 0; idx < size; ++idx) {
    values(idx) = objectiveAtIndex(problem, static_cast<std::uint64_t>(idx));
  }
  return values;
}

double rawObjective(const ScaledProblem& scaled, const Bitstring& x) {
  return objective(scaled.base(), x) / scaled.scaleFactor();
}

ScaledProblem scaleProblem(const QuboInstance& problem) {
  const double norm = problem.coefficientNorm();
  if (norm == 0.0) {
    throw DegenerateProblemError(
        "scaleProblem: all coefficients are zero, scale factor undefined");
  }
  const double factor = std::numbers::pi / 4.0 / norm;
  QuboInstance scaled(problem.linear() * factor, problem.quadratic() * factor);
  return ScaledProblem(std::move(scaled), factor, std::numbers::pi / 4.0);
}

QuboInstance generateRandom(Eigen::Index n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("generateRandom: n must be >= 1");
  }
  SplitMix64 rng{seed};
  Eigen::VectorXd c(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    c(i) = rng.uniformSigned();
  }
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      q(i, j) = rng.uniformSigned();
    }
  }
  return QuboInstance(std::move(c), std::move(q));
}

std::pair<Bitstring, double> bruteForceSolve(const QuboInstance& problem) {
  const Eigen::Index n = problem.size();
  if (n > kMaxQubits) {
    throw CapacityError("bruteForceSolve: n exceeds the enumeration guard");
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  std::uint64_t bestIndex = 0;
  double bestValue = objectiveAtIndex(problem, 0);
  for (std::uint64_t idx = 1; idx < size; ++idx) {
    const double value = objectiveAtIndex(problem, idx);
    if (value < bestValue) {
      bestValue = value;
      bestIndex = idx;
    }
  }
  return {Bitstring::fromIndex(n, bestIndex), bestValue};
}

namespace {

using nlohmann::ordered_json;

const ordered_json& requireField(const ordered_json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(std::string("problem file: missing field '") + name +
                     "'");
  }
  return *it;
}

}  // namespace

QuboInstance parseProblem(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("problem file: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("problem file: top-level value must be an object");
  }
  for (const auto& item : doc.items()) {
    const auto& key = item.key();
    if (key != "n" && key != "c" && key != "q") {
      throw ParseError("problem file: unknown field '" + key + "'");
    }
  }

  const auto& nField = requireField(doc, "n");
  if (!nField.is_number_integer() || nField.get<std::int64_t>() < 1) {
    throw ParseError("problem file: 'n' must be an integer >= 1");
  }
  const auto n = nField.get<Eigen::Index>();

  const auto& cField = requireField(doc, "c");
  if (!cField.is_array() || static_cast<Eigen::Index>(cField.size()) != n) {
    throw ParseError("problem file: 'c' must be an array of n numbers");
  }
  Eigen::VectorXd c(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& entry = cField[static_cast<std::size_t>(i)];
    if (!entry.is_number()) {
      throw ParseError("problem file: c[" + std::to_string(i) +
                       "] is not a number");
    }
    c(i) = entry.get<double>();
  }

  const auto& qField = requireField(doc, "q");
  if (!qField.is_array()) {
    throw ParseError("problem file: 'q' must be an array of {i, j, value}");
  }
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> seen =
      Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n,
                                                                    false);
  for (std::size_t k = 0; k < qField.size(); ++k) {
    const auto& entry = qField[k];
    const std::string where = "problem file: q[" + std::to_string(k) + "]";
    if (!entry.is_object()) {
      throw ParseError(where + ": expected an object {i, j, value}");
    }
    for (const auto& item : entry.items()) {
      const auto& key = item.key();
      if (key != "i" && key != "j" && key != "value") {
        throw ParseError(where + ": unknown field '" + key + "'");
      }
    }
    const auto& iField = requireField(entry, "i");
    const auto& jField = requireField(entry, "j");
    const auto& vField = requireField(entry, "value");
    if (!iField.is_number_integer() || !jField.is_number_integer()) {
      throw ParseError(where + ": 'i' and 'j' must be integers");
    }
    if (!vField.is_number()) {
      throw ParseError(where + ": 'value' is not a number");
    }
    const auto i = iField.get<std::int64_t>();
    const auto j = jField.get<std::int64_t>();
    const std::string pair =
        " (" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw ParseError(where + ": index out of range" + pair);
    }
    if (i > j) {
      throw ParseError(where + ": lower-triangular key" + pair);
    }
    if (i == j) {
      throw ParseError(where + ": diagonal key" + pair);
    }
    if (seen(i, j)) {
      throw ParseError(where + ": duplicate key" + pair);
    }
    seen(i, j) = true;
    q(i, j) = vField.get<double>();
  }

  try {
    return QuboInstance(std::move(c), std::move(q));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("problem file: ") + e.what());
  }
}

std::string serializeProblem(const QuboInstance& problem) {
  const Eigen::Index n = problem.size();
  ordered_json doc;
  doc["n"] = n;
  doc["c"] = std::vector<double>(problem.linear().begin(),
                                 problem.linear().end());
  auto q = ordered_json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double value = problem.quadratic(i, j);
      if (value != 0.0) {
        q.push_back({{"i", i}, {"j", j}, {"value", value}});
      }
    }
  }
  doc["q"] = std::move(q);
  return doc.dump(2) + "\n";
}

}  // namespace vqpm
