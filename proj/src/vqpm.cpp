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

#include "vqpm/vqpm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vqpm {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

int bitOfIndex(Eigen::Index index, Eigen::Index n, Eigen::Index qubit) {
  return static_cast<int>((index >> (n - 1 - qubit)) & 1);
}

}  // namespace

AnsatzState AnsatzState::uniform(Eigen::Index qubitCount) {
  if (qubitCount < 1) {
    throw std::invalid_argument("AnsatzState: need at least one qubit");
  }
  std::vector<Qubit> qubits(static_cast<std::size_t>(qubitCount),
                            Qubit{false, std::numbers::pi / 4.0, 0});
  return AnsatzState(std::move(qubits));
}

const AnsatzState::Qubit& AnsatzState::at(Eigen::Index qubit) const {
  if (qubit < 0 || qubit >= size()) {
    throw std::out_of_range("AnsatzState: qubit index out of range");
  }
  return qubits_[static_cast<std::size_t>(qubit)];
}

AnsatzState::Qubit& AnsatzState::at(Eigen::Index qubit) {
  return const_cast<Qubit&>(std::as_const(*this).at(qubit));
}

bool AnsatzState::isFrozen(Eigen::Index qubit) const {
  return at(qubit).frozen;
}

double AnsatzState::angle(Eigen::Index qubit) const {
  const Qubit& q = at(qubit);
  if (q.frozen) {
    throw std::logic_error("AnsatzState: angle() on a frozen qubit");
  }
  return q.theta;
}

int AnsatzState::frozenBit(Eigen::Index qubit) const {
  const Qubit& q = at(qubit);
  if (!q.frozen) {
    throw std::logic_error("AnsatzState: frozenBit() on a free qubit");
  }
  return q.bit;
}

void AnsatzState::setAngle(Eigen::Index qubit, double theta) {
  Qubit& q = at(qubit);
  if (q.frozen) {
    throw std::logic_error("AnsatzState: cannot rotate a frozen qubit");
  }
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    throw std::invalid_argument("AnsatzState: angle must be in [0, pi/2]");
  }
  q.theta = theta;
}

void AnsatzState::freeze(Eigen::Index qubit, int bit) {
  Qubit& q = at(qubit);
  if (q.frozen) {
    throw std::logic_error("AnsatzState: qubit is already frozen");
  }
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("AnsatzState: frozen bit must be 0 or 1");
  }
  q.frozen = true;
  q.bit = bit;
}

Eigen::Index AnsatzState::frozenCount() const {
  return static_cast<Eigen::Index>(
      std::count_if(qubits_.begin(), qubits_.end(),
                    [](const Qubit& q) { return q.frozen; }));
}

std::vector<bool> AnsatzState::frozenMask() const {
  std::vector<bool> mask(qubits_.size());
  for (std::size_t j = 0; j < qubits_.size(); ++j) {
    mask[j] = qubits_[j].frozen;
  }
  return mask;
}

std::string toString(Termination reason) {
  switch (reason) {
    case Termination::AllFrozen:
      return "all-frozen";
    case Termination::MaxIters:
      return "max-iters";
    case Termination::SuccessThreshold:
      return "success-threshold";
  }
  return "unknown";
}

std::string toString(Mode mode) {
  return mode == Mode::Variational ? "variational" : "exact";
}

Mode modeFromString(std::string_view text) {
  if (text == "variational") return Mode::Variational;
  if (text == "exact") return Mode::Exact;
  throw std::invalid_argument("mode must be 'variational' or 'exact'");
}

void VqpmConfig::validate() const {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("VqpmConfig: gamma must be in (0, 1)");
  }
  if (!(pDiff > 0.0 && pDiff < 1.0)) {
    throw std::invalid_argument("VqpmConfig: pDiff must be in (0, 1)");
  }
  if (maxIters < 1) {
    throw std::invalid_argument("VqpmConfig: maxIters must be >= 1");
  }
  if (!(successThreshold > 0.0)) {
    throw std::invalid_argument("VqpmConfig: successThreshold must be > 0");
  }
}

StateVector prepareState(const AnsatzState& ansatz) {
  const Eigen::Index n = ansatz.size();
  StateVector state(1);
  state(0) = Complex(1.0, 0.0);
  for (Eigen::Index j = 0; j < n; ++j) {
    double amp0;
    double amp1;
    if (ansatz.isFrozen(j)) {
      amp0 = ansatz.frozenBit(j) == 0 ? 1.0 : 0.0;
      amp1 = 1.0 - amp0;
    } else {
      amp0 = std::cos(ansatz.angle(j));
      amp1 = std::sin(ansatz.angle(j));
    }
    StateVector next(state.size() * 2);
    for (Eigen::Index t = 0; t < state.size(); ++t) {
      next(2 * t) = state(t) * amp0;
      next(2 * t + 1) = state(t) * amp1;
    }
    state = std::move(next);
  }
  return state;
}

PowerStepResult powerStep(const StateVector& state,
                          const DiagonalOracle& oracle) {
  if (state.size() != oracle.dimension()) {
    throw DimensionError("powerStep: state and oracle dimensions differ");
  }
  StateVector next(state.size());
  for (Eigen::Index j = 0; j < state.size(); ++j) {
    next(j) = state(j) * (1.0 + std::polar(1.0, oracle.phase(j)));
  }
  const double squared = next.squaredNorm();
  if (squared == 0.0) {
    throw std::domain_error("powerStep: (I+U) annihilated the state");
  }
  next /= std::sqrt(squared);
  return {std::move(next), squared / 4.0};
}

HadamardBranches hadamardBranches(const StateVector& state,
                                  const DiagonalOracle& oracle) {
  if (state.size() != oracle.dimension()) {
    throw DimensionError(
        "hadamardBranches: state and oracle dimensions differ");
  }
  double plus = 0.0;
  double minus = 0.0;
  for (Eigen::Index j = 0; j < state.size(); ++j) {
    const Complex u = std::polar(1.0, oracle.phase(j));
    plus += std::norm(state(j) * (1.0 + u));
    minus += std::norm(state(j) * (1.0 - u));
  }
  return {plus / 4.0, minus / 4.0};
}

Eigen::VectorXd marginals(const StateVector& state) {
  const Eigen::Index n = qubitCountForDimension(state.size());
  Eigen::VectorXd result = Eigen::VectorXd::Zero(n);
  for (Eigen::Index idx = 0; idx < state.size(); ++idx) {
    const double p = std::norm(state(idx));
    if (p == 0.0) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (bitOfIndex(idx, n, j)) result(j) += p;
    }
  }
  return result;
}

double roundToPrecision(double p, double gamma) {
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("roundToPrecision: gamma must be positive");
  }
  const double rounded = std::round(p / gamma) * gamma;
  return std::clamp(rounded, 0.0, 1.0);
}

AnsatzState updateAnsatz(const AnsatzState& ansatz,
                         const Eigen::VectorXd& roundedMarginals,
                         const VqpmConfig& config) {
  if (roundedMarginals.size() != ansatz.size()) {
    throw DimensionError("updateAnsatz: marginal count does not match");
  }
  AnsatzState next = ansatz;
  for (Eigen::Index j = 0; j < next.size(); ++j) {
    if (next.isFrozen(j)) continue;
    const double m = roundedMarginals(j);
    if (std::abs(2.0 * m - 1.0) >= config.pDiff) {
      next.freeze(j, m > 0.5 ? 1 : 0);
    } else {
      next.setAngle(j, std::asin(std::sqrt(m)));
    }
  }
  return next;
}

namespace {

/// Basis index of maximum probability among indices consistent with the
/// frozen qubits; ties go to the smallest index.
Eigen::Index readout(const StateVector& state, const AnsatzState& ansatz) {
  const Eigen::Index n = ansatz.size();
  Eigen::Index best = -1;
  double bestProb = -1.0;
  for (Eigen::Index idx = 0; idx < state.size(); ++idx) {
    bool consistent = true;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (ansatz.isFrozen(j) &&
          bitOfIndex(idx, n, j) != ansatz.frozenBit(j)) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    const double p = std::norm(state(idx));
    if (p > bestProb) {
      bestProb = p;
      best = idx;
    }
  }
  return best;
}

}  // namespace

VqpmResult run(const ScaledProblem& scaled, const VqpmConfig& config,
               const std::optional<Bitstring>& reference) {
  config.validate();
  const Eigen::Index n = scaled.base().size();
  if (reference && reference->size() != n) {
    throw DimensionError("run: reference length does not match n");
  }
  const DiagonalOracle oracle = buildOracle(scaled);
  const Eigen::Index referenceIndex =
      reference ? static_cast<Eigen::Index>(reference->index()) : -1;

  AnsatzState ansatz = AnsatzState::uniform(n);
  std::vector<IterationRecord> trace;
  StateVector lastState;
  Termination reason = Termination::MaxIters;
  int used = config.maxIters;

  bool wasAllFrozen = false;
  for (int iter = 1; iter <= config.maxIters; ++iter) {
    const StateVector prepared = prepareState(ansatz);
    auto [stepped, p0] = powerStep(prepared, oracle);
    Eigen::VectorXd rounded = marginals(stepped);
    for (Eigen::Index j = 0; j < n; ++j) {
      rounded(j) = roundToPrecision(rounded(j), config.gamma);
    }
    ansatz = updateAnsatz(ansatz, rounded, config);

    IterationRecord record{iter, p0, std::move(rounded), ansatz.frozenMask(),
                           std::nullopt};
    if (reference) {
      record.successProbability = std::norm(stepped(referenceIndex));
    }
    lastState = std::move(stepped);
    trace.push_back(std::move(record));

    if (reference &&
        *trace.back().successProbability >= config.successThreshold) {
      reason = Termination::SuccessThreshold;
      used = iter;
      break;
    }
    // The all-frozen stop takes effect one iteration after the last qubit
    // froze, so the trace contains a record of the fully frozen state.
    if (wasAllFrozen && ansatz.allFrozen()) {
      reason = Termination::AllFrozen;
      used = iter;
      break;
    }
    wasAllFrozen = ansatz.allFrozen();
  }

  const Eigen::Index foundIndex = readout(lastState, ansatz);
  Bitstring found = Bitstring::fromIndex(n, foundIndex);
  const double value = rawObjective(scaled, found);
  return {std::move(found), value, used, reason, std::move(trace)};
}

PowerIterationOutcome powerIteration(const DiagonalOracle& oracle,
                                     const VqpmConfig& config) {
  config.validate();
  const Eigen::Index dim = oracle.dimension();
  StateVector state =
      StateVector::Constant(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));

  std::vector<IterationRecord> trace;
  Termination reason = Termination::MaxIters;
  int used = config.maxIters;
  for (int iter = 1; iter <= config.maxIters; ++iter) {
    auto [stepped, p0] = powerStep(state, oracle);
    state = std::move(stepped);
    trace.push_back(IterationRecord{
        iter, p0, marginals(state),
        std::vector<bool>(static_cast<std::size_t>(oracle.qubitCount()),
                          false),
        std::nullopt});
    double maxProb = 0.0;
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
      maxProb = std::max(maxProb, std::norm(state(idx)));
    }
    if (maxProb >= config.successThreshold) {
      reason = Termination::SuccessThreshold;
      used = iter;
      break;
    }
  }

  Eigen::Index best = 0;
  double bestProb = std::norm(state(0));
  for (Eigen::Index idx = 1; idx < dim; ++idx) {
    const double p = std::norm(state(idx));
    if (p > bestProb) {
      bestProb = p;
      best = idx;
    }
  }
  return {best, used, reason, std::move(trace)};
}

VqpmResult runExactPower(const ScaledProblem& scaled,
                         const VqpmConfig& config) {
  const DiagonalOracle oracle = buildOracle(scaled);
  PowerIterationOutcome outcome = powerIteration(oracle, config);
  Bitstring found =
      Bitstring::fromIndex(oracle.qubitCount(), outcome.foundIndex);
  const double value = rawObjective(scaled, found);
  return {std::move(found), value, outcome.iterations, outcome.termination,
          std::move(outcome.trace)};
}

}  // namespace vqpm
