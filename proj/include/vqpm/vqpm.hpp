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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vqpm/qubo.hpp"
#include "vqpm/spectrum.hpp"
#include "vqpm/types.hpp"

namespace vqpm {

/// Per-qubit circuit settings: a qubit is either free, carrying a rotation
/// angle theta in [0, pi/2], or frozen to a fixed bit. Freezing is
/// permanent within a run.
class AnsatzState {
 public:
  /// All qubits free at theta = pi/4 (the equal superposition).
  static AnsatzState uniform(Eigen::Index qubitCount);

  Eigen::Index size() const {
    return static_cast<Eigen::Index>(qubits_.size());
  }
  bool isFrozen(Eigen::Index qubit) const;
  /// Rotation angle of a free qubit; throws if frozen.
  double angle(Eigen::Index qubit) const;
  /// Fixed bit of a frozen qubit; throws if free.
  int frozenBit(Eigen::Index qubit) const;

  void setAngle(Eigen::Index qubit, double theta);
  void freeze(Eigen::Index qubit, int bit);

  Eigen::Index frozenCount() const;
  bool allFrozen() const { return frozenCount() == size(); }
  std::vector<bool> frozenMask() const;

 private:
  struct Qubit {
    bool frozen;
    double theta;  // valid when free
    int bit;       // valid when frozen
  };

  explicit AnsatzState(std::vector<Qubit> qubits)
      : qubits_(std::move(qubits)) {}

  const Qubit& at(Eigen::Index qubit) const;
  Qubit& at(Eigen::Index qubit);

  std::vector<Qubit> qubits_;
};

enum class Mode { Variational, Exact };

enum class Termination { AllFrozen, MaxIters, SuccessThreshold };

std::string toString(Termination reason);
std::string toString(Mode mode);
/// Parses "variational" or "exact"; throws std::invalid_argument otherwise.
Mode modeFromString(std::string_view text);

struct VqpmConfig {
  /// Probability measurement granularity; marginals are rounded to
  /// multiples of gamma before feedback.
  double gamma = 1e-4;
  /// Freeze threshold on |P(1) - P(0)|.
  double pDiff = 1e-3;
  int maxIters = 100;
  Mode mode = Mode::Variational;
  /// Probability level used for experiment bookkeeping only.
  double successThreshold = 0.5;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct IterationRecord {
  int iteration;
  double p0;
  /// Per-qubit P(1); rounded to gamma in variational mode, raw in exact
  /// mode.
  Eigen::VectorXd marginals;
  /// Frozen flags after this iteration's update.
  std::vector<bool> frozenMask;
  /// |<x_ref|state>|^2 after the power step; present only when a reference
  /// solution was supplied.
  std::optional<double> successProbability;
};

struct VqpmResult {
  Bitstring found;
  /// Objective of `found` on the original, unscaled coefficients.
  double objectiveValue;
  int iterations;
  Termination termination;
  std::vector<IterationRecord> trace;
};

/// Product state of the per-qubit amplitudes: (cos theta, sin theta) for a
/// free qubit, (1,0) or (0,1) for a frozen one. Unit norm.
StateVector prepareState(const AnsatzState& ansatz);

struct PowerStepResult {
  StateVector state;  ///< (I+U)v, normalized
  double p0;          ///< ||(I+U)v||^2 / 4
};

/// One power iteration: multiplies amplitude j by (1 + e^{i phi_j}) and
/// normalizes. p0 is the probability of measuring the control qubit in
/// |0> in the equivalent Hadamard-test circuit.
PowerStepResult powerStep(const StateVector& state,
                          const DiagonalOracle& oracle);

struct HadamardBranches {
  double p0;  ///< ||(I+U)v||^2 / 4
  double p1;  ///< ||(I-U)v||^2 / 4
};

/// Both branch probabilities of the Hadamard test; p0 + p1 = 1.
HadamardBranches hadamardBranches(const StateVector& state,
                                  const DiagonalOracle& oracle);

/// Entry j is the total probability of measuring qubit j in |1>.
Eigen::VectorXd marginals(const StateVector& state);

/// Nearest multiple of gamma, halves away from zero, clamped to [0, 1].
double roundToPrecision(double p, double gamma);

/// Feedback rule: a free qubit whose rounded marginal m satisfies
/// |2m - 1| >= pDiff is frozen to 1 (m > 1/2) or 0 (m < 1/2); otherwise its
/// angle becomes arcsin(sqrt(m)) so the re-prepared ansatz reproduces m.
/// Frozen qubits are untouched.
AnsatzState updateAnsatz(const AnsatzState& ansatz,
                         const Eigen::VectorXd& roundedMarginals,
                         const VqpmConfig& config);

/// The variational loop: starting from the uniform ansatz, each iteration
/// prepares the product state, applies one power step, measures and rounds
/// the marginals, and updates the ansatz. Runs until the prepared state is
/// fully frozen, the iteration cap is hit, or (when a reference solution
/// is supplied) the reference state's probability reaches
/// config.successThreshold. A fully frozen ansatz is evaluated for one
/// closing iteration so the trace records the final state's outcome.
VqpmResult run(const ScaledProblem& scaled, const VqpmConfig& config,
               const std::optional<Bitstring>& reference = std::nullopt);

struct PowerIterationOutcome {
  Eigen::Index foundIndex;
  int iterations;
  Termination termination;
  std::vector<IterationRecord> trace;
};

/// Classical power iteration on (I+U) from the uniform state, carrying the
/// full state between iterations, no rounding, no freezing. Stops when the
/// maximum basis-state probability reaches the success threshold or at the
/// iteration cap; the found index is the argmax (ties: smallest index).
PowerIterationOutcome powerIteration(const DiagonalOracle& oracle,
                                     const VqpmConfig& config);

/// powerIteration on the problem's oracle, with the readout mapped back to
/// a bitstring and its unscaled objective.
VqpmResult runExactPower(const ScaledProblem& scaled,
                         const VqpmConfig& config);

}  // namespace vqpm
