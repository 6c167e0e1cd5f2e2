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

#include <variant>
#include <vector>

#include "vqpm/qubo.hpp"
#include "vqpm/types.hpp"

namespace vqpm {

/// The diagonal unitary U = diag(e^{i phi_0}, ..., e^{i phi_{2^n - 1}}),
/// stored as the real phase of each diagonal entry. When built from a
/// ScaledProblem every phase lies in [0, pi/2] and the smallest phase
/// marks the optimum assignment.
class DiagonalOracle {
 public:
  explicit DiagonalOracle(Eigen::VectorXd phases);

  Eigen::Index qubitCount() const { return qubits_; }
  Eigen::Index dimension() const { return phases_.size(); }
  const Eigen::VectorXd& phases() const { return phases_; }
  double phase(Eigen::Index basisIndex) const { return phases_(basisIndex); }

 private:
  Eigen::Index qubits_;
  Eigen::VectorXd phases_;
};

/// diag(1, e^{i angle}) on one qubit.
struct PhaseGate {
  Eigen::Index target;
  double angle;
};

/// diag(1, e^{i angle}) on the target, applied only when the control is 1.
struct ControlledPhaseGate {
  Eigen::Index control;
  Eigen::Index target;
  double angle;
};

/// Multiplies the whole state by e^{i angle}.
struct GlobalPhaseGate {
  double angle;
};

using Gate = std::variant<PhaseGate, ControlledPhaseGate, GlobalPhaseGate>;

/// An ordered sequence of diagonal gates on a fixed qubit count.
class GateList {
 public:
  GateList(Eigen::Index qubitCount, std::vector<Gate> gates);

  Eigen::Index qubitCount() const { return qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

 private:
  Eigen::Index qubits_;
  std::vector<Gate> gates_;
};

/// Shifted eigenphase of the basis state x: objective(scaled, x) + pi/4.
double eigenphase(const ScaledProblem& scaled, const Bitstring& x);

/// Tabulates all 2^n shifted eigenphases. Guarded to n <= kMaxQubits.
DiagonalOracle buildOracle(const ScaledProblem& scaled);

/// Difference between the two smallest phases (not the two smallest
/// distinct phases; a degenerate ground state yields 0).
double eigengap(const DiagonalOracle& oracle);

/// Circuit realization of the oracle: one phase gate with angle c_i per
/// qubit, one controlled phase gate per nonzero q_ij (control i, target j),
/// and the global phase pi/4.
GateList buildGateList(const ScaledProblem& scaled);

/// Applies the gates in order. Equals elementwise multiplication of the
/// state by the oracle's e^{i phi_j}.
StateVector applyGateList(const GateList& gates, const StateVector& state);

}  // namespace vqpm
