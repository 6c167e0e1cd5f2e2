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

#include "vqpm/spectrum.hpp"

#include <cmath>
#include <complex>
#include <limits>

namespace vqpm {

DiagonalOracle::DiagonalOracle(Eigen::VectorXd phases)
    : qubits_(qubitCountForDimension(phases.size())),
      phases_(std::move(phases)) {
  if (!phases_.allFinite()) {
    throw std::invalid_argument("DiagonalOracle: phases must be finite");
  }
}

GateList::GateList(Eigen::Index qubitCount, std::vector<Gate> gates)
    : qubits_(qubitCount), gates_(std::move(gates)) {
  if (qubits_ < 1) {
    throw std::invalid_argument("GateList: need at least one qubit");
  }
  for (const auto& gate : gates_) {
    if (const auto* phase = std::get_if<PhaseGate>(&gate)) {
      if (phase->target < 0 || phase->target >= qubits_) {
        throw std::invalid_argument("GateList: gate target out of range");
      }
    } else if (const auto* ctrl = std::get_if<ControlledPhaseGate>(&gate)) {
      if (ctrl->target < 0 || ctrl->target >= qubits_ || ctrl->control < 0 ||
          ctrl->control >= qubits_ || ctrl->control == ctrl->target) {
        throw std::invalid_argument(
            "GateList: controlled gate wires out of range");
      }
    }
  }
}

double eigenphase(const ScaledProblem& scaled, const Bitstring& x) {
  return objective(scaled.base(), x) + scaled.phaseShift();
}

DiagonalOracle buildOracle(const ScaledProblem& scaled) {
  // objectiveTable enforces the n <= kMaxQubits capacity guard.
  Eigen::VectorXd phases = objectiveTable(scaled.base());
  phases.array() += scaled.phaseShift();
  return DiagonalOracle(std::move(phases));
}

double eigengap(const DiagonalOracle& oracle) {
  double smallest = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < oracle.dimension(); ++i) {
    const double phi = oracle.phase(i);
    if (phi < smallest) {
      second = smallest;
      smallest = phi;
    } else if (phi < second) {
      second = phi;
    }
  }
  return second - smallest;
}

GateList buildGateList(const ScaledProblem& scaled) {
  const auto& base = scaled.base();
  const Eigen::Index n = base.size();
  std::vector<Gate> gates;
  gates.reserve(static_cast<std::size_t>(n * (n + 1) / 2 + 1));
  for (Eigen::Index i = 0; i < n; ++i) {
    gates.push_back(PhaseGate{i, base.linear()(i)});
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double angle = base.quadratic(i, j);
      if (angle != 0.0) {
        gates.push_back(ControlledPhaseGate{i, j, angle});
      }
    }
  }
  gates.push_back(GlobalPhaseGate{scaled.phaseShift()});
  return GateList(n, std::move(gates));
}

StateVector applyGateList(const GateList& gates, const StateVector& state) {
  const Eigen::Index n = gates.qubitCount();
  if (state.size() != (Eigen::Index{1} << n)) {
    throw DimensionError("applyGateList: state dimension does not match");
  }
  StateVector result = state;
  const auto maskOf = [n](Eigen::Index qubit) {
    return Eigen::Index{1} << (n - 1 - qubit);
  };
  for (const auto& gate : gates.gates()) {
    if (const auto* phase = std::get_if<PhaseGate>(&gate)) {
      const Complex factor = std::polar(1.0, phase->angle);
      const Eigen::Index mask = maskOf(phase->target);
      for (Eigen::Index idx = 0; idx < result.size(); ++idx) {
        if (idx & mask) result(idx) *= factor;
      }
    } else if (const auto* ctrl = std::get_if<ControlledPhaseGate>(&gate)) {
      const Complex factor = std::polar(1.0, ctrl->angle);
      const Eigen::Index mask = maskOf(ctrl->control) | maskOf(ctrl->target);
      for (Eigen::Index idx = 0; idx < result.size(); ++idx) {
        if ((idx & mask) == mask) result(idx) *= factor;
      }
    } else {
      const auto& global = std::get<GlobalPhaseGate>(gate);
      result *= std::polar(1.0, global.angle);
    }
  }
  return result;
}

}  // namespace vqpm
