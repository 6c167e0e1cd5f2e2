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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "vqpm/types.hpp"

namespace vqpm {

/// A quadratic unconstrained binary minimization problem
///
///   f(x) = sum_i c_i x_i + sum_{i<j} q_ij x_i x_j,   x_i in {0, 1}.
///
/// The linear coefficients c live in a vector of length n; the quadratic
/// coefficients q live in the strict upper triangle of an n-by-n matrix
/// (diagonal and lower triangle must be zero). All coefficients are finite.
class QuboInstance {
 public:
  QuboInstance(Eigen::VectorXd linear, Eigen::MatrixXd quadratic);

  Eigen::Index size() const { return linear_.size(); }
  const Eigen::VectorXd& linear() const { return linear_; }
  const Eigen::MatrixXd& quadratic() const { return quadratic_; }
  double quadratic(Eigen::Index i, Eigen::Index j) const {
    return quadratic_(i, j);
  }

  /// Sum of absolute values of all coefficients.
  double coefficientNorm() const;

  bool operator==(const QuboInstance& other) const;

 private:
  Eigen::VectorXd linear_;
  Eigen::MatrixXd quadratic_;
};

/// A problem whose coefficients have been rescaled so that every objective
/// value lies in [-pi/4, pi/4], together with the global phase shift pi/4
/// that moves the spectrum into [0, pi/2].
class ScaledProblem {
 public:
  const QuboInstance& base() const { return base_; }
  double scaleFactor() const { return scaleFactor_; }
  double phaseShift() const { return phaseShift_; }

 private:
  ScaledProblem(QuboInstance base, double scaleFactor, double phaseShift)
      : base_(std::move(base)),
        scaleFactor_(scaleFactor),
        phaseShift_(phaseShift) {}

  friend ScaledProblem scaleProblem(const QuboInstance& problem);

  QuboInstance base_;
  double scaleFactor_;
  double phaseShift_;
};

/// Objective value of the assignment x.
double objective(const QuboInstance& problem, const Bitstring& x);

/// Objective value of the basis state with the given index (bit 0 of the
/// bitstring is the most significant bit of the index). Same summation
/// order as objective(), so results are bit-identical.
double objectiveAtIndex(const QuboInstance& problem, std::uint64_t index);

/// All 2^n objective values, indexed by basis index.
Eigen::VectorXd objectiveTable(const QuboInstance& problem);

/// Objective of x on the original, unscaled coefficients.
double rawObjective(const ScaledProblem& scaled, const Bitstring& x);

/// Multiplies every coefficient by (pi/4) / sum|coefficients| and records
/// the pi/4 phase shift. Throws DegenerateProblemError if all coefficients
/// are zero.
ScaledProblem scaleProblem(const QuboInstance& problem);

/// Deterministic random instance: all c_i and the full upper triangle of
/// q_ij drawn i.i.d. uniform on [-1, 1] from a SplitMix64 stream seeded
/// with `seed`. Draw order: c_0..c_{n-1}, then q_01, q_02, ..., q_{n-2,n-1}.
QuboInstance generateRandom(Eigen::Index n, std::uint64_t seed);

/// Exhaustive minimization; ties broken by the smallest basis index.
/// Guarded to n <= kMaxQubits.
std::pair<Bitstring, double> bruteForceSolve(const QuboInstance& problem);

/// Reads a problem from its JSON document form (see serializeProblem).
/// Rejects unknown fields, duplicate quadratic keys, keys with i >= j and
/// indices out of range; errors name the offending element.
QuboInstance parseProblem(std::string_view text);

/// JSON document with fields `n`, `c` (array of n numbers) and `q` (array
/// of {i, j, value} records, one per nonzero coefficient, i < j ascending).
/// Coefficients are printed with shortest round-trip precision, so
/// parseProblem(serializeProblem(p)) == p exactly.
std::string serializeProblem(const QuboInstance& problem);

}  // namespace vqpm
