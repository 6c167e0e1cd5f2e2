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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vqpm/qubo.hpp"
#include "vqpm/types.hpp"
#include "vqpm/vqpm.hpp"

namespace vqpm {

struct SweepConfig {
  Eigen::Index nMin = 2;
  Eigen::Index nMax = 21;
  int instancesPerN = 50;
  std::uint64_t baseSeed = 0;
  VqpmConfig vqpm;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;

  void validate() const;
};

/// Outcome of one random instance, solved variationally against the
/// brute-force optimum.
struct InstanceRecord {
  Eigen::Index n;
  std::uint64_t seed;
  /// Iterations the run used before terminating: until the optimum's
  /// probability reached the success threshold, until the ansatz froze
  /// completely, or the cap.
  int iterations;
  bool exact;
  /// |eigenphase(found) - eigenphase(optimum)|.
  double scaledAbsError;
  /// |objective(found) - objective(optimum)| on the raw coefficients.
  double rawAbsError;
  int hamming;
  double eigengap;
  double finalSuccessProb;
};

/// Per-n summary of a sweep. The non-exact means are absent when every
/// run in the group found the optimum.
struct AggregateRecord {
  Eigen::Index n;
  double meanIterations;
  double meanEigengap;
  int exactCount;
  std::optional<double> meanAbsErrorNonexact;
  std::optional<double> meanHammingNonexact;
};

/// Stable per-instance seed: two chained SplitMix64 hashes of
/// (baseSeed ^ n) and (. ^ index), so extending a sweep never reshuffles
/// earlier instances.
std::uint64_t instanceSeed(std::uint64_t baseSeed, Eigen::Index n,
                           int index);

/// Number of positions where a and b differ.
int hammingDistance(const Bitstring& a, const Bitstring& b);

/// Probability of measuring the basis state x.
double successProbability(const StateVector& state, const Bitstring& x);

/// Scales the problem, brute-force solves it, and runs the variational
/// loop with the optimum as reference. `seed` is recorded as a label.
InstanceRecord runInstance(const QuboInstance& problem, std::uint64_t seed,
                           const VqpmConfig& config);

/// generateRandom(n, instanceSeed(...)) followed by the overload above.
InstanceRecord runInstance(Eigen::Index n, std::uint64_t seed,
                           const VqpmConfig& config);

/// All instances for n in [nMin, nMax], instancesPerN each, in (n, index)
/// order. Instances run in parallel; the result is deterministic for a
/// fixed config regardless of thread count.
std::vector<InstanceRecord> runSweep(const SweepConfig& config);

/// Per-n aggregates of a non-empty record set.
std::vector<AggregateRecord> aggregate(
    const std::vector<InstanceRecord>& records);

/// CSV with header `n,seed,iterations,exact,scaled_abs_error,
/// raw_abs_error,hamming,eigengap,final_success_prob`; floats carry six
/// significant digits.
std::string toCsv(const std::vector<InstanceRecord>& records);

/// CSV with header `n,mean_iterations,mean_eigengap,exact_count,
/// mean_abs_error_nonexact,mean_hamming_nonexact`; absent means are empty
/// cells.
std::string toCsv(const std::vector<AggregateRecord>& records);

/// CSV with header `iteration,P0,success_prob,frozen_count`; the
/// success_prob cell is empty when no reference was supplied.
std::string traceCsv(const std::vector<IterationRecord>& trace);

/// Writes content to path, surfacing failures with the path in the error.
void writeFile(const std::filesystem::path& path, std::string_view content);

void emitCsv(const std::vector<InstanceRecord>& records,
             const std::filesystem::path& path);
void emitCsv(const std::vector<AggregateRecord>& records,
             const std::filesystem::path& path);

}  // namespace vqpm
