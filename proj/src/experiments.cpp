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

#include "vqpm/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

#include "vqpm/spectrum.hpp"

namespace vqpm {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::string formatSig6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

}  // namespace

void SweepConfig::validate() const {
  if (nMin < 1 || nMin > nMax) {
    throw std::invalid_argument("SweepConfig: need 1 <= nMin <= nMax");
  }
  if (nMax > kMaxQubits) {
    throw CapacityError("SweepConfig: nMax exceeds the state-vector guard");
  }
  if (instancesPerN < 1) {
    throw std::invalid_argument("SweepConfig: instancesPerN must be >= 1");
  }
  vqpm.validate();
}

std::uint64_t instanceSeed(std::uint64_t baseSeed, Eigen::Index n,
                           int index) {
  return mix64(mix64(baseSeed ^ static_cast<std::uint64_t>(n)) ^
               static_cast<std::uint64_t>(index));
}

int hammingDistance(const Bitstring& a, const Bitstring& b) {
  if (a.size() != b.size()) {
    throw DimensionError("hammingDistance: lengths differ");
  }
  int distance = 0;
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    distance += a.bit(j) != b.bit(j);
  }
  return distance;
}

double successProbability(const StateVector& state, const Bitstring& x) {
  const Eigen::Index n = qubitCountForDimension(state.size());
  if (x.size() != n) {
    throw DimensionError("successProbability: bitstring length mismatch");
  }
  return std::norm(state(static_cast<Eigen::Index>(x.index())));
}

InstanceRecord runInstance(const QuboInstance& problem, std::uint64_t seed,
                           const VqpmConfig& config) {
  const ScaledProblem scaled = scaleProblem(problem);
  const auto [optimum, optimumValue] = bruteForceSolve(problem);
  const double gap = eigengap(buildOracle(scaled));

  const VqpmResult result = run(scaled, config, optimum);

  InstanceRecord record;
  record.n = problem.size();
  record.seed = seed;
  record.iterations = result.iterations;
  record.exact = result.found == optimum;
  record.scaledAbsError = std::abs(objective(scaled.base(), result.found) -
                                   objective(scaled.base(), optimum));
  record.rawAbsError = std::abs(result.objectiveValue - optimumValue);
  record.hamming = hammingDistance(result.found, optimum);
  record.eigengap = gap;
  record.finalSuccessProb =
      result.trace.back().successProbability.value_or(0.0);
  return record;
}

InstanceRecord runInstance(Eigen::Index n, std::uint64_t seed,
                           const VqpmConfig& config) {
  return runInstance(generateRandom(n, seed), seed, config);
}

std::vector<InstanceRecord> runSweep(const SweepConfig& config) {
  config.validate();

  struct Job {
    Eigen::Index n;
    int index;
  };
  std::vector<Job> jobs;
  for (Eigen::Index n = config.nMin; n <= config.nMax; ++n) {
    for (int index = 0; index < config.instancesPerN; ++index) {
      jobs.push_back({n, index});
    }
  }

  std::vector<InstanceRecord> records(jobs.size());
  unsigned threadCount = config.threads;
  if (threadCount == 0) {
    threadCount = std::max(1u, std::thread::hardware_concurrency());
  }
  threadCount = std::min<unsigned>(threadCount,
                                   static_cast<unsigned>(jobs.size()));

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failureMutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t k = cursor.fetch_add(1);
      if (k >= jobs.size()) return;
      try {
        const auto [n, index] = jobs[k];
        records[k] =
            runInstance(n, instanceSeed(config.baseSeed, n, index),
                        config.vqpm);
      } catch (...) {
        std::scoped_lock lock(failureMutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (threadCount <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threadCount);
    for (unsigned t = 0; t < threadCount; ++t) {
      pool.emplace_back(worker);
    }
    for (auto& thread : pool) {
      thread.join();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<AggregateRecord> aggregate(
    const std::vector<InstanceRecord>& records) {
  if (records.empty()) {
    throw std::invalid_argument("aggregate: no records");
  }
  std::map<Eigen::Index, std::vector<const InstanceRecord*>> groups;
  for (const auto& record : records) {
    groups[record.n].push_back(&record);
  }

  std::vector<AggregateRecord> result;
  result.reserve(groups.size());
  for (const auto& [n, group] : groups) {
    AggregateRecord agg;
    agg.n = n;
    double iterations = 0.0;
    double gaps = 0.0;
    double errors = 0.0;
    double hammings = 0.0;
    int nonexact = 0;
    agg.exactCount = 0;
    for (const auto* record : group) {
      iterations += record->iterations;
      gaps += record->eigengap;
      if (record->exact) {
        ++agg.exactCount;
      } else {
        ++nonexact;
        errors += record->scaledAbsError;
        hammings += record->hamming;
      }
    }
    const auto count = static_cast<double>(group.size());
    agg.meanIterations = iterations / count;
    agg.meanEigengap = gaps / count;
    if (nonexact > 0) {
      agg.meanAbsErrorNonexact = errors / nonexact;
      agg.meanHammingNonexact = hammings / nonexact;
    }
    result.push_back(agg);
  }
  return result;
}

std::string toCsv(const std::vector<InstanceRecord>& records) {
  std::string csv =
      "n,seed,iterations,exact,scaled_abs_error,raw_abs_error,hamming,"
      "eigengap,final_success_prob\n";
  for (const auto& r : records) {
    csv += std::to_string(r.n);
    csv += ',';
    csv += std::to_string(r.seed);
    csv += ',';
    csv += std::to_string(r.iterations);
    csv += ',';
    csv += r.exact ? '1' : '0';
    csv += ',';
    csv += formatSig6(r.scaledAbsError);
    csv += ',';
    csv += formatSig6(r.rawAbsError);
    csv += ',';
    csv += std::to_string(r.hamming);
    csv += ',';
    csv += formatSig6(r.eigengap);
    csv += ',';
    csv += formatSig6(r.finalSuccessProb);
    csv += '\n';
  }
  return csv;
}

std::string toCsv(const std::vector<AggregateRecord>& records) {
  std::string csv =
      "n,mean_iterations,mean_eigengap,exact_count,mean_abs_error_nonexact,"
      "mean_hamming_nonexact\n";
  for (const auto& r : records) {
    csv += std::to_string(r.n);
    csv += ',';
    csv += formatSig6(r.meanIterations);
    csv += ',';
    csv += formatSig6(r.meanEigengap);
    csv += ',';
    csv += std::to_string(r.exactCount);
    csv += ',';
    if (r.meanAbsErrorNonexact) csv += formatSig6(*r.meanAbsErrorNonexact);
    csv += ',';
    if (r.meanHammingNonexact) csv += formatSig6(*r.meanHammingNonexact);
    csv += '\n';
  }
  return csv;
}

std::string traceCsv(const std::vector<IterationRecord>& trace) {
  std::string csv = "iteration,P0,success_prob,frozen_count\n";
  for (const auto& record : trace) {
    csv += std::to_string(record.iteration);
    csv += ',';
    csv += formatSig6(record.p0);
    csv += ',';
    if (record.successProbability) {
      csv += formatSig6(*record.successProbability);
    }
    csv += ',';
    const auto frozen = std::count(record.frozenMask.begin(),
                                   record.frozenMask.end(), true);
    csv += std::to_string(frozen);
    csv += '\n';
  }
  return csv;
}

void writeFile(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() +
                             "' for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed for '" + path.string() + "'");
  }
}

void emitCsv(const std::vector<InstanceRecord>& records,
             const std::filesystem::path& path) {
  writeFile(path, toCsv(records));
}

void emitCsv(const std::vector<AggregateRecord>& records,
             const std::filesystem::path& path) {
  writeFile(path, toCsv(records));
}

}  // namespace vqpm
