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

#include "vqpm/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "vqpm/experiments.hpp"
#include "vqpm/qubo.hpp"
#include "vqpm/spectrum.hpp"
#include "vqpm/vqpm.hpp"

namespace vqpm {

namespace {

std::string fixed5(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.5f", value);
  return buffer;
}

std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() +
                             "' for reading");
  }
  std::ostringstream content;
  content << in.rdbuf();
  if (in.bad()) {
    throw std::runtime_error("read failed for '" + path.string() + "'");
  }
  return std::move(content).str();
}

struct GenOptions {
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveOptions {
  std::string problem;
  VqpmConfig config;
  std::string mode = "variational";
  std::string traceOut;
};

struct SpectrumOptions {
  std::string problem;
};

struct SweepOptions {
  std::int64_t nMin = 0;
  std::int64_t nMax = 0;
  int instances = 50;
  std::uint64_t seed = 0;
  std::string outDir;
};

unsigned threadCapFromEnv(std::ostream& err) {
  const char* raw = std::getenv("VQPM_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    err << "warning: ignoring invalid VQPM_THREADS value '" << raw << "'\n";
    return 0;
  }
  return static_cast<unsigned>(value);
}

int cmdGen(const GenOptions& options, std::ostream& out) {
  const QuboInstance problem =
      generateRandom(static_cast<Eigen::Index>(options.n), options.seed);
  writeFile(options.out, serializeProblem(problem));
  out << "wrote " << options.out << "\n";
  return kExitOk;
}

int cmdSolve(const SolveOptions& options, std::ostream& out) {
  const QuboInstance problem = parseProblem(readFile(options.problem));
  if (problem.size() > kMaxQubits) {
    throw CapacityError("solve: problem exceeds the state-vector guard");
  }
  const ScaledProblem scaled = scaleProblem(problem);
  VqpmConfig config = options.config;
  config.mode = modeFromString(options.mode);
  config.validate();

  const VqpmResult result = config.mode == Mode::Exact
                                ? runExactPower(scaled, config)
                                : run(scaled, config);
  out << result.found.str() << "  " << fixed5(result.objectiveValue) << "  "
      << fixed5(eigenphase(scaled, result.found)) << "  "
      << result.iterations << "  " << toString(result.termination) << "\n";
  if (!options.traceOut.empty()) {
    writeFile(options.traceOut, traceCsv(result.trace));
  }
  return kExitOk;
}

int cmdSpectrum(const SpectrumOptions& options, std::ostream& out) {
  const QuboInstance problem = parseProblem(readFile(options.problem));
  const Eigen::Index n = problem.size();
  if (n > kListingMaxQubits) {
    throw CapacityError("spectrum: listing is guarded to 16 qubits");
  }
  const ScaledProblem scaled = scaleProblem(problem);
  const DiagonalOracle oracle = buildOracle(scaled);
  const Eigen::VectorXd raw = objectiveTable(problem);
  const Eigen::VectorXd scaledValues = objectiveTable(scaled.base());
  for (Eigen::Index idx = 0; idx < oracle.dimension(); ++idx) {
    out << Bitstring::fromIndex(n, static_cast<std::uint64_t>(idx)).str()
        << "  " << fixed5(raw(idx)) << "  " << fixed5(scaledValues(idx))
        << "  " << fixed5(oracle.phase(idx)) << "\n";
  }
  out << "eigengap  " << fixed5(eigengap(oracle)) << "\n";
  return kExitOk;
}

int cmdSweep(const SweepOptions& options, std::ostream& out,
             std::ostream& err) {
  SweepConfig config;
  config.nMin = static_cast<Eigen::Index>(options.nMin);
  config.nMax = static_cast<Eigen::Index>(options.nMax);
  config.instancesPerN = options.instances;
  config.baseSeed = options.seed;
  config.threads = threadCapFromEnv(err);
  config.validate();

  const std::filesystem::path outDir(options.outDir);
  std::error_code ec;
  std::filesystem::create_directories(outDir, ec);
  if (ec) {
    throw std::runtime_error("cannot create directory '" + outDir.string() +
                             "': " + ec.message());
  }

  const std::vector<InstanceRecord> records = runSweep(config);
  const std::vector<AggregateRecord> aggregates = aggregate(records);
  emitCsv(records, outDir / "instances.csv");
  emitCsv(aggregates, outDir / "aggregates.csv");

  for (const auto& agg : aggregates) {
    out << "n=" << agg.n << "  mean_iterations="
        << fixed5(agg.meanIterations) << "  exact=" << agg.exactCount << "/"
        << config.instancesPerN
        << "  mean_eigengap=" << fixed5(agg.meanEigengap) << "\n";
  }
  out << "wrote " << (outDir / "instances.csv").string() << " and "
      << (outDir / "aggregates.csv").string() << "\n";
  return kExitOk;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Variational quantum power method simulator for quadratic "
               "unconstrained binary optimization"};
  app.name("vqpm");
  app.require_subcommand(1);

  GenOptions gen;
  auto* genCmd = app.add_subcommand(
      "gen", "Generate a random problem and write it to a file");
  genCmd->add_option("--n", gen.n, "Number of binary variables (>= 1)")
      ->required();
  genCmd->add_option("--seed", gen.seed, "Random seed");
  genCmd->add_option("--out", gen.out, "Output problem file")->required();

  SolveOptions solve;
  auto* solveCmd =
      app.add_subcommand("solve", "Minimize a problem with the variational "
                                  "or exact power iteration");
  solveCmd->add_option("--problem", solve.problem, "Problem file")
      ->required();
  solveCmd->add_option("--gamma", solve.config.gamma,
                       "Measurement precision (probability granularity)");
  solveCmd->add_option("--pdiff", solve.config.pDiff,
                       "Freeze threshold on |P(1) - P(0)|");
  solveCmd->add_option("--max-iters", solve.config.maxIters,
                       "Iteration cap");
  solveCmd->add_option("--mode", solve.mode, "variational | exact");
  solveCmd->add_option("--trace-out", solve.traceOut,
                       "Write the per-iteration trace CSV here");

  SpectrumOptions spectrum;
  auto* spectrumCmd = app.add_subcommand(
      "spectrum", "List the full solution space and the eigengap");
  spectrumCmd->add_option("--problem", spectrum.problem, "Problem file")
      ->required();

  SweepOptions sweep;
  auto* sweepCmd = app.add_subcommand(
      "sweep", "Run random-instance experiments over a range of n");
  sweepCmd->add_option("--n-min", sweep.nMin, "Smallest n")->required();
  sweepCmd->add_option("--n-max", sweep.nMax, "Largest n")->required();
  sweepCmd->add_option("--instances", sweep.instances, "Instances per n");
  sweepCmd->add_option("--seed", sweep.seed, "Base seed");
  sweepCmd->add_option("--out-dir", sweep.outDir, "Output directory")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (genCmd->parsed()) return cmdGen(gen, out);
    if (solveCmd->parsed()) return cmdSolve(solve, out);
    if (spectrumCmd->parsed()) return cmdSpectrum(spectrum, out);
    return cmdSweep(sweep, out, err);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const DegenerateProblemError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace vqpm
