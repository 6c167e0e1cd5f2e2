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

#include <iosfwd>
#include <string>
#include <vector>

#include "vqpm/types.hpp"

namespace vqpm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitDegenerate = 4;
inline constexpr int kExitCapacity = 5;

/// Qubit guard for the full spectrum listing.
inline constexpr Eigen::Index kListingMaxQubits = 16;

/// Entry point behind the `vqpm` binary: args exclude the program name.
/// Results go to `out`, diagnostics to `err`; returns the exit code.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace vqpm
