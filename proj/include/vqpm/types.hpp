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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vqpm {

using Complex = std::complex<double>;

/// Amplitudes over the computational basis, 2^n entries, unit norm.
/// Basis index convention: bit 0 of the bitstring is the most significant
/// bit of the index, so index 0b0011 on four qubits is the state |0011>.
using StateVector = Eigen::VectorXcd;

/// Largest qubit count for which 2^n-sized tables may be built.
inline constexpr Eigen::Index kMaxQubits = 26;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateProblemError : std::domain_error {
  using std::domain_error::domain_error;
};

struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An assignment of the binary decision variables x_0 ... x_{n-1}.
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::vector<std::uint8_t> bits);

  /// Decodes a basis index, bit 0 taken as the most significant bit.
  static Bitstring fromIndex(Eigen::Index numBits, std::uint64_t index);
  /// Parses text such as "0011".
  static Bitstring fromString(std::string_view text);

  Eigen::Index size() const { return static_cast<Eigen::Index>(bits_.size()); }
  int bit(Eigen::Index pos) const;
  void setBit(Eigen::Index pos, int value);

  /// Basis index of this assignment, bit 0 most significant.
  std::uint64_t index() const;
  std::string str() const;

  bool operator==(const Bitstring&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::ostream& operator<<(std::ostream& os, const Bitstring& x);

/// Number of qubits for a state of the given dimension; throws
/// DimensionError unless the dimension is a power of two >= 2.
Eigen::Index qubitCountForDimension(Eigen::Index dimension);

}  // namespace vqpm
