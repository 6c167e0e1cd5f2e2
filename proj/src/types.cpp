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

#include "vqpm/types.hpp"

#include <ostream>

namespace vqpm {

Bitstring::Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) {
      throw std::invalid_argument("Bitstring: entries must be 0 or 1");
    }
  }
}

Bitstring Bitstring::fromIndex(Eigen::Index numBits, std::uint64_t index) {
  if (numBits < 1 || numBits > 63) {
    throw std::invalid_argument("Bitstring: bit count must be in [1, 63]");
  }
  if (index >> numBits != 0) {
    throw std::invalid_argument("Bitstring: index has more bits than fit");
  }
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(numBits));
  for (Eigen::Index pos = 0; pos < numBits; ++pos) {
    bits[static_cast<std::size_t>(pos)] =
        static_cast<std::uint8_t>((index >> (numBits - 1 - pos)) & 1u);
  }
  return Bitstring(std::move(bits));
}

Bitstring Bitstring::fromString(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("Bitstring: empty text");
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("Bitstring: invalid character '" +
                                  std::string(1, c) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return Bitstring(std::move(bits));
}

int Bitstring::bit(Eigen::Index pos) const {
  if (pos < 0 || pos >= size()) {
    throw std::out_of_range("Bitstring: bit position out of range");
  }
  return bits_[static_cast<std::size_t>(pos)];
}

void Bitstring::setBit(Eigen::Index pos, int value) {
  if (pos < 0 || pos >= size()) {
    throw std::out_of_range("Bitstring: bit position out of range");
  }
  if (value != 0 && value != 1) {
    throw std::invalid_argument("Bitstring: bit value must be 0 or 1");
  }
  bits_[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(value);
}

std::uint64_t Bitstring::index() const {
  std::uint64_t idx = 0;
  for (auto b : bits_) {
    idx = (idx << 1) | b;
  }
  return idx;
}

std::string Bitstring::str() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) {
    s.push_back(static_cast<char>('0' + b));
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Bitstring& x) {
  return os << x.str();
}

Eigen::Index qubitCountForDimension(Eigen::Index dimension) {
  if (dimension < 2 || (dimension & (dimension - 1)) != 0) {
    throw DimensionError("state dimension must be a power of two >= 2");
  }
  Eigen::Index n = 0;
  while ((Eigen::Index{1} << n) != dimension) {
    ++n;
  }
  return n;
}

}  // namespace vqpm
