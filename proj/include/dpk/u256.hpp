// Copyright 2026 The dpk Authors
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

// Fixed-width 256-bit unsigned helpers shared by the field and scalar code.
// Limbs are little-endian 64-bit words.

#include <array>
#include <compare>
#include <cstdint>
#include <span>

namespace dpk {

using U256 = std::array<std::uint64_t, 4>;
using Bytes32 = std::array<std::uint8_t, 32>;
using Bytes64 = std::array<std::uint8_t, 64>;

namespace u256 {

constexpr U256 from_le_bytes(std::span<const std::uint8_t, 32> in) {
  U256 out{};
  for (std::size_t i = 0; i < 32; ++i) {
    out[i / 8] |= std::uint64_t{in[i]} << (8 * (i % 8));
  }
  return out;
}

constexpr Bytes32 to_le_bytes(const U256& v) {
  Bytes32 out{};
  for (std::size_t i = 0; i < 32; ++i) {
    out[i] = static_cast<std::uint8_t>(v[i / 8] >> (8 * (i % 8)));
  }
  return out;
}

constexpr std::strong_ordering compare(const U256& a, const U256& b) {
  for (std::size_t i = 4; i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

constexpr bool bit(const U256& v, unsigned i) { return (v[i / 64] >> (i % 64)) & 1; }

constexpr bool is_zero(const U256& v) { return (v[0] | v[1] | v[2] | v[3]) == 0; }

/// out = a + b, returns the carry out of bit 255.
constexpr std::uint64_t add(U256& out, const U256& a, const U256& b) {
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    carry += static_cast<unsigned __int128>(a[i]) + b[i];
    out[i] = static_cast<std::uint64_t>(carry);
    carry >>= 64;
  }
  return static_cast<std::uint64_t>(carry);
}

/// out = a - b, returns the borrow (1 if a < b).
constexpr std::uint64_t sub(U256& out, const U256& a, const U256& b) {
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::uint64_t ai = a[i];
    const std::uint64_t d = ai - b[i] - borrow;
    borrow = (ai < b[i]) || (ai == b[i] && borrow) ? 1 : 0;
    out[i] = d;
  }
  return borrow;
}

/// Full 512-bit product, little-endian limbs.
constexpr std::array<std::uint64_t, 8> mul_wide(const U256& a, const U256& b) {
  std::array<std::uint64_t, 8> t{};
  for (std::size_t i = 0; i < 4; ++i) {
    unsigned __int128 carry = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      carry += static_cast<unsigned __int128>(a[i]) * b[j] + t[i + j];
      t[i + j] = static_cast<std::uint64_t>(carry);
      carry >>= 64;
    }
    t[i + 4] = static_cast<std::uint64_t>(carry);
  }
  return t;
}

constexpr U256 from_u64(std::uint64_t v) { return U256{v, 0, 0, 0}; }

}  // namespace u256
}  // namespace dpk
