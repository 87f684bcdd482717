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

#include <cstdint>
#include <span>

#include "dpk/field25519.hpp"
#include "dpk/u256.hpp"

namespace dpk {

/// The prime order of the base point,
/// l = 2^252 + 27742317777372353535851937790883648493.
inline constexpr U256 kGroupOrder{0x5812631a5cf5d3edULL, 0x14def9dea2f79cd6ULL,
                                  0x0000000000000000ULL, 0x1000000000000000ULL};

/// Integer modulo l, always canonical in [0, l).
class Scalar {
 public:
  constexpr Scalar() = default;

  static Scalar from_u64(std::uint64_t v);
  /// Little-endian 512-bit integer reduced mod l (hash outputs).
  static Scalar reduce_wide(std::span<const std::uint8_t, 64> in);
  /// Any 256-bit integer reduced mod l.
  static Scalar reduce(const U256& v);
  /// Strict decoding rejects values >= l with NonCanonicalEncoding.
  static Scalar from_bytes(std::span<const std::uint8_t, 32> in,
                           Decoding mode = Decoding::Strict);

  Bytes32 to_bytes() const { return u256::to_le_bytes(limbs_); }
  const U256& limbs() const { return limbs_; }
  bool is_zero() const { return u256::is_zero(limbs_); }

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator-() const { return Scalar() - *this; }
  Scalar operator*(const Scalar& rhs) const;

  /// a^(l-2). Throws ZeroInverse for 0.
  Scalar invert() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  explicit constexpr Scalar(const U256& limbs) : limbs_(limbs) {}

  U256 limbs_{};
};

}  // namespace dpk
