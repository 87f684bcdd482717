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

#include "dpk/u256.hpp"

namespace dpk {

enum class Decoding { Strict, Lenient };

/// Element of GF(2^255 - 19). The value is always held in canonical form,
/// i.e. reduced into [0, p).
class FieldElement {
 public:
  constexpr FieldElement() = default;

  static FieldElement from_u64(std::uint64_t v);
  /// Strict decoding rejects integers >= p with NonCanonicalEncoding;
  /// lenient decoding reduces them.
  static FieldElement from_bytes(std::span<const std::uint8_t, 32> in,
                                 Decoding mode = Decoding::Strict);

  static FieldElement zero() { return {}; }
  static FieldElement one() { return from_u64(1); }

  /// The curve coefficient d = -121665/121666.
  static const FieldElement& edwards_d();
  /// The principal square root of -1, 2^((p-1)/4).
  static const FieldElement& sqrt_m1();

  Bytes32 to_bytes() const { return u256::to_le_bytes(limbs_); }
  const U256& limbs() const { return limbs_; }

  bool is_zero() const { return u256::is_zero(limbs_); }
  bool is_odd() const { return limbs_[0] & 1; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& rhs) const;

  FieldElement square() const { return *this * *this; }
  FieldElement pow(const U256& exponent) const;
  /// Fermat inversion a^(p-2). Throws ZeroInverse for 0.
  FieldElement invert() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  explicit constexpr FieldElement(const U256& limbs) : limbs_(limbs) {}

  U256 limbs_{};
};

/// The field modulus p = 2^255 - 19.
inline constexpr U256 kFieldModulus{0xffffffffffffffedULL, 0xffffffffffffffffULL,
                                    0xffffffffffffffffULL, 0x7fffffffffffffffULL};

struct SqrtRatio {
  bool was_square = false;
  FieldElement root;
};

/// Square root of u/v for p = 5 (mod 8). On success root^2 * v = u and root
/// is the even (principal) representative. Throws ZeroDenominator for v = 0.
SqrtRatio sqrt_ratio(const FieldElement& u, const FieldElement& v);

}  // namespace dpk
