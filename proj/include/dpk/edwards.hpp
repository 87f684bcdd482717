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

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>

#include "dpk/field25519.hpp"
#include "dpk/scalar25519.hpp"

namespace dpk {

inline constexpr unsigned kCofactor = 8;
inline constexpr unsigned kKeyBits = 256;

/// Canonical 32-byte point encoding: y little-endian in bits 0..254, sign of
/// x in bit 255.
struct CompressedPoint {
  Bytes32 bytes{};

  static CompressedPoint from_span(std::span<const std::uint8_t, 32> in) {
    CompressedPoint cp;
    std::copy(in.begin(), in.end(), cp.bytes.begin());
    return cp;
  }

  friend auto operator<=>(const CompressedPoint&, const CompressedPoint&) = default;
};

/// Point on -x^2 + y^2 = 1 + d x^2 y^2 in extended coordinates (X:Y:Z:T),
/// x = X/Z, y = Y/Z, xy = T/Z.
class EdwardsPoint {
 public:
  /// The neutral element (0, 1).
  EdwardsPoint();

  static EdwardsPoint from_affine(const FieldElement& x, const FieldElement& y);
  static const EdwardsPoint& base_point();

  /// Strict mode rejects y >= p and the (x = 0, sign = 1) encodings with
  /// NonCanonicalEncoding. Throws NotOnCurve when y has no matching x.
  static EdwardsPoint decompress(const CompressedPoint& cp,
                                 Decoding mode = Decoding::Strict);
  CompressedPoint compress() const;

  FieldElement affine_x() const;
  FieldElement affine_y() const;

  bool is_on_curve() const;
  bool is_neutral() const;

  EdwardsPoint operator+(const EdwardsPoint& rhs) const;
  EdwardsPoint operator-(const EdwardsPoint& rhs) const { return *this + (-rhs); }
  EdwardsPoint operator-() const;
  EdwardsPoint doubled() const;
  /// 8 * P by three doublings; never folded into a scalar.
  EdwardsPoint mul_by_cofactor() const;

  bool operator==(const EdwardsPoint& rhs) const;

 private:
  EdwardsPoint(const FieldElement& x, const FieldElement& y, const FieldElement& z,
               const FieldElement& t)
      : x_(x), y_(y), z_(z), t_(t) {}

  FieldElement x_, y_, z_, t_;
};

/// Left-to-right double-and-add, variable time.
EdwardsPoint scalar_mul(const U256& n, const EdwardsPoint& p);
inline EdwardsPoint scalar_mul(const Scalar& n, const EdwardsPoint& p) {
  return scalar_mul(n.limbs(), p);
}
inline EdwardsPoint scalar_mul(std::uint64_t n, const EdwardsPoint& p) {
  return scalar_mul(u256::from_u64(n), p);
}
inline EdwardsPoint mul_base(const Scalar& n) {
  return scalar_mul(n, EdwardsPoint::base_point());
}

/// The eight points of order dividing 8, sorted by their compressed bytes.
const std::array<EdwardsPoint, kCofactor>& small_order_points();
const std::array<CompressedPoint, kCofactor>& small_order_encodings();

enum class OrderClass { Identity, SmallOrder, MixedOrder, PrimeOrder };

std::string_view to_string(OrderClass c) noexcept;

/// Splits P = g*G + t*T by testing 8*P and l*P against the neutral element.
/// Relies on gcd(8, l) = 1.
OrderClass classify_order(const EdwardsPoint& p);

}  // namespace dpk
