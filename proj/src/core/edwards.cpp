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

#include "dpk/edwards.hpp"

#include <algorithm>

#include "dpk/error.hpp"

namespace dpk {
namespace {

const FieldElement& two_d() {
  static const FieldElement v = FieldElement::edwards_d() + FieldElement::edwards_d();
  return v;
}

CompressedPoint encoding_from_hex(std::string_view hex) {
  CompressedPoint cp;
  auto nibble = [](char c) -> std::uint8_t {
    return static_cast<std::uint8_t>(c <= '9' ? c - '0' : c - 'a' + 10);
  };
  for (std::size_t i = 0; i < 32; ++i) {
    cp.bytes[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return cp;
}

}  // namespace

EdwardsPoint::EdwardsPoint()
    : x_(FieldElement::zero()),
      y_(FieldElement::one()),
      z_(FieldElement::one()),
      t_(FieldElement::zero()) {}

EdwardsPoint EdwardsPoint::from_affine(const FieldElement& x, const FieldElement& y) {
  EdwardsPoint p(x, y, FieldElement::one(), x * y);
  if (!p.is_on_curve()) throw Error(ErrorCode::NotOnCurve, "affine point is not on the curve");
  return p;
}

const EdwardsPoint& EdwardsPoint::base_point() {
  static const EdwardsPoint g = [] {
    const U256 x{0xc9562d608f25d51aULL, 0x692cc7609525a7b2ULL, 0xc0a4e231fdd6dc5cULL,
                 0x216936d3cd6e53feULL};
    const U256 y{0x6666666666666658ULL, 0x6666666666666666ULL, 0x6666666666666666ULL,
                 0x6666666666666666ULL};
    return from_affine(FieldElement::from_bytes(u256::to_le_bytes(x)),
                       FieldElement::from_bytes(u256::to_le_bytes(y)));
  }();
  return g;
}

EdwardsPoint EdwardsPoint::decompress(const CompressedPoint& cp, Decoding mode) {
  Bytes32 y_bytes = cp.bytes;
  const bool sign = (y_bytes[31] >> 7) != 0;
  y_bytes[31] &= 0x7f;
  const FieldElement y = FieldElement::from_bytes(y_bytes, mode);

  // x^2 = (y^2 - 1) / (d y^2 + 1); the denominator never vanishes since -1/d
  // is not a square.
  const FieldElement y2 = y.square();
  const SqrtRatio r = sqrt_ratio(y2 - FieldElement::one(),
                                 FieldElement::edwards_d() * y2 + FieldElement::one());
  if (!r.was_square) throw Error(ErrorCode::NotOnCurve, "encoded y has no matching x");

  FieldElement x = r.root;
  if (x.is_zero() && sign && mode == Decoding::Strict) {
    throw Error(ErrorCode::NonCanonicalEncoding, "x = 0 encoded with sign bit set");
  }
  if (x.is_odd() != sign) x = -x;
  return EdwardsPoint(x, y, FieldElement::one(), x * y);
}

CompressedPoint EdwardsPoint::compress() const {
  const FieldElement zinv = z_.invert();
  const FieldElement x = x_ * zinv;
  const FieldElement y = y_ * zinv;
  CompressedPoint cp{y.to_bytes()};
  cp.bytes[31] |= static_cast<std::uint8_t>(x.is_odd() ? 0x80 : 0);
  return cp;
}

FieldElement EdwardsPoint::affine_x() const { return x_ * z_.invert(); }
FieldElement EdwardsPoint::affine_y() const { return y_ * z_.invert(); }

bool EdwardsPoint::is_on_curve() const {
  if (z_.is_zero()) return false;
  // (-X^2 + Y^2) Z^2 = Z^4 + d X^2 Y^2 and XY = ZT
  const FieldElement xx = x_.square();
  const FieldElement yy = y_.square();
  const FieldElement zz = z_.square();
  const FieldElement lhs = (yy - xx) * zz;
  const FieldElement rhs = zz.square() + FieldElement::edwards_d() * xx * yy;
  return lhs == rhs && x_ * y_ == z_ * t_;
}

bool EdwardsPoint::is_neutral() const { return x_.is_zero() && y_ == z_; }

EdwardsPoint EdwardsPoint::operator+(const EdwardsPoint& rhs) const {
  // Unified addition for a = -1 (Hisil-Wong-Carter-Dawson); complete on
  // Ed25519 because d is not a square.
  const FieldElement a = (y_ - x_) * (rhs.y_ - rhs.x_);
  const FieldElement b = (y_ + x_) * (rhs.y_ + rhs.x_);
  const FieldElement c = t_ * two_d() * rhs.t_;
  const FieldElement d = (z_ + z_) * rhs.z_;
  const FieldElement e = b - a;
  const FieldElement f = d - c;
  const FieldElement g = d + c;
  const FieldElement h = b + a;
  return EdwardsPoint(e * f, g * h, f * g, e * h);
}

EdwardsPoint EdwardsPoint::operator-() const { return EdwardsPoint(-x_, y_, z_, -t_); }

EdwardsPoint EdwardsPoint::doubled() const {
  const FieldElement a = x_.square();
  const FieldElement b = y_.square();
  const FieldElement c = z_.square() + z_.square();
  const FieldElement h = a + b;
  const FieldElement e = h - (x_ + y_).square();
  const FieldElement g = a - b;
  const FieldElement f = c + g;
  return EdwardsPoint(e * f, g * h, f * g, e * h);
}

EdwardsPoint EdwardsPoint::mul_by_cofactor() const { return doubled().doubled().doubled(); }

bool EdwardsPoint::operator==(const EdwardsPoint& rhs) const {
  return x_ * rhs.z_ == rhs.x_ * z_ && y_ * rhs.z_ == rhs.y_ * z_;
}

EdwardsPoint scalar_mul(const U256& n, const EdwardsPoint& p) {
  EdwardsPoint acc;
  for (unsigned i = 256; i-- > 0;) {
    acc = acc.doubled();
    if (u256::bit(n, i)) acc = acc + p;
  }
  return acc;
}

const std::array<CompressedPoint, kCofactor>& small_order_encodings() {
  static const std::array<CompressedPoint, kCofactor> table = {
      encoding_from_hex("0000000000000000000000000000000000000000000000000000000000000000"),
      encoding_from_hex("0000000000000000000000000000000000000000000000000000000000000080"),
      encoding_from_hex("0100000000000000000000000000000000000000000000000000000000000000"),
      encoding_from_hex("26e8958fc2b227b045c3f489f2ef98f0d5dfac05d3c63339b13802886d53fc05"),
      encoding_from_hex("26e8958fc2b227b045c3f489f2ef98f0d5dfac05d3c63339b13802886d53fc85"),
      encoding_from_hex("c7176a703d4dd84fba3c0b760d10670f2a2053fa2c39ccc64ec7fd7792ac037a"),
      encoding_from_hex("c7176a703d4dd84fba3c0b760d10670f2a2053fa2c39ccc64ec7fd7792ac03fa"),
      encoding_from_hex("ecffffffffffffffffffffffffffffffffffffffffffffffffffffffffffff7f"),
  };
  return table;
}

const std::array<EdwardsPoint, kCofactor>& small_order_points() {
  static const std::array<EdwardsPoint, kCofactor> points = [] {
    std::array<EdwardsPoint, kCofactor> out;
    const auto& enc = small_order_encodings();
    std::transform(enc.begin(), enc.end(), out.begin(),
                   [](const CompressedPoint& cp) { return EdwardsPoint::decompress(cp); });
    return out;
  }();
  return points;
}

std::string_view to_string(OrderClass c) noexcept {
  switch (c) {
    case OrderClass::Identity: return "Identity";
    case OrderClass::SmallOrder: return "SmallOrder";
    case OrderClass::MixedOrder: return "MixedOrder";
    case OrderClass::PrimeOrder: return "PrimeOrder";
  }
  return "Unknown";
}

OrderClass classify_order(const EdwardsPoint& p) {
  if (p.is_neutral()) return OrderClass::Identity;
  if (p.mul_by_cofactor().is_neutral()) return OrderClass::SmallOrder;
  if (scalar_mul(kGroupOrder, p).is_neutral()) return OrderClass::PrimeOrder;
  return OrderClass::MixedOrder;
}

}  // namespace dpk
