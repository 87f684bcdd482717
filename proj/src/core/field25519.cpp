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

#include "dpk/field25519.hpp"

#include "dpk/error.hpp"

namespace dpk {
namespace {

U256 reduce_once(const U256& v) {
  U256 t{};
  if (u256::sub(t, v, kFieldModulus) == 0) return t;
  return v;
}

// (p - 2), (p + 3) / 8
constexpr U256 kPMinus2{0xffffffffffffffebULL, 0xffffffffffffffffULL,
                        0xffffffffffffffffULL, 0x7fffffffffffffffULL};
constexpr U256 kPPlus3Over8{0xfffffffffffffffeULL, 0xffffffffffffffffULL,
                            0xffffffffffffffffULL, 0x0fffffffffffffffULL};

}  // namespace

FieldElement FieldElement::from_u64(std::uint64_t v) {
  return FieldElement(reduce_once(u256::from_u64(v)));
}

FieldElement FieldElement::from_bytes(std::span<const std::uint8_t, 32> in, Decoding mode) {
  U256 v = u256::from_le_bytes(in);
  if (u256::compare(v, kFieldModulus) >= 0) {
    if (mode == Decoding::Strict) {
      throw Error(ErrorCode::NonCanonicalEncoding, "field element is not reduced mod p");
    }
    // Anything below 2^256 needs at most two subtractions of p.
    v = reduce_once(reduce_once(v));
  }
  return FieldElement(v);
}

const FieldElement& FieldElement::edwards_d() {
  static const FieldElement d(U256{0x75eb4dca135978a3ULL, 0x00700a4d4141d8abULL,
                                   0x8cc740797779e898ULL, 0x52036cee2b6ffe73ULL});
  return d;
}

const FieldElement& FieldElement::sqrt_m1() {
  static const FieldElement r(U256{0xc4ee1b274a0ea0b0ULL, 0x2f431806ad2fe478ULL,
                                   0x2b4d00993dfbd7a7ULL, 0x2b8324804fc1df0bULL});
  return r;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  // Both operands are < 2^255, so the sum fits in 256 bits.
  U256 sum{};
  u256::add(sum, limbs_, rhs.limbs_);
  return FieldElement(reduce_once(sum));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  U256 diff{};
  if (u256::sub(diff, limbs_, rhs.limbs_) != 0) {
    u256::add(diff, diff, kFieldModulus);
  }
  return FieldElement(diff);
}

FieldElement FieldElement::operator-() const { return FieldElement() - *this; }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  const auto t = u256::mul_wide(limbs_, rhs.limbs_);

  // 2^256 = 38 (mod p): fold the high half into the low half.
  std::array<std::uint64_t, 5> v{};
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    carry += static_cast<unsigned __int128>(t[i + 4]) * 38 + t[i];
    v[i] = static_cast<std::uint64_t>(carry);
    carry >>= 64;
  }
  v[4] = static_cast<std::uint64_t>(carry);

  // 2^255 = 19 (mod p): fold everything above bit 254.
  const std::uint64_t top = (v[4] << 1) | (v[3] >> 63);
  v[3] &= 0x7fffffffffffffffULL;
  carry = static_cast<unsigned __int128>(top) * 19;
  U256 out{};
  for (std::size_t i = 0; i < 4; ++i) {
    carry += v[i];
    out[i] = static_cast<std::uint64_t>(carry);
    carry >>= 64;
  }
  // out < 2^255 + 19 * 2^7, one subtraction suffices.
  return FieldElement(reduce_once(out));
}

FieldElement FieldElement::pow(const U256& exponent) const {
  FieldElement acc = one();
  for (unsigned i = 256; i-- > 0;) {
    acc = acc.square();
    if (u256::bit(exponent, i)) acc = acc * *this;
  }
  return acc;
}

FieldElement FieldElement::invert() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInverse, "inversion of zero field element");
  return pow(kPMinus2);
}

SqrtRatio sqrt_ratio(const FieldElement& u, const FieldElement& v) {
  if (v.is_zero()) throw Error(ErrorCode::ZeroDenominator, "sqrt_ratio with v = 0");
  const FieldElement w = u * v.invert();
  FieldElement r = w.pow(kPPlus3Over8);
  const FieldElement check = r.square();
  if (check == w) {
    // r is already a root
  } else if (check == -w) {
    r = r * FieldElement::sqrt_m1();
  } else {
    return {false, FieldElement()};
  }
  if (r.is_odd()) r = -r;
  return {true, r};
}

}  // namespace dpk
