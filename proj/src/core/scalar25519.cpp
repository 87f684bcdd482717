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

#include "dpk/scalar25519.hpp"

#include "dpk/error.hpp"

namespace dpk {
namespace {

constexpr U256 kOrderMinus2{0x5812631a5cf5d3ebULL, 0x14def9dea2f79cd6ULL,
                            0x0000000000000000ULL, 0x1000000000000000ULL};

// Shift-and-subtract long division over the limbs, most significant bit
// first. The running remainder stays below 2l < 2^254 so it fits in U256.
template <std::size_t N>
U256 mod_order(const std::array<std::uint64_t, N>& wide) {
  U256 rem{};
  for (std::size_t i = N * 64; i-- > 0;) {
    rem[3] = (rem[3] << 1) | (rem[2] >> 63);
    rem[2] = (rem[2] << 1) | (rem[1] >> 63);
    rem[1] = (rem[1] << 1) | (rem[0] >> 63);
    rem[0] = (rem[0] << 1) | ((wide[i / 64] >> (i % 64)) & 1);
    U256 t{};
    if (u256::sub(t, rem, kGroupOrder) == 0) rem = t;
  }
  return rem;
}

}  // namespace

Scalar Scalar::from_u64(std::uint64_t v) { return reduce(u256::from_u64(v)); }

Scalar Scalar::reduce(const U256& v) { return Scalar(mod_order(v)); }

Scalar Scalar::reduce_wide(std::span<const std::uint8_t, 64> in) {
  std::array<std::uint64_t, 8> wide{};
  for (std::size_t i = 0; i < 64; ++i) {
    wide[i / 8] |= std::uint64_t{in[i]} << (8 * (i % 8));
  }
  return Scalar(mod_order(wide));
}

Scalar Scalar::from_bytes(std::span<const std::uint8_t, 32> in, Decoding mode) {
  const U256 v = u256::from_le_bytes(in);
  if (u256::compare(v, kGroupOrder) >= 0) {
    if (mode == Decoding::Strict) {
      throw Error(ErrorCode::NonCanonicalEncoding, "scalar is not reduced mod l");
    }
    return reduce(v);
  }
  return Scalar(v);
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  U256 sum{};
  u256::add(sum, limbs_, rhs.limbs_);
  U256 t{};
  if (u256::sub(t, sum, kGroupOrder) == 0) return Scalar(t);
  return Scalar(sum);
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  U256 diff{};
  if (u256::sub(diff, limbs_, rhs.limbs_) != 0) {
    u256::add(diff, diff, kGroupOrder);
  }
  return Scalar(diff);
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  return Scalar(mod_order(u256::mul_wide(limbs_, rhs.limbs_)));
}

Scalar Scalar::invert() const {
  if (is_zero()) throw Error(ErrorCode::ZeroInverse, "inversion of zero scalar");
  Scalar acc = from_u64(1);
  for (unsigned i = 253; i-- > 0;) {
    acc = acc * acc;
    if (u256::bit(kOrderMinus2, i)) acc = acc * *this;
  }
  return acc;
}

}  // namespace dpk
