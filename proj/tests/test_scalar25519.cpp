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

#include <doctest.h>

#include <random>

#include "bigint_oracle.hpp"
#include "dpk/error.hpp"
#include "dpk/scalar25519.hpp"

using namespace dpk;
using testing::big_l;
using testing::cpp_int;

namespace {

Scalar sc(const cpp_int& v) { return Scalar::from_bytes(testing::to_le32(v)); }
cpp_int big(const Scalar& a) { return testing::from_le(a.to_bytes()); }

}  // namespace

TEST_SUITE("scalar_ring") {

TEST_CASE("group order constant") {
  CHECK(testing::from_le(u256::to_le_bytes(kGroupOrder)) == big_l());
}

TEST_CASE("reduce_wide") {
  CHECK(Scalar::reduce_wide(Bytes64{}).is_zero());

  Bytes64 l_wide{};
  const auto l_bytes = testing::to_le32(big_l());
  std::copy(l_bytes.begin(), l_bytes.end(), l_wide.begin());
  CHECK(Scalar::reduce_wide(l_wide).is_zero());

  Bytes64 ones;
  ones.fill(0xff);
  CHECK(big(Scalar::reduce_wide(ones)) == ((cpp_int(1) << 512) - 1) % big_l());

  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const auto wide = testing::random_bytes<64>(rng);
    REQUIRE(big(Scalar::reduce_wide(wide)) == testing::from_le(wide) % big_l());
  }
}

TEST_CASE("ring operations agree with the big-integer oracle on 10^4 inputs") {
  std::mt19937_64 rng(0x5ca1a);
  for (int i = 0; i < 10000; ++i) {
    const cpp_int a = testing::random_below(rng, big_l());
    const cpp_int b = testing::random_below(rng, big_l());
    REQUIRE(big(sc(a) + sc(b)) == (a + b) % big_l());
    REQUIRE(big(sc(a) - sc(b)) == testing::mod(a - b, big_l()));
    REQUIRE(big(sc(a) * sc(b)) == (a * b) % big_l());
  }
}

TEST_CASE("ring identities") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    const Scalar x = sc(testing::random_below(rng, big_l()));
    const Scalar y = sc(testing::random_below(rng, big_l()));
    const Scalar z = sc(testing::random_below(rng, big_l()));
    REQUIRE((x - x).is_zero());
    REQUIRE((Scalar::from_u64(1) * x) == x);
    REQUIRE((x * (y + z)) == (x * y + x * z));
    REQUIRE(((x * y) * z) == (x * (y * z)));
    REQUIRE((x + (-x)).is_zero());
  }
}

TEST_CASE("invert") {
  CHECK(Scalar::from_u64(1).invert() == Scalar::from_u64(1));
  try {
    (void)Scalar().invert();
    FAIL("expected ZeroInverse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroInverse);
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const Scalar a = sc(1 + testing::random_below(rng, big_l() - 1));
    REQUIRE((a * a.invert()) == Scalar::from_u64(1));
    REQUIRE(big(a.invert()) == testing::inv_mod(big(a), big_l()));
  }
}

TEST_CASE("encode and decode") {
  CHECK(Scalar().to_bytes() == Bytes32{});
  const auto l_bytes = testing::to_le32(big_l());
  try {
    (void)Scalar::from_bytes(l_bytes, Decoding::Strict);
    FAIL("expected NonCanonicalEncoding");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCanonicalEncoding);
  }
  CHECK(Scalar::from_bytes(l_bytes, Decoding::Lenient).is_zero());

  std::mt19937_64 rng(10);
  for (int i = 0; i < 1000; ++i) {
    const Scalar a = sc(testing::random_below(rng, big_l()));
    REQUIRE(Scalar::from_bytes(a.to_bytes()) == a);
    Bytes64 padded{};
    const auto enc = a.to_bytes();
    std::copy(enc.begin(), enc.end(), padded.begin());
    REQUIRE(Scalar::reduce_wide(padded) == a);
  }
}

}  // TEST_SUITE
