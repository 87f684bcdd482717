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

#include <algorithm>
#include <random>
#include <set>

#include "bigint_oracle.hpp"
#include "dpk/edwards.hpp"
#include "dpk/error.hpp"

using namespace dpk;
using testing::cpp_int;

namespace {

cpp_int big(const FieldElement& a) { return testing::from_le(a.to_bytes()); }

/// Random curve point with both prime-order and torsion parts (in general),
/// obtained by decompressing random y values.
EdwardsPoint random_curve_point(std::mt19937_64& rng) {
  for (;;) {
    CompressedPoint cp{testing::random_bytes<32>(rng)};
    cp.bytes[31] &= 0x7f;
    if (rng() & 1) cp.bytes[31] |= 0x80;
    try {
      return EdwardsPoint::decompress(cp);
    } catch (const Error&) {
    }
  }
}

EdwardsPoint random_subgroup_point(std::mt19937_64& rng) {
  return mul_base(Scalar::reduce_wide(testing::random_bytes<64>(rng)));
}

ErrorCode decompress_error(const CompressedPoint& cp, Decoding mode = Decoding::Strict) {
  try {
    (void)EdwardsPoint::decompress(cp, mode);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected decompress to throw");
  return ErrorCode::InvalidLength;
}

}  // namespace

TEST_SUITE("edwards") {

TEST_CASE("base point matches the published coordinates") {
  const EdwardsPoint& g = EdwardsPoint::base_point();
  CHECK(big(g.affine_x()) ==
        cpp_int("15112221349535400772501151409588531511454012693041857206046113283949847762202"));
  CHECK(big(g.affine_y()) ==
        cpp_int("46316835694926478169428394003475163141307993866256225615783033603165251855960"));
  CHECK(g.is_on_curve());
  const auto cp = g.compress();
  CHECK(cp.bytes[0] == 0x58);
  CHECK(std::all_of(cp.bytes.begin() + 1, cp.bytes.end(), [](auto b) { return b == 0x66; }));
  CHECK(EdwardsPoint::decompress(cp) == g);
}

TEST_CASE("curve parameters") {
  CHECK(kCofactor == 8);
  CHECK(kKeyBits == 256);
  CHECK((FieldElement::edwards_d() * FieldElement::from_u64(121666)) ==
        -FieldElement::from_u64(121665));
  CHECK(scalar_mul(kGroupOrder, EdwardsPoint::base_point()).is_neutral());
}

TEST_CASE("point_add basics") {
  const EdwardsPoint& g = EdwardsPoint::base_point();
  const EdwardsPoint neutral;
  CHECK((g + neutral) == g);
  CHECK((neutral + g) == g);
  CHECK((g + (-g)).is_neutral());
  CHECK((g + g) == scalar_mul(2, g));
  CHECK((g + g) == g.doubled());
}

TEST_CASE("extended addition matches the affine formula on 10^3 random pairs") {
  std::mt19937_64 rng(100);
  for (int i = 0; i < 1000; ++i) {
    const EdwardsPoint p = random_curve_point(rng);
    const EdwardsPoint q = (i % 4 == 0) ? p : random_curve_point(rng);
    const testing::AffinePoint expected = testing::affine_add(
        {big(p.affine_x()), big(p.affine_y())}, {big(q.affine_x()), big(q.affine_y())});
    const EdwardsPoint sum = p + q;
    REQUIRE(sum.is_on_curve());
    REQUIRE(big(sum.affine_x()) == expected.x);
    REQUIRE(big(sum.affine_y()) == expected.y);
  }
}

TEST_CASE("doubling agrees with addition") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 200; ++i) {
    const EdwardsPoint p = random_curve_point(rng);
    REQUIRE(p.doubled() == p + p);
    REQUIRE(p.doubled().is_on_curve());
  }
}

TEST_CASE("group laws on random points") {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_curve_point(rng), b = random_curve_point(rng),
               c = random_curve_point(rng);
    REQUIRE(((a + b) + c) == (a + (b + c)));
    REQUIRE((a + b) == (b + a));
    REQUIRE((a + EdwardsPoint()) == a);
    REQUIRE((a - a).is_neutral());
  }
}

TEST_CASE("scalar_mul agrees with iterated addition for k <= 64") {
  std::mt19937_64 rng(103);
  for (const EdwardsPoint& p : {EdwardsPoint::base_point(), random_curve_point(rng)}) {
    EdwardsPoint acc;
    for (std::uint64_t k = 0; k <= 64; ++k) {
      REQUIRE(scalar_mul(k, p) == acc);
      acc = acc + p;
    }
  }
}

TEST_CASE("scalar_mul is linear") {
  CHECK(scalar_mul(0, EdwardsPoint::base_point()).is_neutral());
  std::mt19937_64 rng(104);
  for (int i = 0; i < 50; ++i) {
    const EdwardsPoint p = random_curve_point(rng);
    const std::uint64_t m = rng() >> 2, n = rng() >> 2;
    REQUIRE(scalar_mul(m + n, p) == scalar_mul(m, p) + scalar_mul(n, p));
  }
}

TEST_CASE("compress and decompress") {
  Bytes32 expected_neutral{};
  expected_neutral[0] = 1;
  CHECK(EdwardsPoint().compress().bytes == expected_neutral);

  std::mt19937_64 rng(105);
  for (int i = 0; i < 1000; ++i) {
    const EdwardsPoint p = random_subgroup_point(rng);
    REQUIRE(p.is_on_curve());
    REQUIRE(EdwardsPoint::decompress(p.compress()) == p);
  }
}

TEST_CASE("strict decompression rejects non-canonical encodings") {
  CompressedPoint y_is_p{testing::to_le32(testing::big_p())};
  CHECK(decompress_error(y_is_p) == ErrorCode::NonCanonicalEncoding);

  // y = 1 (+p) is a valid point in lenient mode.
  CompressedPoint y_is_p_plus_1{testing::to_le32(testing::big_p() + 1)};
  CHECK(decompress_error(y_is_p_plus_1) == ErrorCode::NonCanonicalEncoding);
  CHECK(EdwardsPoint::decompress(y_is_p_plus_1, Decoding::Lenient).is_neutral());

  // x = 0 with the sign bit set.
  CompressedPoint neg_zero = EdwardsPoint().compress();
  neg_zero.bytes[31] |= 0x80;
  CHECK(decompress_error(neg_zero) == ErrorCode::NonCanonicalEncoding);
  CHECK(EdwardsPoint::decompress(neg_zero, Decoding::Lenient).is_neutral());
}

TEST_CASE("decompression reports NotOnCurve when y has no x") {
  const cpp_int& p = testing::big_p();
  int found = 0;
  for (int y = 2; y < 200 && found < 10; ++y) {
    const cpp_int u = y * y - 1;
    const cpp_int v = testing::mod(testing::big_d() * y * y + 1, p);
    const cpp_int ratio = u * testing::inv_mod(v, p) % p;
    const bool residue = ratio == 0 || testing::powm(ratio, (p - 1) / 2, p) == 1;
    const CompressedPoint cp{testing::to_le32(y)};
    if (residue) {
      CHECK(EdwardsPoint::decompress(cp).is_on_curve());
    } else {
      CHECK(decompress_error(cp) == ErrorCode::NotOnCurve);
      ++found;
    }
  }
  CHECK(found == 10);
}

TEST_CASE("small-order table") {
  const auto& points = small_order_points();
  const auto& encodings = small_order_encodings();
  REQUIRE(points.size() == 8);
  CHECK(std::is_sorted(encodings.begin(), encodings.end()));
  CHECK(std::set<CompressedPoint>(encodings.begin(), encodings.end()).size() == 8);

  int neutral_count = 0;
  std::multiset<int> orders;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const EdwardsPoint& t = points[i];
    CHECK(t.compress() == encodings[i]);
    CHECK(scalar_mul(8, t).is_neutral());
    if (scalar_mul(1, t).is_neutral()) ++neutral_count;
    int order = 1;
    while (!scalar_mul(static_cast<std::uint64_t>(order), t).is_neutral()) ++order;
    orders.insert(order);
  }
  CHECK(neutral_count == 1);
  CHECK(orders == std::multiset<int>{1, 2, 4, 4, 8, 8, 8, 8});
}

TEST_CASE("small-order table re-derived as l*P for random P") {
  std::mt19937_64 rng(106);
  std::set<CompressedPoint> derived;
  for (int i = 0; i < 400 && derived.size() < 8; ++i) {
    derived.insert(scalar_mul(kGroupOrder, random_curve_point(rng)).compress());
  }
  const auto& frozen = small_order_encodings();
  CHECK(derived == std::set<CompressedPoint>(frozen.begin(), frozen.end()));
}

TEST_CASE("small-order table is closed under addition and negation") {
  const auto& enc = small_order_encodings();
  const std::set<CompressedPoint> table(enc.begin(), enc.end());
  for (const auto& a : small_order_points()) {
    CHECK(table.count((-a).compress()) == 1);
    for (const auto& b : small_order_points()) CHECK(table.count((a + b).compress()) == 1);
  }
}

TEST_CASE("classify_order") {
  const EdwardsPoint& g = EdwardsPoint::base_point();
  CHECK(classify_order(EdwardsPoint()) == OrderClass::Identity);
  CHECK(classify_order(g) == OrderClass::PrimeOrder);
  for (const auto& t : small_order_points()) {
    if (t.is_neutral()) continue;
    CHECK(classify_order(t) == OrderClass::SmallOrder);
    CHECK(classify_order(g + t) == OrderClass::MixedOrder);
  }
  std::mt19937_64 rng(107);
  for (int i = 0; i < 20; ++i) {
    CHECK(classify_order(random_subgroup_point(rng)) == OrderClass::PrimeOrder);
  }
}

}  // TEST_SUITE
