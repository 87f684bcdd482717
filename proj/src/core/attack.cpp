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

#include "dpk/attack.hpp"

#include <array>

#include "dpk/error.hpp"
#include "dpk/sha512.hpp"

namespace dpk {
namespace {

void require_valid_key(const CompressedPoint& pk, const char* which) {
  try {
    EdwardsPoint::decompress(pk, Decoding::Strict);
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedPublicKey, std::string(which) + ": " + e.what());
  }
}

Scalar query_scalar(std::uint64_t query_seed, std::uint32_t attempt, std::uint8_t index) {
  static constexpr std::string_view kLabel = "dpk/attack-query";
  std::array<std::uint8_t, 13> tail{};
  for (int i = 0; i < 8; ++i) tail[i] = static_cast<std::uint8_t>(query_seed >> (8 * i));
  for (int i = 0; i < 4; ++i) tail[8 + i] = static_cast<std::uint8_t>(attempt >> (8 * i));
  tail[12] = index;
  Sha512 h;
  h.update({reinterpret_cast<const std::uint8_t*>(kLabel.data()), kLabel.size()});
  h.update(tail);
  return Scalar::reduce_wide(h.finish());
}

}  // namespace

AttackReport recover_secret_scalar(SigningOracle& oracle, const CompressedPoint& pk,
                                   const CompressedPoint& pk_prime, const ChallengeFn& hash) {
  if (pk == pk_prime) throw Error(ErrorCode::IdenticalKeys, "query keys must differ");
  require_valid_key(pk, "pk");
  require_valid_key(pk_prime, "pk_prime");

  AttackReport report;
  report.pk = pk;
  report.pk_prime = pk_prime;
  report.sig = oracle.query(pk);
  report.sig_prime = oracle.query(pk_prime);
  report.query_count = 2;

  if (report.sig.r != report.sig_prime.r) {
    throw Error(ErrorCode::OracleNotDeterministic, "oracle returned different R values");
  }

  const Message m = oracle.message();
  report.e = hash(report.sig.r, pk, m);
  report.e_prime = hash(report.sig.r, pk_prime, m);
  if (report.e == report.e_prime) {
    throw Error(ErrorCode::HashCollision, "e = e', retry with another pk_prime");
  }

  const Scalar s = Scalar::from_bytes(report.sig.s, Decoding::Lenient);
  const Scalar s_prime = Scalar::from_bytes(report.sig_prime.s, Decoding::Lenient);
  report.recovered_s = (s - s_prime) * (report.e - report.e_prime).invert();
  report.recovered_pk = mul_base(report.recovered_s).compress();
  return report;
}

QueryKeys derive_query_keys(std::uint64_t query_seed, std::uint32_t attempt) {
  Scalar a = query_scalar(query_seed, attempt, 0);
  Scalar b = query_scalar(query_seed, attempt, 1);
  // Zero or equal scalars happen with probability ~2^-252; nudge anyway so
  // the keys are always distinct and non-neutral.
  if (a.is_zero()) a = Scalar::from_u64(1);
  if (b.is_zero() || b == a) b = a + Scalar::from_u64(1);
  return {mul_base(a).compress(), mul_base(b).compress()};
}

AttackReport run_attack(SigningOracle& oracle, std::uint64_t query_seed, int max_attempts,
                        const ChallengeFn& hash) {
  int spent = 0;  // queries burnt on earlier, colliding attempts
  for (int attempt = 0;; ++attempt) {
    const QueryKeys keys = derive_query_keys(query_seed, static_cast<std::uint32_t>(attempt));
    try {
      AttackReport report = recover_secret_scalar(oracle, keys.pk, keys.pk_prime, hash);
      report.query_count += spent;
      return report;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HashCollision || attempt + 1 >= max_attempts) throw;
      spent += 2;
    }
  }
}

NonceSource NonceSource::random() { return NonceSource(Kind::Random, 0, Scalar()); }
NonceSource NonceSource::seeded(std::uint64_t seed) { return NonceSource(Kind::Seeded, seed, Scalar()); }
NonceSource NonceSource::fixed(const Scalar& r) { return NonceSource(Kind::Fixed, 0, r); }

Scalar NonceSource::next() {
  Bytes64 wide{};
  switch (kind_) {
    case Kind::Fixed:
      return fixed_;
    case Kind::Random:
      random_bytes(wide);
      break;
    case Kind::Seeded:
      for (std::size_t i = 0; i < wide.size(); i += 8) {
        const std::uint64_t w = rng_();
        for (std::size_t j = 0; j < 8; ++j) wide[i + j] = static_cast<std::uint8_t>(w >> (8 * j));
      }
      break;
  }
  return Scalar::reduce_wide(wide);
}

Forgery forge(const Scalar& recovered_s, Message m, NonceSource& nonces) {
  if (recovered_s.is_zero()) throw Error(ErrorCode::ZeroScalar, "recovered scalar is zero");
  const Scalar r = nonces.next();
  const CompressedPoint big_r = mul_base(r).compress();
  const CompressedPoint pk = mul_base(recovered_s).compress();
  const Scalar e = challenge(big_r, pk, m);
  return {Signature(big_r, r + e * recovered_s), pk};
}

Forgery small_order_forgery(const EdwardsPoint& t_point, const Scalar& s_choice, Message) {
  const OrderClass c = classify_order(t_point);
  if (c != OrderClass::SmallOrder && c != OrderClass::Identity) {
    throw Error(ErrorCode::NotSmallOrder, "point has a prime-order component");
  }
  return {Signature(mul_base(s_choice).compress(), s_choice), t_point.compress()};
}

}  // namespace dpk
