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

#include "dpk/eddsa.hpp"

#include <algorithm>

#include "dpk/error.hpp"
#include "dpk/sha512.hpp"

namespace dpk {
namespace {

Signature sign_with(const ExpandedSecret& secret, const CompressedPoint& pk, Message m) {
  const Scalar r = Scalar::reduce_wide(Sha512().update(secret.prefix).update(m).finish());
  const CompressedPoint big_r = mul_base(r).compress();
  const Scalar e = challenge(big_r, pk, m);
  return Signature(big_r, r + e * secret.scalar);
}

}  // namespace

SecretSeed SecretSeed::generate() {
  SecretSeed s;
  random_bytes(s.bytes);
  return s;
}

ExpandedSecret expand_secret(const SecretSeed& seed) {
  const Bytes64 h = Sha512::digest(seed.bytes);
  ExpandedSecret out;
  std::copy_n(h.begin(), 32, out.clamped.begin());
  std::copy_n(h.begin() + 32, 32, out.prefix.begin());
  out.clamped[0] &= 0xf8;
  out.clamped[31] &= 0x7f;
  out.clamped[31] |= 0x40;
  out.scalar = Scalar::reduce(u256::from_le_bytes(out.clamped));
  return out;
}

CompressedPoint derive_public(const SecretSeed& seed) {
  const ExpandedSecret secret = expand_secret(seed);
  return scalar_mul(u256::from_le_bytes(secret.clamped), EdwardsPoint::base_point()).compress();
}

StoredKeypair StoredKeypair::generate() { return from_seed(SecretSeed::generate()); }

StoredKeypair StoredKeypair::from_seed(const SecretSeed& seed) {
  return StoredKeypair(seed, derive_public(seed));
}

StoredKeypair StoredKeypair::from_bytes(std::span<const std::uint8_t, 64> in) {
  StoredKeypair kp(SecretSeed::from_span(in.first<32>()),
                   CompressedPoint::from_span(in.last<32>()));
  kp.validate();
  return kp;
}

Bytes64 StoredKeypair::to_bytes() const {
  Bytes64 out{};
  std::copy(seed_.bytes.begin(), seed_.bytes.end(), out.begin());
  std::copy(public_key_.bytes.begin(), public_key_.bytes.end(), out.begin() + 32);
  return out;
}

void StoredKeypair::validate() const {
  if (derive_public(seed_) != public_key_) {
    throw Error(ErrorCode::CorruptKeypair, "stored public key does not match the seed");
  }
}

Signature Signature::from_bytes(std::span<const std::uint8_t, 64> in) {
  Signature sig;
  sig.r = CompressedPoint::from_span(in.first<32>());
  std::copy_n(in.begin() + 32, 32, sig.s.begin());
  return sig;
}

Bytes64 Signature::to_bytes() const {
  Bytes64 out{};
  std::copy(r.bytes.begin(), r.bytes.end(), out.begin());
  std::copy(s.begin(), s.end(), out.begin() + 32);
  return out;
}

Scalar challenge(const CompressedPoint& r, const CompressedPoint& pk, Message m) {
  return Scalar::reduce_wide(Sha512().update(r.bytes).update(pk.bytes).update(m).finish());
}

Signature sign_vulnerable(const SecretSeed& seed, const CompressedPoint& pk_input, Message m) {
  try {
    EdwardsPoint::decompress(pk_input, Decoding::Strict);
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedPublicKey, std::string("public key rejected: ") + e.what());
  }
  return sign_with(expand_secret(seed), pk_input, m);
}

Signature sign_safe_stored(const StoredKeypair& kp, Message m) {
  kp.validate();
  return sign_with(expand_secret(kp.seed()), kp.public_key(), m);
}

Signature sign_safe_rederive(const SecretSeed& seed, Message m) {
  const ExpandedSecret secret = expand_secret(seed);
  const CompressedPoint pk =
      scalar_mul(u256::from_le_bytes(secret.clamped), EdwardsPoint::base_point()).compress();
  return sign_with(secret, pk, m);
}

std::string_view to_string(VerifyOutcome v) noexcept {
  switch (v) {
    case VerifyOutcome::Accept: return "Accept";
    case VerifyOutcome::NonCanonicalR: return "NonCanonicalR";
    case VerifyOutcome::NonCanonicalPk: return "NonCanonicalPk";
    case VerifyOutcome::NonCanonicalS: return "NonCanonicalS";
    case VerifyOutcome::NotOnCurve: return "NotOnCurve";
    case VerifyOutcome::SmallOrderPk: return "SmallOrderPk";
    case VerifyOutcome::EquationFailed: return "EquationFailed";
  }
  return "Unknown";
}

VerifyOutcome verify(Message m, const Signature& sig, const CompressedPoint& pk,
                     VerifyMode mode, bool reject_small_order) {
  auto decode = [](const CompressedPoint& cp, VerifyOutcome non_canonical,
                   EdwardsPoint& out) -> VerifyOutcome {
    try {
      out = EdwardsPoint::decompress(cp, Decoding::Strict);
      return VerifyOutcome::Accept;
    } catch (const Error& e) {
      return e.code() == ErrorCode::NotOnCurve ? VerifyOutcome::NotOnCurve : non_canonical;
    }
  };

  EdwardsPoint a;
  EdwardsPoint r;
  if (auto v = decode(pk, VerifyOutcome::NonCanonicalPk, a); v != VerifyOutcome::Accept) return v;
  if (auto v = decode(sig.r, VerifyOutcome::NonCanonicalR, r); v != VerifyOutcome::Accept) return v;

  Scalar s;
  try {
    s = Scalar::from_bytes(sig.s, Decoding::Strict);
  } catch (const Error&) {
    return VerifyOutcome::NonCanonicalS;
  }

  if (reject_small_order) {
    const OrderClass c = classify_order(a);
    if (c == OrderClass::SmallOrder || c == OrderClass::Identity) {
      return VerifyOutcome::SmallOrderPk;
    }
  }

  // e is reduced mod l in both modes.
  const Scalar e = challenge(sig.r, pk, m);
  const EdwardsPoint sg = mul_base(s);
  const EdwardsPoint ea = scalar_mul(e, a);
  const bool ok = mode == VerifyMode::Cofactored
                      ? sg.mul_by_cofactor() == r.mul_by_cofactor() + ea.mul_by_cofactor()
                      : sg == r + ea;
  return ok ? VerifyOutcome::Accept : VerifyOutcome::EquationFailed;
}

}  // namespace dpk
