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
#include <string_view>

#include "dpk/edwards.hpp"
#include "dpk/scalar25519.hpp"

namespace dpk {

using Message = std::span<const std::uint8_t>;

struct SecretSeed {
  Bytes32 bytes{};

  static SecretSeed generate();
  static SecretSeed from_span(std::span<const std::uint8_t, 32> in) {
    SecretSeed s;
    std::copy(in.begin(), in.end(), s.bytes.begin());
    return s;
  }

  friend bool operator==(const SecretSeed&, const SecretSeed&) = default;
};

/// SHA-512(seed) split into the clamped secret scalar and the nonce prefix.
struct ExpandedSecret {
  /// 2^254 + sum_{3 <= i <= 253} 2^i h_i, little-endian, before reduction.
  Bytes32 clamped{};
  /// clamped mod l.
  Scalar scalar;
  /// Upper half of the hash, h_256 .. h_511.
  Bytes32 prefix{};
};

ExpandedSecret expand_secret(const SecretSeed& seed);
CompressedPoint derive_public(const SecretSeed& seed);

/// 64-byte on-disk key: seed || compressed public key.
class StoredKeypair {
 public:
  static StoredKeypair generate();
  static StoredKeypair from_seed(const SecretSeed& seed);
  /// Throws CorruptKeypair if the embedded key does not match the seed.
  static StoredKeypair from_bytes(std::span<const std::uint8_t, 64> in);

  const SecretSeed& seed() const { return seed_; }
  const CompressedPoint& public_key() const { return public_key_; }
  Bytes64 to_bytes() const;

  /// Re-checks the seed/public-key binding. Throws CorruptKeypair.
  void validate() const;

 private:
  StoredKeypair(const SecretSeed& seed, const CompressedPoint& pk)
      : seed_(seed), public_key_(pk) {}

  SecretSeed seed_;
  CompressedPoint public_key_;
};

/// Wire signature R || S. S is kept as its encoded bytes so that
/// non-canonical encodings survive until verification.
struct Signature {
  CompressedPoint r;
  Bytes32 s{};

  Signature() = default;
  Signature(const CompressedPoint& r_point, const Scalar& s_scalar)
      : r(r_point), s(s_scalar.to_bytes()) {}

  static Signature from_bytes(std::span<const std::uint8_t, 64> in);
  Bytes64 to_bytes() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// e = SHA-512(R || pk || m) mod l.
Scalar challenge(const CompressedPoint& r, const CompressedPoint& pk, Message m);

/// Signs with a caller-supplied public key that is never compared against
/// the seed. The key only has to decode strictly. This is the misuse surface
/// that leaks the secret scalar to anyone who can pick `pk_input`.
/// Throws MalformedPublicKey.
Signature sign_vulnerable(const SecretSeed& seed, const CompressedPoint& pk_input, Message m);

/// Signs with the public key stored alongside the seed. Throws CorruptKeypair.
Signature sign_safe_stored(const StoredKeypair& kp, Message m);

/// Signs after re-deriving the public key from the seed.
Signature sign_safe_rederive(const SecretSeed& seed, Message m);

enum class VerifyMode { Cofactored, Cofactorless };

enum class VerifyOutcome {
  Accept,
  NonCanonicalR,
  NonCanonicalPk,
  NonCanonicalS,
  NotOnCurve,
  SmallOrderPk,
  EquationFailed,
};

std::string_view to_string(VerifyOutcome v) noexcept;

/// Checks, in order: pk and R decode strictly; S < l; optionally pk is not
/// of small order; the group equation for the selected mode.
VerifyOutcome verify(Message m, const Signature& sig, const CompressedPoint& pk,
                     VerifyMode mode = VerifyMode::Cofactored, bool reject_small_order = true);

}  // namespace dpk
