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

// Key recovery against signing APIs that take the public key as a separate,
// unchecked argument. Two queries with different public keys over the same
// fixed message return signatures with equal R and different S, and
//   s = (S - S') / (e - e')  (mod l)
// falls out of S = r + e*s.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dpk/eddsa.hpp"

namespace dpk {

/// Signs a fixed hidden message under a fixed hidden key, for any public key
/// the caller supplies. The message itself is public.
class SigningOracle {
 public:
  virtual ~SigningOracle() = default;

  virtual Signature query(const CompressedPoint& pk) = 0;
  virtual Message message() const = 0;
};

/// In-process oracle over sign_vulnerable.
class VulnerableOracle final : public SigningOracle {
 public:
  VulnerableOracle(const SecretSeed& seed, std::vector<std::uint8_t> message)
      : seed_(seed), message_(std::move(message)) {}

  Signature query(const CompressedPoint& pk) override {
    return sign_vulnerable(seed_, pk, message_);
  }
  Message message() const override { return message_; }

 private:
  SecretSeed seed_;
  std::vector<std::uint8_t> message_;
};

/// Hardened oracle: the queried key is ignored, the stored one is used.
class StoredKeypairOracle final : public SigningOracle {
 public:
  StoredKeypairOracle(const StoredKeypair& kp, std::vector<std::uint8_t> message)
      : keypair_(kp), message_(std::move(message)) {}

  Signature query(const CompressedPoint&) override { return sign_safe_stored(keypair_, message_); }
  Message message() const override { return message_; }

 private:
  StoredKeypair keypair_;
  std::vector<std::uint8_t> message_;
};

/// Hardened oracle: the queried key is ignored, the key is re-derived.
class RederiveOracle final : public SigningOracle {
 public:
  RederiveOracle(const SecretSeed& seed, std::vector<std::uint8_t> message)
      : seed_(seed), message_(std::move(message)) {}

  Signature query(const CompressedPoint&) override { return sign_safe_rederive(seed_, message_); }
  Message message() const override { return message_; }

 private:
  SecretSeed seed_;
  std::vector<std::uint8_t> message_;
};

/// Runs `/bin/sh -c command` once per query. The child gets the public key
/// as 64 hex characters and a newline on stdin and must print the signature
/// as 128 hex characters and a newline on stdout. Transport problems throw
/// OracleTransport.
class SubprocessOracle final : public SigningOracle {
 public:
  SubprocessOracle(std::string command, std::vector<std::uint8_t> message)
      : command_(std::move(command)), message_(std::move(message)) {}

  Signature query(const CompressedPoint& pk) override;
  Message message() const override { return message_; }

 private:
  std::string command_;
  std::vector<std::uint8_t> message_;
};

/// Hash used for e and e'. Injectable so the collision path can be tested.
using ChallengeFn = std::function<Scalar(const CompressedPoint&, const CompressedPoint&, Message)>;

struct AttackReport {
  CompressedPoint pk;
  CompressedPoint pk_prime;
  Signature sig;
  Signature sig_prime;
  Scalar e;
  Scalar e_prime;
  Scalar recovered_s;
  CompressedPoint recovered_pk;
  int query_count = 0;

  /// False when S = S', i.e. the oracle ignores the queried key.
  bool succeeded() const { return !recovered_s.is_zero(); }

  std::string to_json() const;
  /// Throws MalformedReport.
  static AttackReport from_json(std::string_view json);
};

/// Queries the oracle with pk and pk_prime and solves for the secret scalar.
/// Throws IdenticalKeys, MalformedPublicKey, OracleNotDeterministic or
/// HashCollision. A hardened oracle yields a report with recovered_s = 0.
AttackReport recover_secret_scalar(SigningOracle& oracle, const CompressedPoint& pk,
                                   const CompressedPoint& pk_prime,
                                   const ChallengeFn& hash = challenge);

struct QueryKeys {
  CompressedPoint pk;
  CompressedPoint pk_prime;
};

/// pk = s*G, pk' = s'*G with s, s' derived from (query_seed, attempt).
QueryKeys derive_query_keys(std::uint64_t query_seed, std::uint32_t attempt);

/// Picks query keys, runs recover_secret_scalar and retries on HashCollision
/// with fresh keys up to `max_attempts` times.
AttackReport run_attack(SigningOracle& oracle, std::uint64_t query_seed, int max_attempts = 4,
                        const ChallengeFn& hash = challenge);

/// Source of forging nonces r.
class NonceSource {
 public:
  static NonceSource random();
  static NonceSource seeded(std::uint64_t seed);
  static NonceSource fixed(const Scalar& r);

  Scalar next();

 private:
  enum class Kind { Random, Seeded, Fixed };
  NonceSource(Kind kind, std::uint64_t seed, const Scalar& fixed)
      : kind_(kind), rng_(seed), fixed_(fixed) {}

  Kind kind_;
  std::mt19937_64 rng_;
  Scalar fixed_;
};

struct Forgery {
  Signature sig;
  CompressedPoint pk;
};

/// Signs m under pk = recovered_s*G with a nonce that does not come from the
/// (unknown) prefix. Throws ZeroScalar.
Forgery forge(const Scalar& recovered_s, Message m, NonceSource& nonces);

/// (R = S*G, S) under a small-order pk. Passes cofactored verification for
/// every message when small-order keys are not rejected. Throws NotSmallOrder.
Forgery small_order_forgery(const EdwardsPoint& t_point, const Scalar& s_choice, Message m);

}  // namespace dpk
