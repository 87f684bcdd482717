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

#include "dpk/dpk.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "dpk/attack.hpp"
#include "dpk/eddsa.hpp"
#include "dpk/error.hpp"

struct dpk_keypair {
  dpk::StoredKeypair kp;
};

struct dpk_oracle {
  std::unique_ptr<dpk::SigningOracle> impl;
};

struct dpk_attack_report {
  dpk::AttackReport report;
};

namespace {

thread_local std::string g_last_error;

struct ArgumentError {
  const char* what;
};

dpk_status status_for(dpk::ErrorCode code) {
  using dpk::ErrorCode;
  switch (code) {
    case ErrorCode::NonCanonicalEncoding: return DPK_ERR_NON_CANONICAL;
    case ErrorCode::NotOnCurve: return DPK_ERR_NOT_ON_CURVE;
    case ErrorCode::InvalidLength:
    case ErrorCode::InvalidHex: return DPK_ERR_INVALID_ARGUMENT;
    case ErrorCode::MalformedPublicKey: return DPK_ERR_MALFORMED_PUBLIC_KEY;
    case ErrorCode::CorruptKeypair: return DPK_ERR_CORRUPT_KEYPAIR;
    case ErrorCode::IdenticalKeys: return DPK_ERR_IDENTICAL_KEYS;
    case ErrorCode::OracleNotDeterministic: return DPK_ERR_ORACLE_NOT_DETERMINISTIC;
    case ErrorCode::HashCollision: return DPK_ERR_HASH_COLLISION;
    case ErrorCode::ZeroScalar: return DPK_ERR_ZERO_SCALAR;
    case ErrorCode::NotSmallOrder: return DPK_ERR_NOT_SMALL_ORDER;
    case ErrorCode::OracleTransport: return DPK_ERR_ORACLE_TRANSPORT;
    case ErrorCode::MalformedReport: return DPK_ERR_MALFORMED_REPORT;
    case ErrorCode::ZeroInverse:
    case ErrorCode::ZeroDenominator: return DPK_ERR_INTERNAL;
  }
  return DPK_ERR_INTERNAL;
}

template <typename F>
dpk_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const ArgumentError& e) {
    g_last_error = e.what;
    return DPK_ERR_INVALID_ARGUMENT;
  } catch (const dpk::Error& e) {
    g_last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DPK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DPK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return DPK_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw ArgumentError{what};
}

dpk::Message message(const uint8_t* m, size_t mlen) {
  if (mlen != 0) require(m, "message is NULL");
  return {m, mlen};
}

template <std::size_t N>
std::span<const std::uint8_t, N> fixed(const uint8_t* p, const char* what) {
  require(p, what);
  return std::span<const std::uint8_t, N>(p, N);
}

dpk::CompressedPoint point_arg(const uint8_t* p, const char* what) {
  return dpk::CompressedPoint::from_span(fixed<32>(p, what));
}

dpk::SecretSeed seed_arg(const uint8_t* p) {
  return dpk::SecretSeed::from_span(fixed<32>(p, "seed is NULL"));
}

template <std::size_t N>
void copy_out(uint8_t* dst, const std::array<std::uint8_t, N>& src) {
  std::memcpy(dst, src.data(), N);
}

class CallbackOracle final : public dpk::SigningOracle {
 public:
  CallbackOracle(dpk_oracle_callback cb, void* user, std::vector<std::uint8_t> m)
      : cb_(cb), user_(user), message_(std::move(m)) {}

  dpk::Signature query(const dpk::CompressedPoint& pk) override {
    std::array<std::uint8_t, 64> sig{};
    const dpk_status st = cb_(user_, pk.bytes.data(), sig.data());
    if (st != DPK_OK) {
      throw dpk::Error(dpk::ErrorCode::OracleTransport,
                       std::string("oracle callback failed: ") + dpk_status_name(st));
    }
    return dpk::Signature::from_bytes(sig);
  }
  dpk::Message message() const override { return message_; }

 private:
  dpk_oracle_callback cb_;
  void* user_;
  std::vector<std::uint8_t> message_;
};

dpk_status store_report(dpk_attack_report** out, const dpk::AttackReport& report) {
  *out = new dpk_attack_report{report};
  if (!report.succeeded()) {
    g_last_error = "oracle ignores the queried public key; recovered scalar is zero";
    return DPK_ERR_ATTACK_FAILED;
  }
  return DPK_OK;
}

}  // namespace

extern "C" {

const char* dpk_status_name(dpk_status status) {
  switch (status) {
    case DPK_OK: return "Ok";
    case DPK_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case DPK_ERR_NON_CANONICAL: return "NonCanonicalEncoding";
    case DPK_ERR_NOT_ON_CURVE: return "NotOnCurve";
    case DPK_ERR_MALFORMED_PUBLIC_KEY: return "MalformedPublicKey";
    case DPK_ERR_CORRUPT_KEYPAIR: return "CorruptKeypair";
    case DPK_ERR_IDENTICAL_KEYS: return "IdenticalKeys";
    case DPK_ERR_ORACLE_NOT_DETERMINISTIC: return "OracleNotDeterministic";
    case DPK_ERR_HASH_COLLISION: return "HashCollision";
    case DPK_ERR_ATTACK_FAILED: return "AttackFailed";
    case DPK_ERR_ZERO_SCALAR: return "ZeroScalar";
    case DPK_ERR_NOT_SMALL_ORDER: return "NotSmallOrder";
    case DPK_ERR_ORACLE_TRANSPORT: return "OracleTransport";
    case DPK_ERR_MALFORMED_REPORT: return "MalformedReport";
    case DPK_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* dpk_verdict_name(dpk_verdict verdict) {
  switch (verdict) {
    case DPK_ACCEPT: return "Accept";
    case DPK_REJECT_NON_CANONICAL_R: return "NonCanonicalR";
    case DPK_REJECT_NON_CANONICAL_PK: return "NonCanonicalPk";
    case DPK_REJECT_NON_CANONICAL_S: return "NonCanonicalS";
    case DPK_REJECT_NOT_ON_CURVE: return "NotOnCurve";
    case DPK_REJECT_SMALL_ORDER_PK: return "SmallOrderPk";
    case DPK_REJECT_EQUATION_FAILED: return "EquationFailed";
  }
  return "Unknown";
}

const char* dpk_last_error(void) { return g_last_error.c_str(); }

dpk_status dpk_keypair_generate(dpk_keypair** out) {
  return guarded([&] {
    require(out, "out is NULL");
    *out = new dpk_keypair{dpk::StoredKeypair::generate()};
    return DPK_OK;
  });
}

dpk_status dpk_keypair_from_seed(dpk_keypair** out, const uint8_t seed[DPK_SEED_BYTES]) {
  return guarded([&] {
    require(out, "out is NULL");
    *out = new dpk_keypair{dpk::StoredKeypair::from_seed(seed_arg(seed))};
    return DPK_OK;
  });
}

dpk_status dpk_keypair_load(dpk_keypair** out, const uint8_t bytes[DPK_KEYPAIR_BYTES]) {
  return guarded([&] {
    require(out, "out is NULL");
    *out = new dpk_keypair{dpk::StoredKeypair::from_bytes(fixed<64>(bytes, "bytes is NULL"))};
    return DPK_OK;
  });
}

void dpk_keypair_free(dpk_keypair* kp) { delete kp; }

void dpk_keypair_seed(const dpk_keypair* kp, uint8_t out[DPK_SEED_BYTES]) {
  copy_out(out, kp->kp.seed().bytes);
}

void dpk_keypair_public_key(const dpk_keypair* kp, uint8_t out[DPK_PUBLIC_KEY_BYTES]) {
  copy_out(out, kp->kp.public_key().bytes);
}

void dpk_keypair_bytes(const dpk_keypair* kp, uint8_t out[DPK_KEYPAIR_BYTES]) {
  copy_out(out, kp->kp.to_bytes());
}

dpk_status dpk_derive_public_key(uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                                 const uint8_t seed[DPK_SEED_BYTES]) {
  return guarded([&] {
    require(pk, "pk is NULL");
    copy_out(pk, dpk::derive_public(seed_arg(seed)).bytes);
    return DPK_OK;
  });
}

dpk_status dpk_sign_unsafe(uint8_t sig[DPK_SIGNATURE_BYTES], const uint8_t* m, size_t mlen,
                           const uint8_t public_key[DPK_PUBLIC_KEY_BYTES],
                           const uint8_t seed[DPK_SEED_BYTES]) {
  return guarded([&] {
    require(sig, "sig is NULL");
    const auto out = dpk::sign_vulnerable(seed_arg(seed),
                                          point_arg(public_key, "public_key is NULL"),
                                          message(m, mlen));
    copy_out(sig, out.to_bytes());
    return DPK_OK;
  });
}

dpk_status dpk_sign_stored(uint8_t sig[DPK_SIGNATURE_BYTES], const uint8_t* m, size_t mlen,
                           const dpk_keypair* kp) {
  return guarded([&] {
    require(sig, "sig is NULL");
    require(kp, "kp is NULL");
    copy_out(sig, dpk::sign_safe_stored(kp->kp, message(m, mlen)).to_bytes());
    return DPK_OK;
  });
}

dpk_status dpk_sign_rederive(uint8_t sig[DPK_SIGNATURE_BYTES], const uint8_t* m, size_t mlen,
                             const uint8_t seed[DPK_SEED_BYTES]) {
  return guarded([&] {
    require(sig, "sig is NULL");
    copy_out(sig, dpk::sign_safe_rederive(seed_arg(seed), message(m, mlen)).to_bytes());
    return DPK_OK;
  });
}

dpk_status dpk_verify(dpk_verdict* verdict, const uint8_t* m, size_t mlen,
                      const uint8_t sig[DPK_SIGNATURE_BYTES],
                      const uint8_t public_key[DPK_PUBLIC_KEY_BYTES], dpk_verify_mode mode,
                      int reject_small_order) {
  return guarded([&] {
    require(verdict, "verdict is NULL");
    const auto s = dpk::Signature::from_bytes(fixed<64>(sig, "sig is NULL"));
    const auto outcome = dpk::verify(
        message(m, mlen), s, point_arg(public_key, "public_key is NULL"),
        mode == DPK_VERIFY_COFACTORLESS ? dpk::VerifyMode::Cofactorless
                                        : dpk::VerifyMode::Cofactored,
        reject_small_order != 0);
    switch (outcome) {
      case dpk::VerifyOutcome::Accept: *verdict = DPK_ACCEPT; break;
      case dpk::VerifyOutcome::NonCanonicalR: *verdict = DPK_REJECT_NON_CANONICAL_R; break;
      case dpk::VerifyOutcome::NonCanonicalPk: *verdict = DPK_REJECT_NON_CANONICAL_PK; break;
      case dpk::VerifyOutcome::NonCanonicalS: *verdict = DPK_REJECT_NON_CANONICAL_S; break;
      case dpk::VerifyOutcome::NotOnCurve: *verdict = DPK_REJECT_NOT_ON_CURVE; break;
      case dpk::VerifyOutcome::SmallOrderPk: *verdict = DPK_REJECT_SMALL_ORDER_PK; break;
      case dpk::VerifyOutcome::EquationFailed: *verdict = DPK_REJECT_EQUATION_FAILED; break;
    }
    return DPK_OK;
  });
}

dpk_status dpk_oracle_new_inproc(dpk_oracle** out, dpk_signer_kind kind,
                                 const uint8_t seed[DPK_SEED_BYTES], const uint8_t* m,
                                 size_t mlen) {
  return guarded([&] {
    require(out, "out is NULL");
    const dpk::SecretSeed s = seed_arg(seed);
    const auto msg = message(m, mlen);
    std::vector<std::uint8_t> bytes(msg.begin(), msg.end());
    std::unique_ptr<dpk::SigningOracle> impl;
    switch (kind) {
      case DPK_SIGNER_UNSAFE_PK:
        impl = std::make_unique<dpk::VulnerableOracle>(s, std::move(bytes));
        break;
      case DPK_SIGNER_STORED:
        impl = std::make_unique<dpk::StoredKeypairOracle>(dpk::StoredKeypair::from_seed(s),
                                                          std::move(bytes));
        break;
      case DPK_SIGNER_REDERIVE:
        impl = std::make_unique<dpk::RederiveOracle>(s, std::move(bytes));
        break;
      default:
        throw ArgumentError{"unknown signer kind"};
    }
    *out = new dpk_oracle{std::move(impl)};
    return DPK_OK;
  });
}

dpk_status dpk_oracle_new_exec(dpk_oracle** out, const char* command, const uint8_t* m,
                               size_t mlen) {
  return guarded([&] {
    require(out, "out is NULL");
    require(command, "command is NULL");
    const auto msg = message(m, mlen);
    *out = new dpk_oracle{std::make_unique<dpk::SubprocessOracle>(
        command, std::vector<std::uint8_t>(msg.begin(), msg.end()))};
    return DPK_OK;
  });
}

dpk_status dpk_oracle_new_callback(dpk_oracle** out, dpk_oracle_callback callback, void* user,
                                   const uint8_t* m, size_t mlen) {
  return guarded([&] {
    require(out, "out is NULL");
    require(reinterpret_cast<const void*>(callback), "callback is NULL");
    const auto msg = message(m, mlen);
    *out = new dpk_oracle{std::make_unique<CallbackOracle>(
        callback, user, std::vector<std::uint8_t>(msg.begin(), msg.end()))};
    return DPK_OK;
  });
}

dpk_status dpk_oracle_query(dpk_oracle* oracle, const uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                            uint8_t sig[DPK_SIGNATURE_BYTES]) {
  return guarded([&] {
    require(oracle, "oracle is NULL");
    require(sig, "sig is NULL");
    copy_out(sig, oracle->impl->query(point_arg(pk, "pk is NULL")).to_bytes());
    return DPK_OK;
  });
}

void dpk_oracle_free(dpk_oracle* oracle) { delete oracle; }

dpk_status dpk_attack_recover(dpk_attack_report** out, dpk_oracle* oracle,
                              const uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                              const uint8_t pk_prime[DPK_PUBLIC_KEY_BYTES]) {
  return guarded([&] {
    require(out, "out is NULL");
    require(oracle, "oracle is NULL");
    *out = nullptr;
    return store_report(out, dpk::recover_secret_scalar(*oracle->impl,
                                                        point_arg(pk, "pk is NULL"),
                                                        point_arg(pk_prime, "pk_prime is NULL")));
  });
}

dpk_status dpk_attack_run(dpk_attack_report** out, dpk_oracle* oracle, uint64_t query_seed) {
  return guarded([&] {
    require(out, "out is NULL");
    require(oracle, "oracle is NULL");
    *out = nullptr;
    return store_report(out, dpk::run_attack(*oracle->impl, query_seed));
  });
}

dpk_status dpk_attack_report_to_json(const dpk_attack_report* report, char** json) {
  return guarded([&] {
    require(report, "report is NULL");
    require(json, "json is NULL");
    const std::string text = report->report.to_json();
    auto* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *json = buf;
    return DPK_OK;
  });
}

dpk_status dpk_attack_report_from_json(dpk_attack_report** out, const char* json) {
  return guarded([&] {
    require(out, "out is NULL");
    require(json, "json is NULL");
    *out = new dpk_attack_report{dpk::AttackReport::from_json(json)};
    return DPK_OK;
  });
}

void dpk_attack_report_recovered_scalar(const dpk_attack_report* report,
                                        uint8_t out[DPK_SCALAR_BYTES]) {
  copy_out(out, report->report.recovered_s.to_bytes());
}

void dpk_attack_report_recovered_public_key(const dpk_attack_report* report,
                                            uint8_t out[DPK_PUBLIC_KEY_BYTES]) {
  copy_out(out, report->report.recovered_pk.bytes);
}

int dpk_attack_report_query_count(const dpk_attack_report* report) {
  return report->report.query_count;
}

int dpk_attack_report_succeeded(const dpk_attack_report* report) {
  return report->report.succeeded() ? 1 : 0;
}

void dpk_attack_report_free(dpk_attack_report* report) { delete report; }

void dpk_string_free(char* s) { delete[] s; }

dpk_status dpk_forge(uint8_t sig[DPK_SIGNATURE_BYTES], uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                     const uint8_t recovered_s[DPK_SCALAR_BYTES], const uint8_t* m, size_t mlen,
                     const uint64_t* nonce_seed) {
  return guarded([&] {
    require(sig, "sig is NULL");
    require(pk, "pk is NULL");
    const auto s = dpk::Scalar::from_bytes(fixed<32>(recovered_s, "recovered_s is NULL"));
    auto nonces = nonce_seed ? dpk::NonceSource::seeded(*nonce_seed) : dpk::NonceSource::random();
    const dpk::Forgery f = dpk::forge(s, message(m, mlen), nonces);
    copy_out(sig, f.sig.to_bytes());
    copy_out(pk, f.pk.bytes);
    return DPK_OK;
  });
}

dpk_status dpk_small_order_point(uint8_t out[DPK_PUBLIC_KEY_BYTES], size_t index) {
  return guarded([&] {
    require(out, "out is NULL");
    if (index >= DPK_SMALL_ORDER_COUNT) throw ArgumentError{"index out of range"};
    copy_out(out, dpk::small_order_encodings()[index].bytes);
    return DPK_OK;
  });
}

dpk_status dpk_small_order_forgery(uint8_t sig[DPK_SIGNATURE_BYTES],
                                   uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                                   const uint8_t t_point[DPK_PUBLIC_KEY_BYTES],
                                   const uint8_t s_choice[DPK_SCALAR_BYTES], const uint8_t* m,
                                   size_t mlen) {
  return guarded([&] {
    require(sig, "sig is NULL");
    require(pk, "pk is NULL");
    const auto t = dpk::EdwardsPoint::decompress(point_arg(t_point, "t_point is NULL"));
    const auto s = dpk::Scalar::from_bytes(fixed<32>(s_choice, "s_choice is NULL"));
    const dpk::Forgery f = dpk::small_order_forgery(t, s, message(m, mlen));
    copy_out(sig, f.sig.to_bytes());
    copy_out(pk, f.pk.bytes);
    return DPK_OK;
  });
}

}  // extern "C"
