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

// Exercises the shared library through dpk.h only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdlib>
#include <cstring>
#include <string>

#include "dpk/dpk.h"

namespace {

using B32 = std::array<uint8_t, 32>;
using B64 = std::array<uint8_t, 64>;

template <std::size_t N>
std::array<uint8_t, N> unhex(const char* s) {
  // Runs during static init, so no doctest assertions here.
  if (std::strlen(s) != 2 * N) std::abort();
  std::array<uint8_t, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = static_cast<uint8_t>(std::stoi(std::string(s + 2 * i, 2), nullptr, 16));
  return out;
}

const uint8_t kMsg[] = {'h', 'e', 'l', 'l', 'o'};

// RFC 8032 TEST 1.
const B32 kSeed = unhex<32>("9d61b19deffd5a60ba844af492ec2cc44449c5697b326919703bac031cae7f60");
const B32 kPk = unhex<32>("d75a980182b10ab7d54bfed3c964073a0ee172f3daa62325af021a68f707511a");
const B64 kSig = unhex<64>(
    "e5564300c360ac729086e2cc806e828a84877f1eb8e5d974d873e065224901555fb8821590a33bacc61e39701cf9b46b"
    "d25bf5f0595bbe24655141438e7a100b");

struct Callback {
  B32 seed;
  int calls = 0;
};

dpk_status sign_cb(void* user, const uint8_t pk[32], uint8_t sig[64]) {
  auto* cb = static_cast<Callback*>(user);
  ++cb->calls;
  return dpk_sign_unsafe(sig, kMsg, sizeof kMsg, pk, cb->seed.data());
}

dpk_status failing_cb(void*, const uint8_t*, uint8_t*) { return DPK_ERR_ORACLE_TRANSPORT; }

}  // namespace

TEST_CASE("RFC 8032 test 1 through the C API") {
  B32 pk{};
  REQUIRE(dpk_derive_public_key(pk.data(), kSeed.data()) == DPK_OK);
  CHECK(pk == kPk);

  B64 sig{};
  REQUIRE(dpk_sign_rederive(sig.data(), nullptr, 0, kSeed.data()) == DPK_OK);
  CHECK(sig == kSig);
  REQUIRE(dpk_sign_unsafe(sig.data(), nullptr, 0, kPk.data(), kSeed.data()) == DPK_OK);
  CHECK(sig == kSig);

  dpk_keypair* kp = nullptr;
  REQUIRE(dpk_keypair_from_seed(&kp, kSeed.data()) == DPK_OK);
  REQUIRE(dpk_sign_stored(sig.data(), nullptr, 0, kp) == DPK_OK);
  CHECK(sig == kSig);
  B64 bytes{};
  dpk_keypair_bytes(kp, bytes.data());
  CHECK(std::equal(kSeed.begin(), kSeed.end(), bytes.begin()));
  CHECK(std::equal(kPk.begin(), kPk.end(), bytes.begin() + 32));
  dpk_keypair_free(kp);

  dpk_verdict v = DPK_REJECT_EQUATION_FAILED;
  REQUIRE(dpk_verify(&v, nullptr, 0, kSig.data(), kPk.data(), DPK_VERIFY_COFACTORED, 1) == DPK_OK);
  CHECK(v == DPK_ACCEPT);
  REQUIRE(dpk_verify(&v, kMsg, sizeof kMsg, kSig.data(), kPk.data(), DPK_VERIFY_COFACTORLESS, 1) == DPK_OK);
  CHECK(v == DPK_REJECT_EQUATION_FAILED);
  CHECK(std::string(dpk_verdict_name(v)) == "EquationFailed");
}

TEST_CASE("keypair load detects a mismatched public key") {
  dpk_keypair* kp = nullptr;
  REQUIRE(dpk_keypair_generate(&kp) == DPK_OK);
  B64 bytes{};
  dpk_keypair_bytes(kp, bytes.data());
  dpk_keypair_free(kp);
  bytes[63] ^= 0x01;
  kp = nullptr;
  CHECK(dpk_keypair_load(&kp, bytes.data()) == DPK_ERR_CORRUPT_KEYPAIR);
  CHECK(kp == nullptr);
  CHECK(std::strlen(dpk_last_error()) > 0);
  CHECK(std::string(dpk_status_name(DPK_ERR_CORRUPT_KEYPAIR)) == "CorruptKeypair");
}

TEST_CASE("argument checks") {
  B64 sig{};
  CHECK(dpk_sign_rederive(nullptr, kMsg, 1, kSeed.data()) == DPK_ERR_INVALID_ARGUMENT);
  CHECK(dpk_sign_rederive(sig.data(), nullptr, 3, kSeed.data()) == DPK_ERR_INVALID_ARGUMENT);
  B32 off{};
  off[0] = 2;
  CHECK(dpk_sign_unsafe(sig.data(), kMsg, sizeof kMsg, off.data(), kSeed.data()) ==
        DPK_ERR_MALFORMED_PUBLIC_KEY);
  B32 out{};
  CHECK(dpk_small_order_point(out.data(), DPK_SMALL_ORDER_COUNT) == DPK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("attack through a callback oracle, then forge") {
  Callback cb{kSeed};
  dpk_oracle* oracle = nullptr;
  REQUIRE(dpk_oracle_new_callback(&oracle, sign_cb, &cb, kMsg, sizeof kMsg) == DPK_OK);
  dpk_attack_report* report = nullptr;
  REQUIRE(dpk_attack_run(&report, oracle, 1) == DPK_OK);
  CHECK(cb.calls == 2);
  CHECK(dpk_attack_report_succeeded(report) == 1);
  CHECK(dpk_attack_report_query_count(report) == 2);
  B32 rpk{};
  dpk_attack_report_recovered_public_key(report, rpk.data());
  CHECK(rpk == kPk);

  char* json = nullptr;
  REQUIRE(dpk_attack_report_to_json(report, &json) == DPK_OK);
  dpk_attack_report* back = nullptr;
  REQUIRE(dpk_attack_report_from_json(&back, json) == DPK_OK);
  B32 s1{}, s2{};
  dpk_attack_report_recovered_scalar(report, s1.data());
  dpk_attack_report_recovered_scalar(back, s2.data());
  CHECK(s1 == s2);
  dpk_string_free(json);
  dpk_attack_report_free(back);

  const uint8_t other[] = {'f', 'o', 'r', 'g', 'e', 'd'};
  const uint64_t nonce_seed = 77;
  B64 sig{};
  B32 pk{};
  REQUIRE(dpk_forge(sig.data(), pk.data(), s1.data(), other, sizeof other, &nonce_seed) == DPK_OK);
  CHECK(pk == kPk);
  dpk_verdict v{};
  REQUIRE(dpk_verify(&v, other, sizeof other, sig.data(), pk.data(), DPK_VERIFY_COFACTORED, 1) == DPK_OK);
  CHECK(v == DPK_ACCEPT);
  REQUIRE(dpk_forge(sig.data(), pk.data(), s1.data(), other, sizeof other, nullptr) == DPK_OK);
  REQUIRE(dpk_verify(&v, other, sizeof other, sig.data(), pk.data(), DPK_VERIFY_COFACTORLESS, 1) == DPK_OK);
  CHECK(v == DPK_ACCEPT);

  dpk_attack_report_free(report);
  dpk_oracle_free(oracle);
}

TEST_CASE("hardened in-process oracles make the attack fail") {
  for (dpk_signer_kind kind : {DPK_SIGNER_STORED, DPK_SIGNER_REDERIVE}) {
    dpk_oracle* oracle = nullptr;
    REQUIRE(dpk_oracle_new_inproc(&oracle, kind, kSeed.data(), kMsg, sizeof kMsg) == DPK_OK);
    dpk_attack_report* report = nullptr;
    CHECK(dpk_attack_run(&report, oracle, 1) == DPK_ERR_ATTACK_FAILED);
    REQUIRE(report != nullptr);
    CHECK(dpk_attack_report_succeeded(report) == 0);
    B32 s{}, pk{};
    dpk_attack_report_recovered_scalar(report, s.data());
    CHECK(s == B32{});
    B64 sig{};
    CHECK(dpk_forge(sig.data(), pk.data(), s.data(), kMsg, sizeof kMsg, nullptr) == DPK_ERR_ZERO_SCALAR);
    dpk_attack_report_free(report);
    dpk_oracle_free(oracle);
  }
}

TEST_CASE("vulnerable in-process oracle and explicit query keys") {
  dpk_oracle* oracle = nullptr;
  REQUIRE(dpk_oracle_new_inproc(&oracle, DPK_SIGNER_UNSAFE_PK, kSeed.data(), kMsg, sizeof kMsg) == DPK_OK);
  B32 other{};
  uint8_t seed2[32] = {1};
  REQUIRE(dpk_derive_public_key(other.data(), seed2) == DPK_OK);
  dpk_attack_report* report = nullptr;
  CHECK(dpk_attack_recover(&report, oracle, kPk.data(), kPk.data()) == DPK_ERR_IDENTICAL_KEYS);
  REQUIRE(dpk_attack_recover(&report, oracle, kPk.data(), other.data()) == DPK_OK);
  B32 rpk{};
  dpk_attack_report_recovered_public_key(report, rpk.data());
  CHECK(rpk == kPk);
  dpk_attack_report_free(report);

  B64 sig{};
  REQUIRE(dpk_oracle_query(oracle, other.data(), sig.data()) == DPK_OK);
  dpk_oracle_free(oracle);
}

TEST_CASE("callback errors propagate") {
  dpk_oracle* oracle = nullptr;
  REQUIRE(dpk_oracle_new_callback(&oracle, failing_cb, nullptr, kMsg, sizeof kMsg) == DPK_OK);
  dpk_attack_report* report = nullptr;
  CHECK(dpk_attack_run(&report, oracle, 1) == DPK_ERR_ORACLE_TRANSPORT);
  CHECK(report == nullptr);
  dpk_oracle_free(oracle);
}

TEST_CASE("exec oracle") {
  dpk_oracle* oracle = nullptr;
  REQUIRE(dpk_oracle_new_exec(&oracle, "exit 1", kMsg, sizeof kMsg) == DPK_OK);
  B64 sig{};
  CHECK(dpk_oracle_query(oracle, kPk.data(), sig.data()) == DPK_ERR_ORACLE_TRANSPORT);
  dpk_oracle_free(oracle);
}

TEST_CASE("small-order table and forgery") {
  const uint8_t s_choice[32] = {9};
  for (size_t i = 0; i < DPK_SMALL_ORDER_COUNT; ++i) {
    B32 t{}, pk{};
    B64 sig{};
    REQUIRE(dpk_small_order_point(t.data(), i) == DPK_OK);
    REQUIRE(dpk_small_order_forgery(sig.data(), pk.data(), t.data(), s_choice, kMsg, sizeof kMsg) == DPK_OK);
    CHECK(pk == t);
    dpk_verdict v{};
    REQUIRE(dpk_verify(&v, kMsg, sizeof kMsg, sig.data(), pk.data(), DPK_VERIFY_COFACTORED, 0) == DPK_OK);
    CHECK(v == DPK_ACCEPT);
    REQUIRE(dpk_verify(&v, kMsg, sizeof kMsg, sig.data(), pk.data(), DPK_VERIFY_COFACTORED, 1) == DPK_OK);
    CHECK(v == DPK_REJECT_SMALL_ORDER_PK);
  }
  B64 sig{};
  B32 pk{};
  CHECK(dpk_small_order_forgery(sig.data(), pk.data(), kPk.data(), s_choice, kMsg, sizeof kMsg) ==
        DPK_ERR_NOT_SMALL_ORDER);
}
