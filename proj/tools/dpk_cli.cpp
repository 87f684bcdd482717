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

// dpk: command-line front end over the C API.
//
//   dpk keygen --seed-out S --keypair-out K --pk-out P
//   dpk sign   --key K --message M [--mode stored|rederive|unsafe-pk] [--pk P] [--out F]
//   dpk verify --pk P --message M --sig F [--mode cofactored|cofactorless] [--allow-small-order]
//   dpk attack --oracle inproc:KEY|exec:CMD --message M --report R [--signer ...]
//   dpk forge  --report R --message M [--nonce-seed N] [--sig-out F] [--pk-out F]
//
// Keys and signatures are hex unless --raw is given. Messages are raw bytes.
//
// Exit codes: 0 ok/accept, 1 reject or attack failed, 2 malformed input,
// 3 oracle transport error, 4 corrupt keypair, 5 oracle not deterministic.

#include <dpk/dpk.h>

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

enum Exit : int {
  kOk = 0,
  kRejected = 1,
  kMalformed = 2,
  kTransport = 3,
  kCorruptKeypair = 4,
  kNotDeterministic = 5,
};

/// Carries an exit code up to main().
struct CliFailure : std::runtime_error {
  CliFailure(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
  int exit_code;
};

int exit_code_for(dpk_status st) {
  switch (st) {
    case DPK_OK: return kOk;
    case DPK_ERR_ATTACK_FAILED:
    case DPK_ERR_HASH_COLLISION: return kRejected;
    case DPK_ERR_ORACLE_TRANSPORT: return kTransport;
    case DPK_ERR_CORRUPT_KEYPAIR: return kCorruptKeypair;
    case DPK_ERR_ORACLE_NOT_DETERMINISTIC: return kNotDeterministic;
    default: return kMalformed;
  }
}

void check(dpk_status st) {
  if (st != DPK_OK) {
    throw CliFailure(exit_code_for(st), std::string(dpk_status_name(st)) + ": " + dpk_last_error());
  }
}

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(const std::uint8_t* p, std::size_t n) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    s.push_back(kDigits[p[i] >> 4]);
    s.push_back(kDigits[p[i] & 0xf]);
  }
  return s;
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure(kMalformed, "cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size()))) {
    throw CliFailure(kMalformed, "cannot write " + path);
  }
}

std::optional<Bytes> parse_hex(const Bytes& text) {
  std::string s(text.begin(), text.end());
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.size() % 2 != 0) return std::nullopt;
  Bytes out(s.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    unsigned v = 0;
    for (char c : {s[2 * i], s[2 * i + 1]}) {
      v <<= 4;
      if (c >= '0' && c <= '9') v |= static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f') v |= static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') v |= static_cast<unsigned>(c - 'A' + 10);
      else return std::nullopt;
    }
    out[i] = static_cast<std::uint8_t>(v);
  }
  return out;
}

/// Reads a key-ish file whose decoded length must be one of `sizes`.
Bytes read_blob(const std::string& path, bool raw, std::initializer_list<std::size_t> sizes,
                const char* what) {
  const Bytes contents = read_file(path);
  std::optional<Bytes> decoded = raw ? std::optional<Bytes>(contents) : parse_hex(contents);
  if (!decoded || std::find(sizes.begin(), sizes.end(), decoded->size()) == sizes.end()) {
    throw CliFailure(kMalformed, std::string(what) + " in " + path + " has the wrong size or encoding");
  }
  return *decoded;
}

std::string encode(const std::uint8_t* p, std::size_t n, bool raw) {
  if (raw) return std::string(reinterpret_cast<const char*>(p), n);
  return to_hex(p, n) + "\n";
}

template <std::size_t N>
std::string encode(const std::array<std::uint8_t, N>& a, bool raw) {
  return encode(a.data(), N, raw);
}

void emit(const std::optional<std::string>& path, const std::string& data) {
  if (path) {
    write_file(*path, data);
  } else {
    std::cout << data << std::flush;
  }
}

struct KeyOptions {
  std::string seed_out, keypair_out, pk_out;
};

struct SignOptions {
  std::string key, message, mode = "stored";
  std::optional<std::string> pk, out;
};

struct VerifyOptions {
  std::string pk, message, sig, mode = "cofactored";
  bool allow_small_order = false;
};

struct AttackOptions {
  std::string oracle, message, report, signer = "unsafe-pk";
  std::uint64_t query_seed = 1;
};

struct ForgeOptions {
  std::string report, message;
  std::optional<std::uint64_t> nonce_seed;
  std::optional<std::string> sig_out, pk_out;
};

int cmd_keygen(const KeyOptions& o, bool raw) {
  dpk_keypair* kp = nullptr;
  check(dpk_keypair_generate(&kp));
  std::unique_ptr<dpk_keypair, decltype(&dpk_keypair_free)> guard(kp, &dpk_keypair_free);
  std::array<std::uint8_t, DPK_SEED_BYTES> seed{};
  std::array<std::uint8_t, DPK_KEYPAIR_BYTES> pair{};
  std::array<std::uint8_t, DPK_PUBLIC_KEY_BYTES> pk{};
  dpk_keypair_seed(kp, seed.data());
  dpk_keypair_bytes(kp, pair.data());
  dpk_keypair_public_key(kp, pk.data());
  write_file(o.seed_out, encode(seed, raw));
  write_file(o.keypair_out, encode(pair, raw));
  write_file(o.pk_out, encode(pk, raw));
  return kOk;
}

int cmd_sign(const SignOptions& o, bool raw) {
  const Bytes msg = read_file(o.message);
  std::array<std::uint8_t, DPK_SIGNATURE_BYTES> sig{};
  if (o.mode == "stored") {
    if (o.pk) throw CliFailure(kMalformed, "--pk is only valid with --mode unsafe-pk");
    const Bytes key = read_blob(o.key, raw, {DPK_KEYPAIR_BYTES}, "stored keypair");
    dpk_keypair* kp = nullptr;
    check(dpk_keypair_load(&kp, key.data()));
    std::unique_ptr<dpk_keypair, decltype(&dpk_keypair_free)> guard(kp, &dpk_keypair_free);
    check(dpk_sign_stored(sig.data(), msg.data(), msg.size(), kp));
  } else if (o.mode == "rederive") {
    if (o.pk) throw CliFailure(kMalformed, "--pk is only valid with --mode unsafe-pk");
    const Bytes key = read_blob(o.key, raw, {DPK_SEED_BYTES, DPK_KEYPAIR_BYTES}, "seed");
    check(dpk_sign_rederive(sig.data(), msg.data(), msg.size(), key.data()));
  } else {
    if (!o.pk) throw CliFailure(kMalformed, "--mode unsafe-pk requires --pk");
    const Bytes key = read_blob(o.key, raw, {DPK_SEED_BYTES, DPK_KEYPAIR_BYTES}, "seed");
    const Bytes pk = read_blob(*o.pk, raw, {DPK_PUBLIC_KEY_BYTES}, "public key");
    check(dpk_sign_unsafe(sig.data(), msg.data(), msg.size(), pk.data(), key.data()));
  }
  emit(o.out, encode(sig, raw));
  return kOk;
}

int cmd_verify(const VerifyOptions& o, bool raw) {
  const Bytes pk = read_blob(o.pk, raw, {DPK_PUBLIC_KEY_BYTES}, "public key");
  const Bytes sig = read_blob(o.sig, raw, {DPK_SIGNATURE_BYTES}, "signature");
  const Bytes msg = read_file(o.message);
  dpk_verdict verdict = DPK_ACCEPT;
  check(dpk_verify(&verdict, msg.data(), msg.size(), sig.data(), pk.data(),
                   o.mode == "cofactorless" ? DPK_VERIFY_COFACTORLESS : DPK_VERIFY_COFACTORED,
                   o.allow_small_order ? 0 : 1));
  if (verdict == DPK_ACCEPT) {
    std::cout << "ACCEPT\n";
    return kOk;
  }
  std::cout << "REJECT " << dpk_verdict_name(verdict) << "\n";
  return kRejected;
}

int cmd_attack(const AttackOptions& o, bool raw) {
  const Bytes msg = read_file(o.message);
  dpk_oracle* oracle = nullptr;
  std::optional<std::array<std::uint8_t, DPK_PUBLIC_KEY_BYTES>> victim_pk;
  if (o.oracle.rfind("inproc:", 0) == 0) {
    const Bytes key = read_blob(o.oracle.substr(7), raw, {DPK_SEED_BYTES, DPK_KEYPAIR_BYTES}, "seed");
    const dpk_signer_kind kind = o.signer == "stored"     ? DPK_SIGNER_STORED
                                 : o.signer == "rederive" ? DPK_SIGNER_REDERIVE
                                                          : DPK_SIGNER_UNSAFE_PK;
    check(dpk_oracle_new_inproc(&oracle, kind, key.data(), msg.data(), msg.size()));
    victim_pk.emplace();
    check(dpk_derive_public_key(victim_pk->data(), key.data()));
  } else if (o.oracle.rfind("exec:", 0) == 0) {
    check(dpk_oracle_new_exec(&oracle, o.oracle.substr(5).c_str(), msg.data(), msg.size()));
  } else {
    throw CliFailure(kMalformed, "--oracle must be inproc:PATH or exec:COMMAND");
  }
  std::unique_ptr<dpk_oracle, decltype(&dpk_oracle_free)> oracle_guard(oracle, &dpk_oracle_free);

  dpk_attack_report* report = nullptr;
  const dpk_status st = dpk_attack_run(&report, oracle, o.query_seed);
  std::unique_ptr<dpk_attack_report, decltype(&dpk_attack_report_free)> report_guard(
      report, &dpk_attack_report_free);
  const std::string failure = st == DPK_OK ? "" : dpk_last_error();
  if (report != nullptr) {
    char* json = nullptr;
    check(dpk_attack_report_to_json(report, &json));
    std::unique_ptr<char, decltype(&dpk_string_free)> json_guard(json, &dpk_string_free);
    write_file(o.report, std::string(json) + "\n");
  }
  if (st != DPK_OK) throw CliFailure(exit_code_for(st), std::string(dpk_status_name(st)) + ": " + failure);

  std::array<std::uint8_t, DPK_SCALAR_BYTES> s{};
  std::array<std::uint8_t, DPK_PUBLIC_KEY_BYTES> recovered_pk{};
  dpk_attack_report_recovered_scalar(report, s.data());
  dpk_attack_report_recovered_public_key(report, recovered_pk.data());

  // Self-check: forge on a message the oracle never signed.
  Bytes fresh = msg;
  static constexpr std::string_view kSuffix = "|dpk forged self-check";
  fresh.insert(fresh.end(), kSuffix.begin(), kSuffix.end());
  std::array<std::uint8_t, DPK_SIGNATURE_BYTES> sig{};
  std::array<std::uint8_t, DPK_PUBLIC_KEY_BYTES> forged_pk{};
  check(dpk_forge(sig.data(), forged_pk.data(), s.data(), fresh.data(), fresh.size(), &o.query_seed));
  dpk_verdict verdict = DPK_ACCEPT;
  check(dpk_verify(&verdict, fresh.data(), fresh.size(), sig.data(), forged_pk.data(),
                   DPK_VERIFY_COFACTORED, 1));

  std::cout << "queries: " << dpk_attack_report_query_count(report) << "\n"
            << "recovered_pk: " << to_hex(recovered_pk.data(), recovered_pk.size()) << "\n";
  if (victim_pk) {
    std::cout << "matches victim key: " << (*victim_pk == recovered_pk ? "yes" : "no") << "\n";
  }
  std::cout << "forgery: " << (verdict == DPK_ACCEPT ? "ACCEPT" : dpk_verdict_name(verdict)) << "\n";
  return verdict == DPK_ACCEPT ? kOk : kRejected;
}

int cmd_forge(const ForgeOptions& o, bool raw) {
  const Bytes json = read_file(o.report);
  const Bytes msg = read_file(o.message);
  dpk_attack_report* report = nullptr;
  check(dpk_attack_report_from_json(&report, std::string(json.begin(), json.end()).c_str()));
  std::unique_ptr<dpk_attack_report, decltype(&dpk_attack_report_free)> guard(
      report, &dpk_attack_report_free);

  std::array<std::uint8_t, DPK_SCALAR_BYTES> s{};
  dpk_attack_report_recovered_scalar(report, s.data());
  std::array<std::uint8_t, DPK_SIGNATURE_BYTES> sig{};
  std::array<std::uint8_t, DPK_PUBLIC_KEY_BYTES> pk{};
  check(dpk_forge(sig.data(), pk.data(), s.data(), msg.data(), msg.size(),
                  o.nonce_seed ? &*o.nonce_seed : nullptr));

  if (o.sig_out) write_file(*o.sig_out, encode(sig, raw));
  if (o.pk_out) write_file(*o.pk_out, encode(pk, raw));
  std::cout << "{\"sig\": \"" << to_hex(sig.data(), sig.size()) << "\", \"pk\": \""
            << to_hex(pk.data(), pk.size()) << "\"}\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ed25519 signing, verification and double-public-key oracle attack"};
  app.require_subcommand(1);
  bool raw = false;
  app.add_flag("--raw", raw, "Read and write keys/signatures as raw bytes instead of hex");

  KeyOptions key_opts;
  auto* keygen = app.add_subcommand("keygen", "Generate a seed, stored keypair and public key");
  keygen->add_option("--seed-out", key_opts.seed_out, "32-byte seed output")->required();
  keygen->add_option("--keypair-out", key_opts.keypair_out, "64-byte seed||pk output")->required();
  keygen->add_option("--pk-out", key_opts.pk_out, "32-byte public key output")->required();

  SignOptions sign_opts;
  auto* sign = app.add_subcommand("sign", "Sign a message");
  sign->add_option("--key", sign_opts.key, "Stored keypair (stored) or seed")->required();
  sign->add_option("--message,-m", sign_opts.message, "Message file")->required();
  sign->add_option("--mode", sign_opts.mode, "Signing API")
      ->check(CLI::IsMember({"stored", "rederive", "unsafe-pk"}));
  sign->add_option("--pk", sign_opts.pk, "Caller-supplied public key (unsafe-pk only)");
  sign->add_option("--out,-o", sign_opts.out, "Signature output (default stdout)");

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Verify a signature");
  verify->add_option("--pk", verify_opts.pk, "Public key")->required();
  verify->add_option("--message,-m", verify_opts.message, "Message file")->required();
  verify->add_option("--sig", verify_opts.sig, "Signature")->required();
  verify->add_option("--mode", verify_opts.mode, "Verification equation")
      ->check(CLI::IsMember({"cofactored", "cofactorless"}));
  verify->add_flag("--allow-small-order", verify_opts.allow_small_order,
                   "Do not reject small-order public keys");

  AttackOptions attack_opts;
  auto* attack = app.add_subcommand("attack", "Recover the secret scalar from a signing oracle");
  attack->add_option("--oracle", attack_opts.oracle, "inproc:KEYFILE or exec:COMMAND")->required();
  attack->add_option("--message,-m", attack_opts.message, "The oracle's fixed message")->required();
  attack->add_option("--report", attack_opts.report, "AttackReport JSON output")->required();
  attack->add_option("--signer", attack_opts.signer, "Signing API behind an inproc oracle")
      ->check(CLI::IsMember({"unsafe-pk", "stored", "rederive"}));
  attack->add_option("--query-seed", attack_opts.query_seed, "Seed for the query public keys");

  ForgeOptions forge_opts;
  auto* forge = app.add_subcommand("forge", "Sign a message with a recovered scalar");
  forge->add_option("--report", forge_opts.report, "AttackReport JSON")->required();
  forge->add_option("--message,-m", forge_opts.message, "Message file")->required();
  forge->add_option("--nonce-seed", forge_opts.nonce_seed, "Deterministic nonce seed");
  forge->add_option("--sig-out", forge_opts.sig_out, "Signature output");
  forge->add_option("--pk-out", forge_opts.pk_out, "Public key output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    if (*keygen) return cmd_keygen(key_opts, raw);
    if (*sign) return cmd_sign(sign_opts, raw);
    if (*verify) return cmd_verify(verify_opts, raw);
    if (*attack) return cmd_attack(attack_opts, raw);
    if (*forge) return cmd_forge(forge_opts, raw);
  } catch (const CliFailure& e) {
    std::cerr << "dpk: " << e.what() << "\n";
    return e.exit_code;
  }
  return kMalformed;
}
