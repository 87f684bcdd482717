/*
 * Copyright 2026 The dpk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DPK_DPK_H
#define DPK_DPK_H

/*
 * C interface to the dpk Ed25519 library.
 *
 * Every fallible call returns a dpk_status; DPK_OK is zero. On failure a
 * human-readable message for the calling thread is available from
 * dpk_last_error(). Handles are opaque and owned by the caller, who releases
 * them with the matching *_free function. Byte arguments have the fixed
 * sizes given by the DPK_*_BYTES constants.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DPK_BUILDING_LIBRARY)
#    define DPK_API __declspec(dllexport)
#  else
#    define DPK_API __declspec(dllimport)
#  endif
#else
#  define DPK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define DPK_SEED_BYTES 32
#define DPK_PUBLIC_KEY_BYTES 32
#define DPK_KEYPAIR_BYTES 64
#define DPK_SIGNATURE_BYTES 64
#define DPK_SCALAR_BYTES 32
#define DPK_SMALL_ORDER_COUNT 8

typedef enum dpk_status {
  DPK_OK = 0,
  DPK_ERR_INVALID_ARGUMENT = 1,
  DPK_ERR_NON_CANONICAL = 2,
  DPK_ERR_NOT_ON_CURVE = 3,
  DPK_ERR_MALFORMED_PUBLIC_KEY = 4,
  DPK_ERR_CORRUPT_KEYPAIR = 5,
  DPK_ERR_IDENTICAL_KEYS = 6,
  DPK_ERR_ORACLE_NOT_DETERMINISTIC = 7,
  DPK_ERR_HASH_COLLISION = 8,
  DPK_ERR_ATTACK_FAILED = 9,
  DPK_ERR_ZERO_SCALAR = 10,
  DPK_ERR_NOT_SMALL_ORDER = 11,
  DPK_ERR_ORACLE_TRANSPORT = 12,
  DPK_ERR_MALFORMED_REPORT = 13,
  DPK_ERR_INTERNAL = 14
} dpk_status;

typedef enum dpk_verify_mode {
  DPK_VERIFY_COFACTORED = 0,
  DPK_VERIFY_COFACTORLESS = 1
} dpk_verify_mode;

typedef enum dpk_verdict {
  DPK_ACCEPT = 0,
  DPK_REJECT_NON_CANONICAL_R = 1,
  DPK_REJECT_NON_CANONICAL_PK = 2,
  DPK_REJECT_NON_CANONICAL_S = 3,
  DPK_REJECT_NOT_ON_CURVE = 4,
  DPK_REJECT_SMALL_ORDER_PK = 5,
  DPK_REJECT_EQUATION_FAILED = 6
} dpk_verdict;

/* Which signing API backs an in-process oracle. */
typedef enum dpk_signer_kind {
  DPK_SIGNER_UNSAFE_PK = 0,
  DPK_SIGNER_STORED = 1,
  DPK_SIGNER_REDERIVE = 2
} dpk_signer_kind;

typedef struct dpk_keypair dpk_keypair;
typedef struct dpk_oracle dpk_oracle;
typedef struct dpk_attack_report dpk_attack_report;

DPK_API const char* dpk_status_name(dpk_status status);
DPK_API const char* dpk_verdict_name(dpk_verdict verdict);
DPK_API const char* dpk_last_error(void);

/* ---- keys ---------------------------------------------------------- */

DPK_API dpk_status dpk_keypair_generate(dpk_keypair** out);
DPK_API dpk_status dpk_keypair_from_seed(dpk_keypair** out, const uint8_t seed[DPK_SEED_BYTES]);
/* Loads seed || pk and fails with DPK_ERR_CORRUPT_KEYPAIR on mismatch. */
DPK_API dpk_status dpk_keypair_load(dpk_keypair** out, const uint8_t bytes[DPK_KEYPAIR_BYTES]);
DPK_API void dpk_keypair_free(dpk_keypair* kp);
DPK_API void dpk_keypair_seed(const dpk_keypair* kp, uint8_t out[DPK_SEED_BYTES]);
DPK_API void dpk_keypair_public_key(const dpk_keypair* kp, uint8_t out[DPK_PUBLIC_KEY_BYTES]);
DPK_API void dpk_keypair_bytes(const dpk_keypair* kp, uint8_t out[DPK_KEYPAIR_BYTES]);

DPK_API dpk_status dpk_derive_public_key(uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                                         const uint8_t seed[DPK_SEED_BYTES]);

/* ---- signing ------------------------------------------------------- */

/*
 * UNSAFE. Separate public and private key arguments. The public key is only
 * checked for being a canonical curve point, never against the seed. Anyone
 * able to choose public_key for a fixed message can recover the secret
 * scalar with two calls. Kept for interoperability and demonstration.
 */
DPK_API dpk_status dpk_sign_unsafe(uint8_t sig[DPK_SIGNATURE_BYTES], const uint8_t* m,
                                   size_t mlen, const uint8_t public_key[DPK_PUBLIC_KEY_BYTES],
                                   const uint8_t seed[DPK_SEED_BYTES]);
DPK_API dpk_status dpk_sign_stored(uint8_t sig[DPK_SIGNATURE_BYTES], const uint8_t* m,
                                   size_t mlen, const dpk_keypair* kp);
DPK_API dpk_status dpk_sign_rederive(uint8_t sig[DPK_SIGNATURE_BYTES], const uint8_t* m,
                                     size_t mlen, const uint8_t seed[DPK_SEED_BYTES]);

/* Returns DPK_OK whenever the inputs could be examined; the outcome is in *verdict. */
DPK_API dpk_status dpk_verify(dpk_verdict* verdict, const uint8_t* m, size_t mlen,
                              const uint8_t sig[DPK_SIGNATURE_BYTES],
                              const uint8_t public_key[DPK_PUBLIC_KEY_BYTES],
                              dpk_verify_mode mode, int reject_small_order);

/* ---- oracles ------------------------------------------------------- */

/* Return DPK_OK and fill sig_out, or any error status. */
typedef dpk_status (*dpk_oracle_callback)(void* user, const uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                                          uint8_t sig_out[DPK_SIGNATURE_BYTES]);

DPK_API dpk_status dpk_oracle_new_inproc(dpk_oracle** out, dpk_signer_kind kind,
                                         const uint8_t seed[DPK_SEED_BYTES], const uint8_t* m,
                                         size_t mlen);
/* command runs under /bin/sh once per query: pk hex on stdin, signature hex on stdout. */
DPK_API dpk_status dpk_oracle_new_exec(dpk_oracle** out, const char* command, const uint8_t* m,
                                       size_t mlen);
DPK_API dpk_status dpk_oracle_new_callback(dpk_oracle** out, dpk_oracle_callback callback,
                                           void* user, const uint8_t* m, size_t mlen);
DPK_API dpk_status dpk_oracle_query(dpk_oracle* oracle, const uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                                    uint8_t sig[DPK_SIGNATURE_BYTES]);
DPK_API void dpk_oracle_free(dpk_oracle* oracle);

/* ---- attack -------------------------------------------------------- */

/*
 * Both functions store a report in *out when the oracle answered. If the
 * oracle ignores the queried key the report holds a zero scalar and the
 * status is DPK_ERR_ATTACK_FAILED; the report must still be freed.
 */
DPK_API dpk_status dpk_attack_recover(dpk_attack_report** out, dpk_oracle* oracle,
                                      const uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                                      const uint8_t pk_prime[DPK_PUBLIC_KEY_BYTES]);
DPK_API dpk_status dpk_attack_run(dpk_attack_report** out, dpk_oracle* oracle,
                                  uint64_t query_seed);

DPK_API dpk_status dpk_attack_report_to_json(const dpk_attack_report* report, char** json);
DPK_API dpk_status dpk_attack_report_from_json(dpk_attack_report** out, const char* json);
DPK_API void dpk_attack_report_recovered_scalar(const dpk_attack_report* report,
                                                uint8_t out[DPK_SCALAR_BYTES]);
DPK_API void dpk_attack_report_recovered_public_key(const dpk_attack_report* report,
                                                    uint8_t out[DPK_PUBLIC_KEY_BYTES]);
DPK_API int dpk_attack_report_query_count(const dpk_attack_report* report);
DPK_API int dpk_attack_report_succeeded(const dpk_attack_report* report);
DPK_API void dpk_attack_report_free(dpk_attack_report* report);
DPK_API void dpk_string_free(char* s);

/* nonce_seed == NULL draws the nonce from the system RNG. */
DPK_API dpk_status dpk_forge(uint8_t sig[DPK_SIGNATURE_BYTES], uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                             const uint8_t recovered_s[DPK_SCALAR_BYTES], const uint8_t* m,
                             size_t mlen, const uint64_t* nonce_seed);

/* index in [0, DPK_SMALL_ORDER_COUNT), sorted by encoding. */
DPK_API dpk_status dpk_small_order_point(uint8_t out[DPK_PUBLIC_KEY_BYTES], size_t index);
DPK_API dpk_status dpk_small_order_forgery(uint8_t sig[DPK_SIGNATURE_BYTES],
                                           uint8_t pk[DPK_PUBLIC_KEY_BYTES],
                                           const uint8_t t_point[DPK_PUBLIC_KEY_BYTES],
                                           const uint8_t s_choice[DPK_SCALAR_BYTES],
                                           const uint8_t* m, size_t mlen);

#ifdef __cplusplus
}
#endif

#endif /* DPK_DPK_H */
