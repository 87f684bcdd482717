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

#include <json.hpp>

#include "dpk/attack.hpp"
#include "dpk/error.hpp"
#include "dpk/hex.hpp"

namespace dpk {
namespace {

template <std::size_t N>
std::array<std::uint8_t, N> fixed_hex(const nlohmann::json& doc, const char* field) {
  const auto& v = doc.at(field);
  if (!v.is_string()) throw Error(ErrorCode::MalformedReport, std::string(field) + " must be a string");
  const auto bytes = from_hex(v.get<std::string>());
  if (bytes.size() != N) {
    throw Error(ErrorCode::MalformedReport,
                std::string(field) + " must be " + std::to_string(N) + " bytes");
  }
  std::array<std::uint8_t, N> out{};
  std::copy(bytes.begin(), bytes.end(), out.begin());
  return out;
}

}  // namespace

std::string AttackReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["pk"] = to_hex(pk.bytes);
  doc["pk_prime"] = to_hex(pk_prime.bytes);
  doc["sig"] = to_hex(sig.to_bytes());
  doc["sig_prime"] = to_hex(sig_prime.to_bytes());
  doc["e"] = to_hex(e.to_bytes());
  doc["e_prime"] = to_hex(e_prime.to_bytes());
  doc["recovered_s"] = to_hex(recovered_s.to_bytes());
  doc["recovered_pk"] = to_hex(recovered_pk.bytes);
  doc["query_count"] = query_count;
  return doc.dump(2);
}

AttackReport AttackReport::from_json(std::string_view json) {
  try {
    const auto doc = nlohmann::json::parse(json);
    AttackReport r;
    r.pk.bytes = fixed_hex<32>(doc, "pk");
    r.pk_prime.bytes = fixed_hex<32>(doc, "pk_prime");
    r.sig = Signature::from_bytes(fixed_hex<64>(doc, "sig"));
    r.sig_prime = Signature::from_bytes(fixed_hex<64>(doc, "sig_prime"));
    r.e = Scalar::from_bytes(fixed_hex<32>(doc, "e"));
    r.e_prime = Scalar::from_bytes(fixed_hex<32>(doc, "e_prime"));
    r.recovered_s = Scalar::from_bytes(fixed_hex<32>(doc, "recovered_s"));
    r.recovered_pk.bytes = fixed_hex<32>(doc, "recovered_pk");
    r.query_count = doc.at("query_count").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedReport, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedReport) throw;
    throw Error(ErrorCode::MalformedReport, e.what());
  }
}

}  // namespace dpk
