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

#include "dpk/error.hpp"

namespace dpk {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NonCanonicalEncoding: return "NonCanonicalEncoding";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::InvalidLength: return "InvalidLength";
    case ErrorCode::InvalidHex: return "InvalidHex";
    case ErrorCode::MalformedPublicKey: return "MalformedPublicKey";
    case ErrorCode::CorruptKeypair: return "CorruptKeypair";
    case ErrorCode::IdenticalKeys: return "IdenticalKeys";
    case ErrorCode::OracleNotDeterministic: return "OracleNotDeterministic";
    case ErrorCode::HashCollision: return "HashCollision";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::NotSmallOrder: return "NotSmallOrder";
    case ErrorCode::OracleTransport: return "OracleTransport";
    case ErrorCode::MalformedReport: return "MalformedReport";
  }
  return "Unknown";
}

}  // namespace dpk
