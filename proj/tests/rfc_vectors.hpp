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

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpk/hex.hpp"

namespace dpk::testing {

struct RfcVector {
  std::string name;
  std::vector<std::uint8_t> seed, public_key, message, signature;
};

/// Reads tests/fixtures/rfc8032_ed25519.txt (name:sk:pk:msg:sig, hex).
inline std::vector<RfcVector> load_rfc_vectors() {
  std::ifstream in(std::string(DPK_FIXTURE_DIR) + "/rfc8032_ed25519.txt");
  if (!in) throw std::runtime_error("missing RFC 8032 fixture file");
  std::vector<RfcVector> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t pos; (pos = line.find(':', start)) != std::string::npos; start = pos + 1) {
      f.push_back(line.substr(start, pos - start));
    }
    f.push_back(line.substr(start));
    if (f.size() != 5) throw std::runtime_error("bad fixture line: " + line);
    out.push_back({f[0], from_hex(f[1]), from_hex(f[2]), from_hex(f[3]), from_hex(f[4])});
  }
  return out;
}

}  // namespace dpk::testing
