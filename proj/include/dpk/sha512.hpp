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
#include <memory>
#include <span>

#include "dpk/u256.hpp"

namespace dpk {

/// Incremental SHA-512.
class Sha512 {
 public:
  Sha512();
  ~Sha512();
  Sha512(Sha512&&) noexcept;
  Sha512& operator=(Sha512&&) noexcept;

  Sha512& update(std::span<const std::uint8_t> data);
  Bytes64 finish();

  static Bytes64 digest(std::span<const std::uint8_t> data) {
    return Sha512().update(data).finish();
  }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Fills `out` from the system CSPRNG.
void random_bytes(std::span<std::uint8_t> out);

}  // namespace dpk
