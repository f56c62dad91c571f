// Copyright 2026 The Latroid Authors
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

#include "latroid/errors.hpp"

namespace latroid {

Caps& caps() {
  static Caps instance;
  return instance;
}

void require_cap(std::uint64_t value, std::uint64_t limit, const std::string& what) {
  if (value > limit) {
    throw CapExceeded(what + ": " + std::to_string(value) + " exceeds cap " +
                      std::to_string(limit));
  }
}

}  // namespace latroid
