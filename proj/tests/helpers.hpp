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

#pragma once

#include <cstdint>
#include <vector>

#include "latroid/codes.hpp"

namespace latroid::test {

inline Ambient chain_ambient(std::int64_t p, int k, int n) { return Ambient(Pir::chain(p, k), n); }

inline Pir z6() { return Pir({{2, 1}, {3, 1}}); }

inline Code span_of(const Ambient& amb, const std::vector<std::vector<std::int64_t>>& gens) {
  std::vector<Vector> vs;
  for (const auto& g : gens) vs.push_back(amb.from_integers(g));
  return Code::span(amb, vs);
}

inline VecKey key_of(const Ambient& amb, const std::vector<std::int64_t>& v) {
  return amb.pack(amb.from_integers(v));
}

}  // namespace latroid::test
