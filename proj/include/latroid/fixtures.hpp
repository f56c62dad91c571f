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

// Named supports, matrices and seeded code generators shared by the tests,
// the acceptance runner and the command line tool.

#include <cstdint>
#include <random>
#include <vector>

#include "latroid/code_latroids.hpp"
#include "latroid/codes.hpp"
#include "latroid/isometries.hpp"
#include "latroid/supports.hpp"

namespace latroid {

// Z_6 as Z_2 x Z_3.
Pir z6_ring();
// Standard support on Z_6^n with coordinate value (r mod 3 != 0, r mod 2 != 0).
SupportFn z6_indicator_support(int n);
// The Lee weight table on Z_4 (not a support).
std::vector<SupportVec> lee_table_z4();
// tau(0) = 0, tau(v) = 1 otherwise, as a custom u = 1 table on amb.
SupportFn tau_support(const Ambient& amb);
// [[2, 3], [3, 2]] over Z_6.
RingMatrix z6_example_matrix();

// Codes invariant under the cyclic shift of coordinates.
std::vector<Code> cyclic_codes(const Ambient& amb);
// Span of `gens` uniformly random vectors.
Code random_code(const Ambient& amb, int gens, std::mt19937_64& rng);
// `count` pairwise distinct random codes.
std::vector<Code> distinct_random_codes(const Ambient& amb, int gens, std::size_t count,
                                        std::mt19937_64& rng);
// Random diagonal-unit times permutation matrix.
RingMatrix random_monomial(const Pir& ring, int n, std::mt19937_64& rng);
// Span of `gens` random block matrices over F_q.
MatrixCode random_matrix_code(int q, const std::vector<Block>& blocks, int gens,
                              std::mt19937_64& rng);

}  // namespace latroid
