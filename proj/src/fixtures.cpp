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


#include "latroid/fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace latroid {

Pir z6_ring() { return Pir({{2, 1}, {3, 1}}); }

SupportFn z6_indicator_support(int n) {
  const Pir r = z6_ring();
  std::vector<SupportVec> table(6);
  for (std::int64_t x = 0; x < 6; ++x) table[r.from_integer(x).index] = {x % 3 != 0, x % 2 != 0};
  return SupportFn::standard(Ambient(r, n), table);
}

std::vector<SupportVec> lee_table_z4() { return {{0}, {1}, {2}, {1}}; }

SupportFn tau_support(const Ambient& amb) {
  std::vector<SupportVec> t(amb.cardinality(), SupportVec{1});
  t[0] = {0};
  return SupportFn::from_table(amb, 1, t);
}

RingMatrix z6_example_matrix() { return RingMatrix::from_integers(z6_ring(), {{2, 3}, {3, 2}}); }

std::vector<Code> cyclic_codes(const Ambient& amb) {
  std::vector<int> shift(static_cast<std::size_t>(amb.n()));
  for (int i = 0; i < amb.n(); ++i) shift[i] = (i + amb.n() - 1) % amb.n();
  const RingMatrix p = RingMatrix::permutation(amb.ring(), shift);
  std::vector<Code> out;
  for (const Code& c : enumerate_submodules(Code::whole(amb))) {
    if (c.mapped(p.entries()) == c) out.push_back(c);
  }
  return out;
}

Code random_code(const Ambient& amb, int gens, std::mt19937_64& rng) {
  std::vector<Vector> vs;
  for (int g = 0; g < gens; ++g) {
    Vector v;
    for (int i = 0; i < amb.n(); ++i) {
      v.push_back(amb.ring().element(static_cast<std::uint32_t>(rng() % amb.ring().size())));
    }
    vs.push_back(v);
  }
  return Code::span(amb, vs);
}

std::vector<Code> distinct_random_codes(const Ambient& amb, int gens, std::size_t count,
                                        std::mt19937_64& rng) {
  std::vector<Code> out;
  for (int tries = 0; out.size() < count && tries < 1000; ++tries) {
    Code c = random_code(amb, gens, rng);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

RingMatrix random_monomial(const Pir& ring, int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<RingElement> diag;
  while (static_cast<int>(diag.size()) < n) {
    const RingElement x = ring.element(static_cast<std::uint32_t>(rng() % ring.size()));
    if (ring.is_unit(x)) diag.push_back(x);
  }
  return RingMatrix::diagonal(ring, diag) * RingMatrix::permutation(ring, perm);
}

MatrixCode random_matrix_code(int q, const std::vector<Block>& blocks, int gens,
                              std::mt19937_64& rng) {
  int len = 0;
  for (const auto& b : blocks) len += b.m * b.n;
  std::vector<std::vector<std::int64_t>> rows;
  for (int g = 0; g < gens; ++g) {
    std::vector<std::int64_t> row;
    for (int i = 0; i < len; ++i) row.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q)));
    rows.push_back(row);
  }
  return MatrixCode::from_generators(q, blocks, rows);
}

}  // namespace latroid
