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

#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "latroid/errors.hpp"
#include "latroid/fixtures.hpp"
#include "latroid/isometries.hpp"

using namespace latroid;
using test::chain_ambient;
using test::span_of;

namespace {

SupportFn z6_support(int n) { return z6_indicator_support(n); }

}  // namespace

TEST_SUITE("isometries") {
  TEST_CASE("basic isometry checks") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const SupportFn s = SupportFn::chain(amb);
    CHECK(is_isometry(RingMatrix::identity(amb.ring(), 2), s));
    const Ambient a1 = chain_ambient(2, 2, 1);
    CHECK_FALSE(is_isometry(RingMatrix::from_integers(a1.ring(), {{2}}), SupportFn::chain(a1)));
    // Bijective but not weight preserving.
    CHECK_FALSE(is_isometry(RingMatrix::from_integers(amb.ring(), {{1, 1}, {0, 1}}), s));
  }

  TEST_CASE("the Z_6 example") {
    const Pir r = test::z6();
    const SupportFn s = z6_support(2);
    const RingMatrix m = RingMatrix::from_integers(r, {{2, 3}, {3, 2}});
    CHECK(is_isometry(m, s));
    CHECK(is_isometry(m, SupportFn::chain(Ambient(r, 2))));
    const auto proj = pir_isometry_projections(m, s);
    REQUIRE(proj.size() == 2);
    CHECK(proj[0].matrix.to_integers() == std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
    CHECK(proj[1].matrix.to_integers() == std::vector<std::vector<std::int64_t>>{{2, 0}, {0, 2}});
    const SplitSupport split = split_support(s);
    for (const auto& fm : proj) {
      const ChainDecomposition d = decompose_chain_isometry(fm.matrix, split.factors[fm.factor]);
      CHECK(d.d * d.p == fm.matrix);
      CHECK(d.d.is_diagonal());
      CHECK(d.p.is_permutation());
    }
    const auto id = pir_isometry_projections(RingMatrix::identity(r, 2), s);
    CHECK(id[0].matrix == RingMatrix::identity(Pir::chain(2, 1), 2));
    CHECK(id[1].matrix == RingMatrix::identity(Pir::chain(3, 1), 2));
    const EquivalenceReport eq = equivalence_invariance_check(span_of(Ambient(r, 2), {{1, 0}}), m, s);
    CHECK(eq.ok);
    CHECK(eq.dr1 == eq.dr2);
    CHECK(eq.dbar1 == eq.dbar2);
  }

  TEST_CASE("decompositions over chain rings") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const SupportFn s = SupportFn::chain(amb);
    const RingMatrix swap = RingMatrix::permutation(amb.ring(), {1, 0});
    const ChainDecomposition a = decompose_chain_isometry(swap, s);
    CHECK(a.d == RingMatrix::identity(amb.ring(), 2));
    CHECK(a.p == swap);
    const RingMatrix diag = RingMatrix::from_integers(amb.ring(), {{3, 0}, {0, 1}});
    const ChainDecomposition b = decompose_chain_isometry(diag, s);
    CHECK(b.d == diag);
    CHECK(b.p == RingMatrix::identity(amb.ring(), 2));
    CHECK_THROWS_AS(decompose_chain_isometry(RingMatrix::from_integers(amb.ring(), {{1, 1}, {0, 1}}), s),
                    HypothesisError);
    const Ambient a8 = chain_ambient(2, 3, 3);
    const SupportFn s8 = SupportFn::chain(a8);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
      const RingMatrix m = random_monomial(a8.ring(), 3, rng);
      REQUIRE(is_isometry(m, s8));
      const ChainDecomposition d = decompose_chain_isometry(m, s8);
      CHECK(d.d * d.p == m);
      CHECK(d.d.is_diagonal());
      CHECK(d.p.is_permutation());
    }
  }

  TEST_CASE("isometries are closed under products and inverses") {
    const Ambient amb = chain_ambient(3, 2, 2);
    const SupportFn s = SupportFn::chain(amb);
    std::mt19937_64 rng(10);
    for (int t = 0; t < 10; ++t) {
      const RingMatrix a = random_monomial(amb.ring(), 2, rng);
      const RingMatrix b = random_monomial(amb.ring(), 2, rng);
      CHECK(is_isometry(a * b, s));
      const RingMatrix ai = inverse(a);
      CHECK(is_isometry(ai, s));
      CHECK(a * ai == RingMatrix::identity(amb.ring(), 2));
    }
    CHECK_THROWS_AS(inverse(RingMatrix::from_integers(amb.ring(), {{3, 0}, {0, 1}})), InputError);
  }

  TEST_CASE("equivalence invariance") {
    const Ambient amb = chain_ambient(3, 2, 2);
    const SupportFn s = SupportFn::chain(amb);
    const Code c = span_of(amb, {{1, 3}});
    const RingMatrix perm = RingMatrix::permutation(amb.ring(), {1, 0});
    CHECK(equivalence_invariance_check(c, perm, s).ok);
    const RingMatrix scale = RingMatrix::from_integers(amb.ring(), {{2, 0}, {0, 5}});
    const EquivalenceReport rep = equivalence_invariance_check(c, scale, s);
    CHECK(rep.ok);
    CHECK(rep.dist1 == rep.dist2);
    CHECK(big_m(c) == big_m(c.mapped(scale.entries())));
  }

  TEST_CASE("serial and parallel isometry checks agree") {
    const Ambient amb = chain_ambient(2, 2, 3);
    const SupportFn s = SupportFn::chain(amb);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 10; ++t) {
      std::vector<std::vector<std::int64_t>> rows(3, std::vector<std::int64_t>(3));
      for (auto& row : rows) {
        for (auto& x : row) x = static_cast<std::int64_t>(rng() % 4);
      }
      const RingMatrix m = t % 2 ? random_monomial(amb.ring(), 3, rng) : RingMatrix::from_integers(amb.ring(), rows);
      CHECK(is_isometry(m, s, Exec::Serial) == is_isometry(m, s, Exec::Parallel));
    }
  }
}
