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

#include "helpers.hpp"
#include "latroid/errors.hpp"
#include "latroid/fixtures.hpp"
#include "latroid/supports.hpp"

using namespace latroid;
using test::chain_ambient;
using test::key_of;
using test::span_of;

namespace {

SupportFn z6_support(int n) { return z6_indicator_support(n); }
SupportFn tau(const Ambient& amb) { return tau_support(amb); }
std::vector<SupportVec> lee_table() { return lee_table_z4(); }

}  // namespace

TEST_SUITE("supports") {
  TEST_CASE("chain support values on Z_4") {
    const SupportFn s = SupportFn::chain(chain_ambient(2, 2, 1));
    CHECK(s.eval(VecKey{0}) == SupportVec{0});
    CHECK(s.eval(VecKey{1}) == SupportVec{2});
    CHECK(s.eval(VecKey{2}) == SupportVec{1});
    CHECK(s.eval(VecKey{3}) == SupportVec{2});
  }

  TEST_CASE("weights") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const SupportFn s = SupportFn::chain(amb);
    CHECK(weight(s, key_of(amb, {1, 2})) == 3);
    CHECK(weight(s, 0) == 0);
    const Ambient f2 = chain_ambient(2, 1, 3);
    CHECK(weight(SupportFn::hamming(f2), key_of(f2, {1, 1, 0})) == 2);
    const Code c = span_of(amb, {{1, 2}});
    CHECK(code_support(s, c) == SupportVec{2, 1});
    CHECK(code_weight(s, c) == 3);
    CHECK(min_max_weight(s, c).min == 1);
    CHECK(min_max_weight(s, c).max == 3);
    CHECK_THROWS_AS(min_max_weight(s, Code::zero(amb)), InputError);
  }

  TEST_CASE("Z_6 support from the isometry example") {
    const SupportFn s = z6_support(1);
    const Pir& r = s.ambient().ring();
    CHECK(s.eval(VecKey{r.from_integer(1).index}) == SupportVec{1, 1});
    CHECK(s.eval(VecKey{r.from_integer(2).index}) == SupportVec{1, 0});
    CHECK(s.eval(VecKey{r.from_integer(3).index}) == SupportVec{0, 1});
    CHECK(validate_support(s).valid);
    CHECK(validate_modular(s).valid);
  }

  TEST_CASE("Lee weight fails axiom 2 at r=2, v=1") {
    const Ambient amb = chain_ambient(2, 2, 1);
    const SupportReport rep = validate_table(amb, 1, lee_table());
    CHECK_FALSE(rep.valid);
    CHECK(rep.axiom == 2);
    CHECK(rep.v == 1);
    REQUIRE(rep.r.has_value());
    CHECK(rep.r->index == 2);
    CHECK_THROWS_AS(SupportFn::from_table(amb, 1, lee_table()), InputError);
  }

  TEST_CASE("chain supports are modular") {
    for (auto [p, k, n] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {2, 3, 1}, {3, 2, 2}, {2, 3, 2}}) {
      const SupportFn s = SupportFn::chain(chain_ambient(p, k, n));
      CHECK(validate_support(s).valid);
      CHECK(validate_modular(s).valid);
    }
  }

  TEST_CASE("tau is a support but not modular") {
    for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
      const Ambient amb = chain_ambient(q, 1, n);
      const SupportFn t = tau(amb);
      CHECK(validate_support(t).valid);
      const SupportReport rep = validate_modular(t);
      CHECK_FALSE(rep.valid);
      CHECK(rep.axiom == 4);
    }
  }

  TEST_CASE("Hamming support on Z_4 is not modular") {
    CHECK_FALSE(validate_modular(SupportFn::hamming(chain_ambient(2, 2, 1))).valid);
  }

  TEST_CASE("axiom 1 and 3 violations") {
    const Ambient amb = chain_ambient(2, 1, 2);
    std::vector<SupportVec> t(4, SupportVec{1});
    t[0] = {0};
    t[1] = {0};
    CHECK(validate_table(amb, 1, t).axiom == 1);
    // supp(e1) = (1,0), supp(e2) = (0,1), supp(e1+e2) = (1,1) is fine; break it.
    std::vector<SupportVec> u{{0, 0}, {0, 1}, {1, 0}, {2, 2}};
    CHECK(validate_table(amb, 2, u).axiom == 3);
  }

  TEST_CASE("serial and parallel validation agree") {
    const Ambient amb = chain_ambient(2, 2, 2);
    std::vector<SupportVec> table(amb.cardinality());
    for (VecKey k = 0; k < table.size(); ++k) table[k] = {k == 0 ? 0 : static_cast<int>(k % 3) + 1};
    const auto a = validate_table(amb, 1, table, Exec::Serial);
    const auto b = validate_table(amb, 1, table, Exec::Parallel);
    CHECK(a.valid == b.valid);
    CHECK(a.axiom == b.axiom);
    CHECK(a.v == b.v);
    CHECK(a.w == b.w);
    CHECK(a.message == b.message);
    const SupportFn t = tau(chain_ambient(3, 1, 2));
    CHECK(validate_modular(t, Exec::Serial).message == validate_modular(t, Exec::Parallel).message);
  }

  TEST_CASE("splitting the Z_6 support") {
    const SupportFn s = z6_support(2);
    const SplitSupport split = split_support(s);
    REQUIRE(split.factors.size() == 2);
    CHECK(recombines(s, split));
    // Factor 0 is Z_2, which drives the second output of each coordinate.
    CHECK(same_values(split.factors[0], SupportFn::hamming(chain_ambient(2, 1, 2))));
    CHECK(same_values(split.factors[1], SupportFn::hamming(chain_ambient(3, 1, 2))));
    CHECK(split.factors[0].is_standard());
    CHECK(split.permutation == std::vector<int>{1, 3, 0, 2});
  }

  TEST_CASE("splitting chain supports") {
    const SupportFn z4 = SupportFn::chain(chain_ambient(2, 2, 2));
    const SplitSupport one = split_support(z4);
    REQUIRE(one.factors.size() == 1);
    CHECK(same_values(one.factors[0], z4));
    const SupportFn s = SupportFn::chain(Ambient(test::z6(), 2));
    const SplitSupport split = split_support(s);
    REQUIRE(split.factors.size() == 2);
    CHECK(same_values(split.factors[0], SupportFn::chain(chain_ambient(2, 1, 2))));
    CHECK(same_values(split.factors[1], SupportFn::chain(chain_ambient(3, 1, 2))));
  }

  TEST_CASE("splitting needs a modular support") {
    CHECK_THROWS_AS(split_support(SupportFn::hamming(Ambient(Pir({{2, 2}, {3, 1}}), 1))), HypothesisError);
  }

  TEST_CASE("Hamming weight on Z_6 is not a modular function on submodules") {
    const Ambient amb(test::z6(), 1);
    const SupportFn h = SupportFn::hamming(amb);
    const Code m1 = span_of(amb, {{2}});
    const Code m2 = span_of(amb, {{3}});
    CHECK(code_weight(h, m1) + code_weight(h, m2) == 2);
    CHECK(code_weight(h, m1.sum(m2)) + code_weight(h, m1.intersect(m2)) == 1);
  }

  TEST_CASE("standard modular supports are modular and strictly increasing on rectangular modules") {
    for (const Ambient& amb : {chain_ambient(2, 2, 2), chain_ambient(2, 3, 1), chain_ambient(3, 2, 2),
                               Ambient(test::z6(), 2)}) {
      const SupportFn s = SupportFn::chain(amb);
      const auto mods = all_rectangular_modules(amb);
      std::vector<Code> codes;
      for (const auto& m : mods) codes.push_back(rectangular_code(amb, m));
      for (std::size_t a = 0; a < mods.size(); ++a) {
        for (std::size_t b = 0; b < mods.size(); ++b) {
          const SupportVec sa = code_support(s, codes[a]), sb = code_support(s, codes[b]);
          CHECK(code_support(s, codes[a].sum(codes[b])) == join(sa, sb));
          CHECK(code_support(s, codes[a].intersect(codes[b])) == meet(sa, sb));
          if (a != b && codes[a].is_subcode_of(codes[b])) CHECK(norm1(sa) < norm1(sb));
        }
      }
    }
  }
}
