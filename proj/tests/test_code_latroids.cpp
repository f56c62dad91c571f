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

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "latroid/builders.hpp"
#include "latroid/code_latroids.hpp"
#include "latroid/errors.hpp"

using namespace latroid;
using test::chain_ambient;
using test::span_of;

namespace {

MatrixCode matrix_code(int q, std::vector<Block> blocks, std::vector<std::vector<std::int64_t>> gens) {
  return MatrixCode::from_generators(q, std::move(blocks), gens);
}

}  // namespace

TEST_SUITE("code_latroids") {
  TEST_CASE("code latroids on submodule lattices") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const SubmoduleLattice lat = submodule_lattice(Code::whole(amb));
    const Latroid zero = latroid_from_code(Code::zero(amb), lat, lambda_length);
    CHECK(zero.rho == zero.len);
    const Latroid whole = latroid_from_code(Code::whole(amb), lat, lambda_length);
    for (const auto& r : whole.rho) CHECK(r == Scalar::of(0));
    const Latroid c = latroid_from_code(span_of(amb, {{1, 2}}), lat, lambda_length);
    CHECK(validate_latroid(c).valid);
    // A length that is not strictly increasing is rejected.
    CHECK_THROWS_AS(latroid_from_code(Code::zero(amb), lat, [](const Code&) { return Scalar::of(0); }),
                    HypothesisError);
  }

  TEST_CASE("chain support latroid of <(1,2)>") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const Latroid lt = chain_support_latroid(span_of(amb, {{1, 2}}));
    const FiniteLattice& lat = lt.lat();
    CHECK(lat.size() == 9);
    CHECK(lt.rho[lat.index_of({2, 1})] == Scalar::of(1));
    CHECK(lt.rho[lat.index_of({0, 0})] == Scalar::of(0));
    CHECK(lt.rho[lat.top()] == Scalar::of(2));
    CHECK(validate_latroid(lt).valid);
    const Latroid z = chain_support_latroid(Code::zero(amb));
    CHECK(z.rho == z.len);
  }

  TEST_CASE("rho^supp agrees with the chain support latroid on rectangular codes") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const SupportFn s = SupportFn::chain(amb);
    const RectangularLattice rl = rectangular_lattice(amb);
    for (const auto& m : all_rectangular_modules(amb)) {
      const Code c = rectangular_code(amb, m);
      const Latroid a = rect_supp_latroid(c, s, rl);
      const Latroid b = chain_support_latroid(c);
      CHECK(validate_latroid(a).valid);
      for (std::size_t i = 0; i < rl.modules.size(); ++i) {
        const std::size_t j = b.lat().index_of(support_point_of_module(amb, rl.modules[i]));
        CHECK(a.rho[i].norm1() == b.rho[j].value());
        CHECK(a.len[i].norm1() == b.len[j].value());
      }
    }
    const Latroid zero = rect_supp_latroid(Code::zero(amb), s, rl);
    CHECK(zero.rho == zero.len);
  }

  TEST_CASE("rho^supp and the chain support latroid differ on non-rectangular codes") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const Code c = span_of(amb, {{1, 2}});
    const RectangularLattice rl = rectangular_lattice(amb);
    const Latroid a = rect_supp_latroid(c, SupportFn::chain(amb), rl);
    const Latroid b = chain_support_latroid(c);
    INFO(validate_latroid(a).message);
    CHECK(validate_latroid(a).valid);
    CHECK(a.rho[rl.lattice->top()] == Scalar{0, 1});
    CHECK(b.rho[b.lat().top()] == Scalar::of(2));
  }

  TEST_CASE("rho^supp through the rectangular closure of M cap C is not a latroid") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const Code c = span_of(amb, {{1, 2}});
    const SupportFn s = SupportFn::chain(amb);
    const RectangularLattice rl = rectangular_lattice(amb);
    const Latroid a = rect_supp_latroid(c, s, rl);
    const Latroid lit = rect_supp_closure_latroid(c, s, rl);
    const std::size_t i = [&] {
      for (std::size_t k = 0; k < rl.modules.size(); ++k) {
        if (support_point_of_module(amb, rl.modules[k]) == Label{2, 0}) return k;
      }
      return rl.modules.size();
    }();
    REQUIRE(i < rl.modules.size());
    CHECK(a.rho[i] == Scalar{0, 0});
    CHECK(lit.rho[i] == Scalar{1, 0});
    const LatroidReport rep = validate_latroid(lit);
    CHECK_FALSE(rep.valid);
    CHECK(rep.axiom == "L4");
  }

  TEST_CASE("rho^supp is a latroid for every code of Z_4^2") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const SupportFn s = SupportFn::chain(amb);
    const RectangularLattice rl = rectangular_lattice(amb);
    for (const Code& c : enumerate_submodules(Code::whole(amb))) CHECK(validate_latroid(rect_supp_latroid(c, s, rl)).valid);
  }

  TEST_CASE("rho^supp needs a modular support") {
    const Ambient amb = chain_ambient(2, 2, 1);
    CHECK_THROWS_AS(rect_supp_latroid(Code::zero(amb), SupportFn::hamming(amb), rectangular_lattice(amb)),
                    HypothesisError);
  }

  TEST_CASE("block matroids") {
    const Latroid a = block_matroid(span_of(chain_ambient(2, 1, 2), {{1, 1}}));
    CHECK(a.rho[a.lat().top()] == Scalar::of(1));
    CHECK(a.rho[0] == Scalar::of(0));
    const Latroid rep = block_matroid(span_of(chain_ambient(2, 1, 3), {{1, 1, 1}}));
    CHECK(circuits(rep) == ElementSet{rep.lat().top()});
    CHECK_THROWS_AS(block_matroid(Code::zero(chain_ambient(2, 2, 2))), InputError);
  }

  TEST_CASE("matrix codes") {
    const MatrixCode c = matrix_code(2, {{2, 2}}, {{1, 0, 1, 1}});
    CHECK(c.dim() == 1);
    const VecKey w = c.code().keys().back();
    const Ambient row(Pir::chain(2, 1), 2);
    CHECK(c.rows(w, 0) == std::vector<VecKey>{row.pack(row.from_integers({1, 0})), row.pack(row.from_integers({1, 1}))});
    CHECK(c.columns(w, 0) == std::vector<VecKey>{row.pack(row.from_integers({1, 1})), row.pack(row.from_integers({0, 1}))});
    const MatrixCode p = product_code(c, matrix_code(2, {{1, 2}}, {{1, 1}}));
    CHECK(p.dim() == 2);
    CHECK(p.blocks().size() == 2);
    CHECK(p.block_code(1).code() == matrix_code(2, {{1, 2}}, {{1, 1}}).code());
  }

  TEST_CASE("rank-metric latroids") {
    const SubspaceLattice s = subspace_lattice(2, 2);
    const MatrixCode zero = matrix_code(2, {{3, 2}}, {});
    const Latroid z = rank_metric_latroid(zero, s);
    for (std::size_t v = 0; v < z.size(); ++v) CHECK(z.rho[v] == Scalar::of(3 * s.dims[v]));
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
      std::vector<std::vector<std::int64_t>> gens;
      for (int g = 0; g < 2; ++g) {
        std::vector<std::int64_t> row;
        for (int i = 0; i < 6; ++i) row.push_back(static_cast<std::int64_t>(rng() % 2));
        gens.push_back(row);
      }
      const MatrixCode c = matrix_code(2, {{3, 2}}, gens);
      const Latroid lt = rank_metric_latroid(c, s);
      CHECK(validate_latroid(lt).valid);
      CHECK(lt.rho[0] == Scalar::of(0));
      CHECK(tilde_relation_holds(c, s));
      CHECK(check_q_polymatroid(s, tilde_polymatroid(c, s).rho).ok);
    }
  }

  TEST_CASE("circuits of the rank-metric latroid are the minimal codeword rowspaces") {
    const SubspaceLattice s = subspace_lattice(3, 2);
    for (const auto& gens : std::vector<std::vector<std::vector<std::int64_t>>>{
             {{1, 0, 0, 0}}, {{1, 2, 2, 1}}, {{1, 1, 0, 0}, {0, 0, 1, 2}}, {{1, 0, 0, 1}, {0, 1, 1, 0}}}) {
      const MatrixCode c = matrix_code(3, {{2, 2}}, gens);
      const Latroid lt = rank_metric_latroid(c, s);
      const FiniteLattice& lat = *s.lattice;
      std::vector<std::size_t> spaces;
      for (VecKey w : c.code().keys()) {
        if (w != 0) spaces.push_back(s.span_of(c.rows(w, 0)));
      }
      ElementSet minimal;
      for (auto v : spaces) {
        const bool is_min = std::none_of(spaces.begin(), spaces.end(), [&](auto x) { return lat.less(x, v); });
        if (is_min) minimal.push_back(v);
      }
      std::sort(minimal.begin(), minimal.end());
      minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
      CHECK(circuits(lt) == minimal);
    }
  }

  TEST_CASE("q-polymatroid checks catch violations") {
    const SubspaceLattice s = subspace_lattice(2, 2);
    std::vector<Scalar> rho(s.members.size(), Scalar::of(0));
    rho[0] = Scalar::of(1);
    CHECK(check_q_polymatroid(s, rho).axiom == "P1");
    std::vector<Scalar> dec(s.members.size(), Scalar::of(1));
    dec[0] = Scalar::of(0);
    dec[s.lattice->top()] = Scalar::of(0);
    CHECK(check_q_polymatroid(s, dec).axiom == "P2");
  }

  TEST_CASE("sum-rank latroids") {
    const MatrixCode a = matrix_code(2, {{2, 1}}, {{1, 1}});
    const MatrixCode b = matrix_code(2, {{1, 2}}, {{1, 0}});
    const MatrixCode p = product_code(a, b);
    for (auto conv : {SumRankConvention::Column, SumRankConvention::Row}) {
      const Latroid lt = sum_rank_latroid(p, conv);
      CHECK(validate_latroid(lt).valid);
      const Latroid ds = direct_sum(sum_rank_latroid(a, conv), sum_rank_latroid(b, conv));
      CHECK(lt.rho == ds.rho);
      CHECK(lt.len == ds.len);
      CHECK(lt.lat() == ds.lat());
      const Latroid z = sum_rank_latroid(matrix_code(2, {{2, 1}, {1, 2}}, {}), conv);
      CHECK(z.rho == z.len);
    }
    const MatrixCode single = matrix_code(2, {{3, 2}}, {{1, 0, 1, 1, 0, 1}});
    CHECK(sum_rank_latroid(single, SumRankConvention::Row) == rank_metric_latroid(single, subspace_lattice(2, 2)));
  }

  TEST_CASE("generalized weights of codes") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const Code c = span_of(amb, {{1, 2}});
    const SupportFn s = SupportFn::chain(amb);
    CHECK(code_gen_weights_dbar(c, s, 1) == 1);
    CHECK(code_gen_weights_dbar(c, s, 2) == 3);
    CHECK(code_gen_weights_dr(c, s, 1) == 1);
    CHECK_THROWS_AS(code_gen_weights_dr(c, s, 2), InputError);
    CHECK_THROWS_AS(code_gen_weights_dbar(c, s, 0), InputError);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
      const Code d = span_of(chain_ambient(3, 2, 2), {{static_cast<std::int64_t>(rng() % 9), static_cast<std::int64_t>(rng() % 9)},
                                                    {static_cast<std::int64_t>(rng() % 9), static_cast<std::int64_t>(rng() % 9)}});
      if (d.size() == 1) continue;
      const SupportFn sd = SupportFn::chain(d.ambient());
      CHECK(code_gen_weights_dbar(d, sd, 1) == min_max_weight(sd, d).min);
      for (int r = 1; r < length_lambda(d); ++r) {
        CHECK(code_gen_weights_dbar(d, sd, r) < code_gen_weights_dbar(d, sd, r + 1));
      }
      for (int r = 1; r < big_m(d); ++r) CHECK(code_gen_weights_dr(d, sd, r) <= code_gen_weights_dr(d, sd, r + 1));
      for (const auto& sub : enumerate_submodules(d)) {
        for (int r = 1; r <= big_m(sub); ++r) CHECK(code_gen_weights_dr(sub, sd, r) >= code_gen_weights_dr(d, sd, r));
      }
    }
  }

  TEST_CASE("weight equalities") {
    const Ambient amb = chain_ambient(2, 2, 2);
    const WeightReport rep = latroid_weights_equal_code_weights(span_of(amb, {{1, 2}}));
    CHECK(rep.all_equal);
    CHECK(rep.rows.size() == 2);
    CHECK(latroid_weights_equal_code_weights(Code::zero(amb)).rows.empty());
    const MatrixCode rank1 = matrix_code(2, {{3, 2}}, {{1, 0, 1, 0, 0, 0}});
    const WeightReport r = rank_weights_equal(rank1);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].code_side == Rational(3));
    CHECK(r.rows[0].latroid_side == Rational(3));
    CHECK_THROWS_AS(rank_weights_equal(matrix_code(2, {{2, 2}}, {})), HypothesisError);
    CHECK(block_weights_equal(span_of(chain_ambient(2, 1, 4), {{1, 1, 0, 0}, {0, 1, 1, 1}})).all_equal);
    const MatrixCode sr = product_code(matrix_code(2, {{3, 1}}, {{1, 1, 0}}), matrix_code(2, {{3, 2}}, {{1, 0, 0, 1, 0, 0}}));
    CHECK(sum_rank_weights_equal(sr).all_equal);
  }
}
