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
#include "latroid/latroid.hpp"

using namespace latroid;
using test::chain_ambient;
using test::span_of;

namespace {

std::shared_ptr<const FiniteLattice> shared(FiniteLattice lat) {
  return std::make_shared<const FiniteLattice>(std::move(lat));
}

Code random_binary_code(std::mt19937_64& rng, int n, int gens) {
  const Ambient amb = chain_ambient(2, 1, n);
  std::vector<std::vector<std::int64_t>> rows;
  for (int g = 0; g < gens; ++g) {
    std::vector<std::int64_t> row;
    for (int i = 0; i < n; ++i) row.push_back(static_cast<std::int64_t>(rng() % 2));
    rows.push_back(row);
  }
  return span_of(amb, rows);
}

// Rank-metric latroid of a random code in F_2^{1 x 3}: a q-matroid.
Latroid random_q_matroid(std::mt19937_64& rng, const SubspaceLattice& lat) {
  std::vector<std::vector<std::int64_t>> gens;
  const int k = static_cast<int>(rng() % 3);
  for (int g = 0; g < k; ++g) {
    gens.push_back({static_cast<std::int64_t>(rng() % 2), static_cast<std::int64_t>(rng() % 2),
                    static_cast<std::int64_t>(rng() % 2)});
  }
  return rank_metric_latroid(MatrixCode::from_generators(2, {{1, 3}}, gens), lat);
}

void check_round_trips(const Latroid& lt) {
  const FiniteLattice& lat = lt.lat();
  REQUIRE(crypto_applicable(lt));
  const ElementSet in = independents(lt), bs = bases(lt), cs = circuits(lt);
  CHECK(axioms_I(lat, in).ok);
  CHECK(axioms_B(lat, bs).ok);
  CHECK(axioms_C(lat, cs).ok);
  CHECK(rank_from_independents(lat, in) == lt.rho);
  CHECK(rank_from_bases(lat, bs) == lt.rho);
  CHECK(rank_from_circuits(lat, cs) == lt.rho);
  for (std::size_t b : bs) CHECK(lat.height(b) == lat.height(bs.front()));
}

}  // namespace

TEST_SUITE("latroids") {
  TEST_CASE("free latroid on B_3") {
    const Latroid lt = free_latroid(shared(boolean_lattice(3)));
    CHECK(validate_latroid(lt).valid);
    CHECK(independents(lt).size() == 8);
    CHECK(bases(lt) == ElementSet{7});
    CHECK(circuits(lt).empty());
    for (std::size_t x = 0; x < lt.size(); ++x) CHECK(closure(lt, x) == x);
    CHECK(gen_weight(lt, Scalar::of(1)) == Scalar::of(0));
    CHECK(gen_weight(lt, Scalar::of(0)) == Scalar::of(0));
  }

  TEST_CASE("two latroids on the ideals of Z_8 with equal independents but different ranks") {
    auto lat = shared(ideal_lattice(Pir::chain(2, 3)));
    const Pir r = Pir::chain(2, 3);
    std::vector<Scalar> len, half, lambda, floor_half;
    for (std::size_t i = 0; i < lat->size(); ++i) {
      const auto size = static_cast<std::int64_t>(r.ideal_size(Ideal{{static_cast<int>(lat->label(i)[0])}}));
      len.push_back(Scalar::of(size - 1));
      half.emplace_back(std::vector<Rational>{Rational(size, 2)});
      floor_half.push_back(Scalar::of(size / 2));
      lambda.push_back(Scalar::of(exact_log(static_cast<std::uint64_t>(size), 2)));
    }
    // The literal |I|/2 is 1/2 on the zero ideal.
    const LatroidReport literal = validate_latroid(make_latroid(lat, half, len));
    CHECK_FALSE(literal.valid);
    CHECK(literal.axiom == "L1");
    const Latroid a = make_latroid(lat, floor_half, len);
    const Latroid b = make_latroid(lat, lambda, len);
    CHECK(validate_latroid(a).valid);
    CHECK(validate_latroid(b).valid);
    CHECK(independents(a) == independents(b));
    CHECK(independents(a).size() == 2);
    CHECK(a.rho[lat->top()] == Scalar::of(4));
    CHECK(b.rho[lat->top()] == Scalar::of(3));
  }

  TEST_CASE("negative top rank violates L4") {
    auto lat = shared(chain_lattice(1));
    const LatroidReport rep = validate_latroid(make_latroid(lat, {Scalar::of(0), Scalar::of(-1)},
                                                            {Scalar::of(0), Scalar::of(1)}));
    CHECK_FALSE(rep.valid);
    CHECK(rep.axiom == "L4");
  }

  TEST_CASE("each axiom is detected") {
    auto lat = shared(boolean_lattice(2));
    const auto len = height_length(*lat);
    std::vector<Scalar> rho = len;
    rho[0] = Scalar::of(1);
    CHECK(validate_latroid(make_latroid(lat, rho, len)).axiom == "L1");
    std::vector<Scalar> flat(4, Scalar::of(0));
    CHECK(validate_latroid(make_latroid(lat, flat, flat)).axiom == "L2");
    std::vector<Scalar> skew{Scalar::of(0), Scalar::of(1), Scalar::of(1), Scalar::of(3)};
    CHECK(validate_latroid(free_latroid(lat, skew)).axiom == "L3");
    // Supermodular rank: 0, 0, 0, 1.
    std::vector<Scalar> sup{Scalar::of(0), Scalar::of(0), Scalar::of(0), Scalar::of(1)};
    CHECK(validate_latroid(make_latroid(lat, sup, len)).axiom == "L5");
  }

  TEST_CASE("non-modular lattices are rejected") {
    const std::vector<Label> n5{{0}, {1}, {2}, {3}, {4}};
    const bool le[5][5] = {{1, 1, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
    auto lat = shared(FiniteLattice::from_order(n5, [&](std::size_t a, std::size_t b) { return le[a][b]; }));
    std::vector<Scalar> zeros(5, Scalar::of(0));
    CHECK(validate_latroid(make_latroid(lat, zeros, zeros)).axiom == "modular");
  }

  TEST_CASE("uniform latroids") {
    auto lat = shared(boolean_lattice(3));
    const auto len = height_length(*lat);
    CHECK(uniform_latroid(lat, len, Scalar::of(3)) == free_latroid(lat));
    const Latroid u2 = uniform_latroid(lat, len, Scalar::of(2));
    CHECK(validate_latroid(u2).valid);
    CHECK(u2.rho[lat->top()] == Scalar::of(2));
    CHECK_THROWS_AS(uniform_latroid(lat, len, Scalar::of(0)), InputError);
    const Latroid single = free_latroid(shared(boolean_lattice(0)));
    CHECK(single.rho == std::vector<Scalar>{Scalar::of(0)});
  }

  TEST_CASE("restriction, direct sum and dual") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
      const Latroid lt = block_matroid(random_binary_code(rng, 3, 2));
      CHECK(dual_latroid(dual_latroid(lt)) == lt);
      CHECK(restrict_latroid(lt, 0, lt.size() - 1) == lt);
      CHECK(validate_latroid(dual_latroid(lt)).valid);
      CHECK(dual_length_identity(lt));
      for (std::size_t lo = 0; lo < lt.size(); ++lo) {
        for (std::size_t hi = 0; hi < lt.size(); ++hi) {
          if (!lt.lat().leq(lo, hi)) continue;
          CHECK(validate_latroid(restrict_latroid(lt, lo, hi)).valid);
          CHECK(dual_restriction_identity(lt, lo, hi));
        }
      }
    }
    const Latroid f = direct_sum(free_latroid(shared(boolean_lattice(1))), free_latroid(shared(chain_lattice(2))));
    CHECK(validate_latroid(f).valid);
    CHECK(f == free_latroid(f.lattice));
  }

  TEST_CASE("block matroid of <(1,1)>") {
    const Latroid lt = block_matroid(span_of(chain_ambient(2, 1, 2), {{1, 1}}));
    const FiniteLattice& lat = lt.lat();
    CHECK(circuits(lt) == ElementSet{lat.top()});
    const std::size_t e1 = lat.index_of({1, 0});
    CHECK(closure(lt, e1) == lat.top());
    CHECK(closure(lt, lat.bottom()) == lat.bottom());
    CHECK(flats(lt) == ElementSet{lat.bottom(), lat.top()});
    CHECK(hyperplanes(lt) == ElementSet{lat.bottom()});
  }

  TEST_CASE("set axioms detect bad candidates") {
    const FiniteLattice b2 = boolean_lattice(2);
    const ElementSet nested{b2.index_of({1, 0}), b2.top()};
    const AxiomReport c = axioms_C(b2, nested);
    CHECK_FALSE(c.ok);
    CHECK(c.axiom == "C2");
    CHECK(axioms_C(b2, {0}).axiom == "C1");
    CHECK(axioms_I(b2, {}).axiom == "I1");
    CHECK(axioms_B(b2, {}).axiom == "B1");
    const ElementSet unequal{b2.index_of({1, 0}), b2.top()};
    CHECK_FALSE(axioms_B(b2, unequal).ok);
    CHECK_THROWS_AS(axioms_I(chain_lattice(2), {0}), HypothesisError);
  }

  TEST_CASE("cryptomorphism round trips on block matroids and q-matroids") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) check_round_trips(block_matroid(random_binary_code(rng, 4, 1 + t % 3)));
    const SubspaceLattice s23 = subspace_lattice(2, 3);
    for (int t = 0; t < 20; ++t) check_round_trips(random_q_matroid(rng, s23));
    auto b3 = shared(boolean_lattice(3));
    check_round_trips(uniform_latroid(b3, height_length(*b3), Scalar::of(1)));
    check_round_trips(uniform_latroid(s23.lattice, height_length(*s23.lattice), Scalar::of(2)));
  }

  TEST_CASE("exchange in B2 needs an existential reading") {
    // q-matroid of <(1,1,0)> in F_2^{1 x 3}: bases are the planes avoiding (1,1,0).
    const SubspaceLattice s = subspace_lattice(2, 3);
    const Latroid lt = rank_metric_latroid(MatrixCode::from_generators(2, {{1, 3}}, {{1, 1, 0}}), s);
    CHECK(validate_latroid(lt).valid);
    const ElementSet bs = bases(lt);
    CHECK(axioms_B(*s.lattice, bs).ok);
    // B1 = <e1,e3>, B2 = <e2,e3>, H = <e1>: the atom e3 of B2 cannot serve but e2 + e3 can.
    const Ambient sp = s.space();
    const auto key = [&](std::vector<std::int64_t> v) { return sp.pack(sp.from_integers(v)); };
    const std::size_t b1 = s.span_of({key({1, 0, 0}), key({0, 0, 1})});
    const std::size_t b2 = s.span_of({key({0, 1, 0}), key({0, 0, 1})});
    const std::size_t h = s.span_of({key({1, 0, 0})});
    CHECK(std::binary_search(bs.begin(), bs.end(), b1));
    CHECK(std::binary_search(bs.begin(), bs.end(), b2));
    const FiniteLattice& lat = *s.lattice;
    const std::size_t e3 = s.span_of({key({0, 0, 1})});
    const std::size_t e2 = s.span_of({key({0, 1, 0})});
    const std::size_t e23 = s.span_of({key({0, 1, 1})});
    CHECK(std::binary_search(bs.begin(), bs.end(), lat.join(h, e2)) == false);
    CHECK(std::binary_search(bs.begin(), bs.end(), lat.join(h, e3)));
    CHECK(std::binary_search(bs.begin(), bs.end(), lat.join(h, e23)));
  }

  TEST_CASE("rank from circuits with kappa") {
    const Latroid lt = block_matroid(span_of(chain_ambient(2, 1, 3), {{1, 1, 1}}));
    const ElementSet cs = circuits(lt);
    CHECK(cs == ElementSet{lt.lat().top()});
    CHECK(circuit_chain_length(lt.lat(), cs, 0) == 0);
    CHECK(circuit_chain_length(lt.lat(), cs, lt.lat().top()) == 1);
    CHECK(circuit_chain_length(lt.lat(), cs, lt.lat().top(), false) == 1);
  }

  TEST_CASE("join of atoms preserving rank") {
    std::mt19937_64 rng(3);
    const SubspaceLattice s23 = subspace_lattice(2, 3);
    for (int t = 0; t < 5; ++t) {
      for (const Latroid& lt : {block_matroid(random_binary_code(rng, 3, 2)), random_q_matroid(rng, s23)}) {
        const FiniteLattice& lat = lt.lat();
        for (std::size_t a = 0; a < lat.size(); ++a) {
          for (std::size_t b = 0; b < lat.size(); ++b) {
            bool all_same = true;
            for (std::size_t j : lat.atoms()) {
              if (lat.leq(j, b)) all_same = all_same && lt.rho[lat.join(a, j)] == lt.rho[a];
            }
            if (all_same) CHECK(lt.rho[lat.join(a, b)] == lt.rho[a]);
          }
        }
      }
    }
  }

  TEST_CASE("generalized weights of latroids") {
    const Latroid lt = collapse_to_norm(chain_support_latroid(span_of(chain_ambient(2, 2, 2), {{1, 2}})));
    CHECK(gen_weight(lt, Scalar::of(1)) == Scalar::of(1));
    CHECK(gen_weight(lt, Scalar::of(2)) == Scalar::of(3));
    CHECK(gen_weight(lt, Scalar::of(0)) == Scalar::of(0));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
      const Latroid b = block_matroid(random_binary_code(rng, 4, 2));
      const int k = 4 - static_cast<int>(b.rho.back().value().numerator());  // dim C
      for (int a = 1; a < k; ++a) CHECK(less(gen_weight(b, Scalar::of(a)), gen_weight(b, Scalar::of(a + 1))));
    }
    // u = 2 latroid over Z_6: minimal feasible lengths form an antichain.
    const Latroid z6 = chain_support_latroid(span_of(Ambient(test::z6(), 2), {{1, 1}}));
    CHECK(z6.u() == 2);
    CHECK(validate_latroid(z6).valid);
    const auto anti = gen_weight_antichain(z6, Scalar{1, 0});
    REQUIRE(anti.size() == 1);
    CHECK(anti[0] == Scalar{2, 0});
    CHECK_THROWS_AS(gen_weight(z6, Scalar{1, 0}), HypothesisError);
  }

  TEST_CASE("serial and parallel validation agree") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 5; ++t) {
      Latroid lt = block_matroid(random_binary_code(rng, 4, 2));
      if (t % 2) std::swap(lt.rho[3], lt.rho[5]);
      const LatroidReport s = validate_latroid(lt, Exec::Serial);
      const LatroidReport p = validate_latroid(lt, Exec::Parallel);
      CHECK(s.valid == p.valid);
      CHECK(s.axiom == p.axiom);
      CHECK(s.a == p.a);
      CHECK(s.b == p.b);
    }
  }
}
