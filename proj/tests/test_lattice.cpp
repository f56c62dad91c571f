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

#include <numeric>

#include "helpers.hpp"
#include "latroid/builders.hpp"
#include "latroid/errors.hpp"
#include "latroid/lattice.hpp"

using namespace latroid;

namespace {

FiniteLattice divisors(int m) {
  std::vector<Label> labels;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0) labels.push_back({d});
  }
  return FiniteLattice::from_order(labels, [&](std::size_t a, std::size_t b) {
    return labels[b][0] % labels[a][0] == 0;
  });
}

void check_structure(const FiniteLattice& lat) {
  CHECK(height_is_modular(lat) == lat.flags().modular);
  if (lat.flags().distributive) CHECK(lat.flags().modular);
  if (lat.flags().complemented && lat.flags().modular) CHECK(lat.flags().relatively_complemented);
  const LatticeFlags s = compute_predicates(lat, Exec::Serial);
  const LatticeFlags p = compute_predicates(lat, Exec::Parallel);
  CHECK(s.modular == p.modular);
  CHECK(s.distributive == p.distributive);
  CHECK(s.complemented == p.complemented);
  CHECK(s.relatively_complemented == p.relatively_complemented);
}

}  // namespace

TEST_SUITE("lattices") {
  TEST_CASE("power set of a 3-set") {
    const FiniteLattice b3 = boolean_lattice(3);
    CHECK(b3.size() == 8);
    CHECK(b3.is_graded());
    for (std::size_t i = 0; i < b3.size(); ++i) {
      const Label& l = b3.label(i);
      CHECK(b3.height(i) == std::accumulate(l.begin(), l.end(), 0));
    }
    const LatticeFlags& f = b3.flags();
    CHECK(f.modular);
    CHECK(f.distributive);
    CHECK(f.complemented);
    CHECK(f.relatively_complemented);
    check_structure(b3);
  }

  TEST_CASE("subspaces of F_2^2 and F_2^3") {
    const SubspaceLattice s22 = subspace_lattice(2, 2);
    CHECK(s22.lattice->size() == 5);
    CHECK(s22.lattice->height(s22.lattice->top()) == 2);
    const SubspaceLattice s23 = subspace_lattice(2, 3);
    CHECK(s23.lattice->size() == 16);
    const LatticeFlags& f = s23.lattice->flags();
    CHECK(f.modular);
    CHECK(f.complemented);
    CHECK_FALSE(f.distributive);
    check_structure(*s23.lattice);
    for (std::size_t v = 0; v < s23.members.size(); ++v) {
      CHECK(s23.dims[s23.perp[v]] == 3 - s23.dims[v]);
      CHECK(s23.perp[s23.perp[v]] == v);
    }
  }

  TEST_CASE("divisors of 12") {
    const FiniteLattice d = divisors(12);
    CHECK(d.size() == 6);
    CHECK(d.flags().distributive);
    CHECK_FALSE(d.flags().complemented);
    const std::size_t four = d.index_of({4}), six = d.index_of({6});
    CHECK(d.label(d.join(four, six)) == Label{12});
    CHECK(d.label(d.meet(four, six)) == Label{2});
    check_structure(d);
  }

  TEST_CASE("ideal lattice of Z_8 is not complemented") {
    const FiniteLattice z8 = ideal_lattice(Pir::chain(2, 3));
    CHECK_FALSE(z8.flags().complemented);
    CHECK(z8.flags().distributive);
  }

  TEST_CASE("pentagon and diamond") {
    // N5: 0 < a < b < 1, 0 < c < 1.
    const std::vector<Label> n5{{0}, {1}, {2}, {3}, {4}};
    const bool n5_le[5][5] = {{1, 1, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
    const FiniteLattice pent = FiniteLattice::from_order(n5, [&](std::size_t a, std::size_t b) { return n5_le[a][b]; });
    CHECK_FALSE(pent.flags().modular);
    CHECK_FALSE(pent.is_graded());
    CHECK_THROWS_AS(pent.height(pent.top()), NotGraded);
    check_structure(pent);
    // M3.
    const bool m3_le[5][5] = {{1, 1, 1, 1, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
    const FiniteLattice dia = FiniteLattice::from_order(n5, [&](std::size_t a, std::size_t b) { return m3_le[a][b]; });
    CHECK(dia.flags().modular);
    CHECK_FALSE(dia.flags().distributive);
    CHECK(dia.flags().complemented);
    check_structure(dia);
  }

  TEST_CASE("non-lattices are rejected") {
    // Two maximal elements.
    const std::vector<Label> v{{0}, {1}, {2}};
    CHECK_THROWS_AS(FiniteLattice::from_order(v, [](std::size_t a, std::size_t b) { return a == b || a == 0; }),
                    InputError);
    // Not antisymmetric.
    CHECK_THROWS_AS(FiniteLattice::from_order(v, [](std::size_t, std::size_t) { return true; }), InputError);
    // Bowtie: two incomparable upper bounds of two atoms.
    const std::vector<Label> w{{0}, {1}, {2}, {3}, {4}, {5}};
    const bool le[6][6] = {{1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 1, 1}, {0, 0, 1, 1, 1, 1},
                           {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1}};
    CHECK_THROWS_AS(FiniteLattice::from_order(w, [&](std::size_t a, std::size_t b) { return le[a][b]; }),
                    InputError);
  }

  TEST_CASE("interval, dual and product") {
    const FiniteLattice b3 = boolean_lattice(3);
    CHECK(interval(b3, b3.bottom(), b3.top()) == b3);
    CHECK(dual(dual(b3)) == b3);
    const FiniteLattice sq = product(chain_lattice(1), chain_lattice(1));
    CHECK(sq.size() == 4);
    CHECK(sq.atoms().size() == 2);
    CHECK(sq.flags().distributive);
    const FiniteLattice i = interval(b3, b3.index_of({1, 0, 0}), b3.top());
    CHECK(i.size() == 4);
    CHECK_THROWS_AS(interval(b3, b3.index_of({1, 0, 0}), b3.index_of({0, 1, 0})), InputError);
    const FiniteLattice d = dual(divisors(12));
    CHECK(d.label(d.bottom()) == Label{12});
  }

  TEST_CASE("concrete builders") {
    const FiniteLattice g = chain_support_lattice(test::chain_ambient(2, 2, 2));
    CHECK(g.size() == 9);
    CHECK(g.has_points());
    CHECK(boolean_lattice(0).size() == 1);
    CHECK(subspace_lattice(3, 2).lattice->size() == 6);
    const SubmoduleLattice sm = submodule_lattice(Code::whole(test::chain_ambient(2, 2, 2)));
    CHECK(sm.lattice->flags().modular);
    CHECK_FALSE(sm.lattice->flags().complemented);
    const RectangularLattice rl = rectangular_lattice(test::chain_ambient(2, 2, 2));
    CHECK(rl.lattice->size() == 9);
    for (std::size_t i = 0; i < rl.modules.size(); ++i) {
      const Label p = support_point_of_module(test::chain_ambient(2, 2, 2), rl.modules[i]);
      CHECK(module_of_support_point(test::chain_ambient(2, 2, 2), p) == rl.modules[i]);
    }
  }

  TEST_CASE("atoms join check") {
    CHECK(atoms_join_check(boolean_lattice(4)).ok);
    CHECK(atoms_join_check(*subspace_lattice(3, 2).lattice).ok);
    const FiniteLattice c2 = chain_lattice(2);
    const auto rep = atoms_join_check(c2);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failing_element == c2.top());
  }

  TEST_CASE("atoms below a join lie below a joinand in distributive lattices") {
    for (const FiniteLattice& lat : {boolean_lattice(3), divisors(60), grid_lattice({2, 1, 2})}) {
      for (std::size_t a = 0; a < lat.size(); ++a) {
        for (std::size_t b = 0; b < lat.size(); ++b) {
          for (std::size_t j : lat.atoms()) {
            if (lat.leq(j, lat.join(a, b))) CHECK((lat.leq(j, a) || lat.leq(j, b)));
          }
        }
      }
    }
  }
}
