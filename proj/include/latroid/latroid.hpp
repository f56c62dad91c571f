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

// Latroids (rho, ||.||, L) on explicit finite lattices: axioms L1-L5,
// standard constructions, independents/bases/circuits with their axiom
// systems and rank reconstructions, closure and generalized weights.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "latroid/kernels.hpp"
#include "latroid/lattice.hpp"
#include "latroid/scalar.hpp"

namespace latroid {

struct Latroid {
  std::shared_ptr<const FiniteLattice> lattice;
  std::vector<Scalar> rho;  // indexed by lattice element
  std::vector<Scalar> len;

  std::size_t size() const { return rho.size(); }
  int u() const { return rho.empty() ? 0 : rho[0].u(); }
  const FiniteLattice& lat() const { return *lattice; }

  friend bool operator==(const Latroid& a, const Latroid& b) {
    return *a.lattice == *b.lattice && a.rho == b.rho && a.len == b.len;
  }
};

// Builds a latroid from explicit values; InputError on size or width mismatch.
Latroid make_latroid(std::shared_ptr<const FiniteLattice> lat, std::vector<Scalar> rho,
                     std::vector<Scalar> len);

struct LatroidReport {
  bool valid = true;
  std::string axiom;  // "modular", "L1" .. "L5"
  std::size_t a = 0;
  std::size_t b = 0;
  std::string message;
};

// Lattice modularity, then L1-L5, each over all relevant pairs; the witness
// is the lowest pair (a, b) in element-index order.
LatroidReport validate_latroid(const Latroid& lt, Exec exec = Exec::Parallel);

Latroid free_latroid(std::shared_ptr<const FiniteLattice> lat);
Latroid free_latroid(std::shared_ptr<const FiniteLattice> lat, std::vector<Scalar> len);
// rho_a(L) = ||L|| if ||L|| <= a, a otherwise. InputError unless 0 < a.
Latroid uniform_latroid(std::shared_ptr<const FiniteLattice> lat, std::vector<Scalar> len,
                        const Scalar& a);
// Height as a u = 1 length function; NotGraded if the lattice is not graded.
std::vector<Scalar> height_length(const FiniteLattice& lat);

Latroid restrict_latroid(const Latroid& lt, std::size_t lo, std::size_t hi);
Latroid direct_sum(const Latroid& a, const Latroid& b);
// Dual element i corresponds to element size()-1-i of the original.
Latroid dual_latroid(const Latroid& lt);
// dual(restrict(lt, lo, hi)) == restrict(dual(lt), hi^perp, lo^perp).
bool dual_restriction_identity(const Latroid& lt, std::size_t lo, std::size_t hi);
// ||L^perp||^perp = ||1|| - ||L|| for every L.
bool dual_length_identity(const Latroid& lt);

using ElementSet = std::vector<std::size_t>;  // sorted element indices

ElementSet independents(const Latroid& lt);
ElementSet bases(const Latroid& lt);
ElementSet circuits(const Latroid& lt);

struct AxiomReport {
  bool ok = true;
  std::string axiom;
  std::vector<std::size_t> witness;
  std::string message;
};

// The set axioms need a complemented modular graded lattice; HypothesisError
// otherwise. B2 is checked with an exchange atom T <= B2, T !<= B1.
AxiomReport axioms_I(const FiniteLattice& lat, const ElementSet& indep);
AxiomReport axioms_B(const FiniteLattice& lat, const ElementSet& bases);
AxiomReport axioms_C(const FiniteLattice& lat, const ElementSet& circuits);
// True when len equals the height function and the lattice is complemented
// and modular: the setting where the set systems determine rho.
bool crypto_applicable(const Latroid& lt);

// Reconstructions with length = height. HypothesisError when the lattice
// hypotheses fail or the input is inconsistent (maximal members of
// different heights, circuit chains of different lengths).
std::vector<Scalar> rank_from_independents(const FiniteLattice& lat, const ElementSet& indep);
std::vector<Scalar> rank_from_bases(const FiniteLattice& lat, const ElementSet& bases);
std::vector<Scalar> rank_from_circuits(const FiniteLattice& lat, const ElementSet& circuits);
// Length of a greedy maximal chain of circuits dominated by `x`, extending
// with the lowest (or highest) admissible circuit first.
int circuit_chain_length(const FiniteLattice& lat, const ElementSet& circuits, std::size_t x,
                         bool lowest_first = true);

std::size_t closure(const Latroid& lt, std::size_t x);
ElementSet flats(const Latroid& lt);
// Flats with rho = rho(1) - 1 (u = 1 only).
ElementSet hyperplanes(const Latroid& lt);

// d_a for u = 1: the least ||L|| with ||L|| - rho(L) >= a, or 0 when no L
// qualifies.
Scalar gen_weight(const Latroid& lt, const Scalar& a);
// Any u: the minimal feasible lengths (an antichain), empty when none.
std::vector<Scalar> gen_weight_antichain(const Latroid& lt, const Scalar& a);

}  // namespace latroid
