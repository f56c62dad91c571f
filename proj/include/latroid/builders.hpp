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

// Concrete lattices: subspaces of F_q^n, submodules of a code, the chain
// support grid and the lattice of rectangular submodules.

#include <bitset>
#include <memory>
#include <vector>

#include "latroid/codes.hpp"
#include "latroid/lattice.hpp"

namespace latroid {

// F_q^n with q prime is handled as Ambient(Z_q, n); vectors are VecKeys.
constexpr std::size_t kMaxSubspaceAmbient = 256;
using Members = std::bitset<kMaxSubspaceAmbient>;

struct SubspaceLattice {
  std::shared_ptr<const FiniteLattice> lattice;  // labels: RREF basis keys
  int q = 2;
  int n = 0;
  std::vector<Members> members;  // per element, indexed by VecKey
  std::vector<int> dims;
  std::vector<std::size_t> perp;  // element of the orthogonal complement

  Ambient space() const { return Ambient(Pir::chain(q, 1), n); }
  // Element spanned by the given vectors.
  std::size_t span_of(const std::vector<VecKey>& vectors) const;
};

// Rows in reduced row echelon form (nonzero rows only, pivot order).
std::vector<VecKey> rref(const Ambient& space, const std::vector<VecKey>& rows);
int rank_of(const Ambient& space, const std::vector<VecKey>& rows);
Members span_members(const Ambient& space, const std::vector<VecKey>& rows);

// All subspaces of F_q^n; CapExceeded unless q^n <= 256 and the count fits
// caps().lattice.
SubspaceLattice subspace_lattice(int q, int n);

struct SubmoduleLattice {
  std::shared_ptr<const FiniteLattice> lattice;  // labels: codeword keys
  std::vector<Code> modules;                     // indexed by element
};

SubmoduleLattice submodule_lattice(const Code& c);

// Grid of chain-support vectors of rectangular modules of R^n:
// {0..k_f} at position f * n + i.
FiniteLattice chain_support_lattice(const Ambient& amb);
// Rectangular module with the given chain-support vector, and back.
RectangularModule module_of_support_point(const Ambient& amb, const Label& point);
Label support_point_of_module(const Ambient& amb, const RectangularModule& m);

struct RectangularLattice {
  std::shared_ptr<const FiniteLattice> lattice;  // labels: flattened exponents
  std::vector<RectangularModule> modules;
};

RectangularLattice rectangular_lattice(const Ambient& amb);

}  // namespace latroid
