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

// Weight-preserving linear maps of R^n.

#include <cstdint>
#include <string>
#include <vector>

#include "latroid/chain_rings.hpp"
#include "latroid/codes.hpp"
#include "latroid/kernels.hpp"
#include "latroid/supports.hpp"

namespace latroid {

class RingMatrix {
 public:
  RingMatrix(Pir ring, int n);  // zero matrix

  static RingMatrix identity(const Pir& ring, int n);
  // Square integer rows reduced into the ring.
  static RingMatrix from_integers(const Pir& ring, const std::vector<std::vector<std::int64_t>>& rows);
  // Entry (i, perm[i]) = 1, so (Pv)_i = v_{perm[i]}.
  static RingMatrix permutation(const Pir& ring, const std::vector<int>& perm);
  static RingMatrix diagonal(const Pir& ring, const std::vector<RingElement>& diag);

  const Pir& ring() const { return ring_; }
  int n() const { return n_; }
  RingElement at(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, RingElement x) { a_[static_cast<std::size_t>(i * n_ + j)] = x; }
  const std::vector<RingElement>& entries() const { return a_; }

  Vector apply(const Vector& v) const;
  VecKey apply(const Ambient& amb, VecKey v) const;
  RingMatrix operator*(const RingMatrix& o) const;
  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.ring_ == b.ring_ && a.n_ == b.n_ && a.a_ == b.a_;
  }

  // Entrywise image in factor_ring(f).
  RingMatrix project(std::size_t f) const;
  bool is_diagonal() const;
  bool is_permutation() const;

  std::vector<std::vector<std::int64_t>> to_integers() const;
  std::string to_string() const;

 private:
  Pir ring_;
  int n_;
  std::vector<RingElement> a_;
};

// v -> Nv is a bijection of R^n with wt(Nv) = wt(v) for every v; exhaustive.
bool is_isometry(const RingMatrix& m, const SupportFn& s, Exec exec = Exec::Parallel);

// Inverse by exhaustive preimage search; InputError if m is not invertible.
RingMatrix inverse(const RingMatrix& m);

struct ChainDecomposition {
  RingMatrix d;
  RingMatrix p;
  std::vector<int> perm;  // p = permutation(perm)
};
// N = D * P for an isometry of a chain ring with a standard modular support.
ChainDecomposition decompose_chain_isometry(const RingMatrix& m, const SupportFn& s);

struct FactorMap {
  std::size_t factor;
  RingMatrix matrix;
};
// Factor maps of an isometry over a PIR; each is checked to be an isometry of
// R_f^n under the matching factor of split_support(s).
std::vector<FactorMap> pir_isometry_projections(const RingMatrix& m, const SupportFn& s);

struct EquivalenceReport {
  bool ok = false;
  std::vector<std::int64_t> dr1, dr2;      // d_r, r = 1..M
  std::vector<std::int64_t> dbar1, dbar2;  // dbar_r, r = 1..lambda
  std::vector<std::int64_t> dist1, dist2;  // weight distributions
};
// Compares C and N * C.
EquivalenceReport equivalence_invariance_check(const Code& c, const RingMatrix& m,
                                               const SupportFn& s);

}  // namespace latroid
