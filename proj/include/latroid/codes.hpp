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

// Vectors in R^n, R-linear codes as materialized codeword sets, submodule
// enumeration and the module invariants lambda, mu and M.

#include <cstdint>
#include <string>
#include <vector>

#include "latroid/chain_rings.hpp"
#include "latroid/lattice.hpp"

namespace latroid {

using Vector = std::vector<RingElement>;
// Vector packed in base |R| with coordinate 0 most significant, so the
// numeric order of keys is the lexicographic order of vectors.
using VecKey = std::uint64_t;

class Ambient {
 public:
  Ambient(Pir ring, int n);

  const Pir& ring() const { return ring_; }
  int n() const { return n_; }
  // |R|^n; InputError if it does not fit in 63 bits.
  std::uint64_t cardinality() const { return card_; }

  VecKey pack(const Vector& v) const;
  Vector unpack(VecKey key) const;
  RingElement entry(VecKey key, int i) const {
    return RingElement{static_cast<std::uint32_t>((key / place_[i]) % ring_.size())};
  }
  VecKey add(VecKey a, VecKey b) const;
  VecKey scale(RingElement r, VecKey a) const;
  VecKey neg(VecKey a) const;
  // Vector from integer entries (each reduced through Z -> R).
  Vector from_integers(const std::vector<std::int64_t>& row) const;
  std::string to_string(VecKey key) const;

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.ring_ == b.ring_ && a.n_ == b.n_;
  }

 private:
  Pir ring_;
  int n_;
  std::uint64_t card_;
  std::vector<std::uint64_t> place_;
};

class Code {
 public:
  // R-span of `generators`; CapExceeded above caps().codewords codewords.
  static Code span(const Ambient& amb, const std::vector<Vector>& generators);
  // Keys must describe a submodule; they are sorted and deduplicated.
  static Code from_keys(const Ambient& amb, std::vector<VecKey> keys);
  static Code zero(const Ambient& amb);
  static Code whole(const Ambient& amb);

  const Ambient& ambient() const { return amb_; }
  const Pir& ring() const { return amb_.ring(); }
  int n() const { return amb_.n(); }
  std::size_t size() const { return keys_.size(); }
  const std::vector<VecKey>& keys() const { return keys_; }
  std::vector<Vector> codewords() const;

  bool contains(VecKey key) const;
  bool is_subcode_of(const Code& other) const;
  Code intersect(const Code& other) const;
  Code sum(const Code& other) const;
  // pi_f(C) as a code over the factor ring R_f.
  Code project(std::size_t f) const;
  // r * C.
  Code scaled(RingElement r) const;
  // N * C for an n x n matrix given row-major.
  Code mapped(const std::vector<RingElement>& matrix) const;

  friend bool operator==(const Code& a, const Code& b) {
    return a.amb_ == b.amb_ && a.keys_ == b.keys_;
  }

 private:
  Code(Ambient amb, std::vector<VecKey> keys) : amb_(std::move(amb)), keys_(std::move(keys)) {}
  Ambient amb_;
  std::vector<VecKey> keys_;
};

// Exact log_p of a power of p; InputError if `value` is not one.
int exact_log(std::uint64_t value, std::int64_t p);

// lambda(C) = sum_f log_{p_f} |C_f|.
int length_lambda(const Code& c);
std::vector<int> lambda_factors(const Code& c);
// mu(C_f) = log_{p_f}(|C_f| / |alpha_f C_f|) per factor.
std::vector<int> mu_factors(const Code& c);
// Minimal number of generators of C: the largest per-factor mu.
int mu(const Code& c);
// M(C) = sum_f mu(C_f).
int big_m(const Code& c);

// All submodules of C, ordered by (size, codeword keys). CapExceeded when
// |C| > caps().submodule_code or the family exceeds caps().lattice.
std::vector<Code> enumerate_submodules(const Code& c);

// I_1 x ... x I_n; ideals[i] has one exponent per CRT factor.
struct RectangularModule {
  std::vector<Ideal> ideals;
  friend auto operator<=>(const RectangularModule&, const RectangularModule&) = default;
};

RectangularModule rectangular_closure(const Code& c);
Code rectangular_code(const Ambient& amb, const RectangularModule& m);
// All rectangular modules of R^n in lexicographic exponent order.
std::vector<RectangularModule> all_rectangular_modules(const Ambient& amb);
bool rect_leq(const RectangularModule& a, const RectangularModule& b);

}  // namespace latroid
