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

// Arithmetic in finite chain rings Z_{p^k} and in finite principal ideal rings
// given in CRT-factored form Z_{p1^k1} x ... x Z_{pl^kl}.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latroid {

class FiniteLattice;

struct ChainRingSpec {
  std::int64_t p = 2;
  int k = 1;

  std::int64_t modulus() const;  // p^k
  friend bool operator==(const ChainRingSpec&, const ChainRingSpec&) = default;
};

// Element of a Pir, stored as its mixed-radix index in [0, |R|): coordinate 0
// is the least significant digit.
struct RingElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

// (alpha_1^{e_1}) x ... x (alpha_l^{e_l}); e_f in [0, k_f].
struct Ideal {
  std::vector<int> exponents;
  friend auto operator<=>(const Ideal&, const Ideal&) = default;
};

std::int64_t residue_field_size(const ChainRingSpec& spec);

// Largest t with alpha^t | r in Z_{p^k}; valuation(0) = k.
int valuation(const ChainRingSpec& spec, std::int64_t r);

class Pir {
 public:
  explicit Pir(std::vector<ChainRingSpec> factors);
  static Pir chain(std::int64_t p, int k) { return Pir({ChainRingSpec{p, k}}); }

  std::size_t num_factors() const { return factors_.size(); }
  const ChainRingSpec& factor(std::size_t f) const { return factors_[f]; }
  std::span<const ChainRingSpec> factors() const { return factors_; }
  Pir factor_ring(std::size_t f) const { return Pir({factors_[f]}); }

  std::uint32_t size() const { return size_; }
  bool is_chain_ring() const { return factors_.size() == 1; }
  bool is_field() const { return is_chain_ring() && factors_[0].k == 1; }

  RingElement zero() const { return {}; }
  RingElement one() const { return from_integer(1); }

  RingElement add(RingElement a, RingElement b) const;
  RingElement sub(RingElement a, RingElement b) const;
  RingElement mul(RingElement a, RingElement b) const;
  RingElement neg(RingElement a) const;
  bool is_unit(RingElement a) const;
  std::optional<RingElement> inverse(RingElement a) const;

  std::int64_t coord(RingElement a, std::size_t f) const {
    return (static_cast<std::int64_t>(a.index) / strides_[f]) % moduli_[f];
  }
  std::vector<std::int64_t> coords(RingElement a) const;
  // Throws InputError on a coordinate-count mismatch; residues are reduced.
  RingElement from_coords(std::span<const std::int64_t> coords) const;
  // Image of an integer under Z -> R.
  RingElement from_integer(std::int64_t value) const;
  RingElement element(std::uint32_t index) const;
  // Representative in [0, prod of moduli) by CRT; InputError when the moduli
  // are not pairwise coprime and no representative exists.
  std::int64_t to_integer(RingElement a) const;

  int valuation(RingElement a, std::size_t f = 0) const;
  // Factor-f component as an element of factor_ring(f).
  RingElement project(RingElement a, std::size_t f) const {
    return RingElement{static_cast<std::uint32_t>(coord(a, f))};
  }
  // Element whose factor-f coordinate is x (an element of factor_ring(f)) and
  // every other coordinate is zero.
  RingElement embed(std::size_t f, RingElement x) const;
  // alpha_f^e in factor f, zero elsewhere.
  RingElement alpha_power(std::size_t f, int e) const;

  bool in_ideal(RingElement a, const Ideal& ideal) const;
  std::uint64_t ideal_size(const Ideal& ideal) const;

  std::string to_string(RingElement a) const;
  std::string name() const;

  friend bool operator==(const Pir& a, const Pir& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<ChainRingSpec> factors_;
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> strides_;
  std::uint32_t size_ = 1;
};

// Lattice of ideals ordered by inclusion; labels are the exponent tuples.
FiniteLattice ideal_lattice(const Pir& ring);

}  // namespace latroid
