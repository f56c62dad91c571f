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

#include "latroid/chain_rings.hpp"

#include <numeric>
#include <tuple>
#include <utility>

#include "latroid/errors.hpp"
#include "latroid/lattice.hpp"

namespace latroid {
namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::int64_t ChainRingSpec::modulus() const {
  std::int64_t m = 1;
  for (int i = 0; i < k; ++i) {
    if (__builtin_mul_overflow(m, p, &m)) throw InputError("ring modulus overflows");
  }
  return m;
}

std::int64_t residue_field_size(const ChainRingSpec& spec) { return spec.p; }

int valuation(const ChainRingSpec& spec, std::int64_t r) {
  r = mod(r, spec.modulus());
  if (r == 0) return spec.k;
  int t = 0;
  while (r % spec.p == 0) {
    r /= spec.p;
    ++t;
  }
  return t;
}

Pir::Pir(std::vector<ChainRingSpec> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InputError("a ring needs at least one chain-ring factor");
  std::int64_t stride = 1;
  for (const auto& f : factors_) {
    if (!is_prime(f.p)) throw InputError("Z_{p^k} needs p prime, got p=" + std::to_string(f.p));
    if (f.k < 1) throw InputError("Z_{p^k} needs k >= 1");
    const std::int64_t m = f.modulus();
    moduli_.push_back(m);
    strides_.push_back(stride);
    if (__builtin_mul_overflow(stride, m, &stride) || stride > (std::int64_t{1} << 30)) {
      throw CapExceeded("ring too large: |R| must stay below 2^30");
    }
  }
  size_ = static_cast<std::uint32_t>(stride);
}

RingElement Pir::element(std::uint32_t index) const {
  if (index >= size_) throw InputError("ring element index out of range");
  return RingElement{index};
}

std::vector<std::int64_t> Pir::coords(RingElement a) const {
  std::vector<std::int64_t> out(factors_.size());
  for (std::size_t f = 0; f < factors_.size(); ++f) out[f] = coord(a, f);
  return out;
}

RingElement Pir::from_coords(std::span<const std::int64_t> c) const {
  if (c.size() != factors_.size()) {
    throw InputError("ring element has " + std::to_string(c.size()) + " coordinates, ring " +
                     name() + " has " + std::to_string(factors_.size()) + " factors");
  }
  std::int64_t idx = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) idx += mod(c[f], moduli_[f]) * strides_[f];
  return RingElement{static_cast<std::uint32_t>(idx)};
}

RingElement Pir::from_integer(std::int64_t value) const {
  std::int64_t idx = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) idx += mod(value, moduli_[f]) * strides_[f];
  return RingElement{static_cast<std::uint32_t>(idx)};
}

RingElement Pir::add(RingElement a, RingElement b) const {
  if (factors_.size() == 1) {
    return RingElement{static_cast<std::uint32_t>((a.index + b.index) % size_)};
  }
  std::int64_t idx = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    idx += ((coord(a, f) + coord(b, f)) % moduli_[f]) * strides_[f];
  }
  return RingElement{static_cast<std::uint32_t>(idx)};
}

RingElement Pir::neg(RingElement a) const {
  std::int64_t idx = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    idx += ((moduli_[f] - coord(a, f)) % moduli_[f]) * strides_[f];
  }
  return RingElement{static_cast<std::uint32_t>(idx)};
}

RingElement Pir::sub(RingElement a, RingElement b) const { return add(a, neg(b)); }

RingElement Pir::mul(RingElement a, RingElement b) const {
  if (factors_.size() == 1) {
    const auto prod = static_cast<std::uint64_t>(a.index) * b.index;
    return RingElement{static_cast<std::uint32_t>(prod % size_)};
  }
  std::int64_t idx = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    idx += ((coord(a, f) * coord(b, f)) % moduli_[f]) * strides_[f];
  }
  return RingElement{static_cast<std::uint32_t>(idx)};
}

bool Pir::is_unit(RingElement a) const {
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (coord(a, f) % factors_[f].p == 0) return false;
  }
  return true;
}

std::optional<RingElement> Pir::inverse(RingElement a) const {
  if (!is_unit(a)) return std::nullopt;
  std::vector<std::int64_t> inv(factors_.size());
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    // extended Euclid on (coord, modulus)
    std::int64_t r0 = moduli_[f], r1 = coord(a, f), s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    inv[f] = mod(s0, moduli_[f]);
  }
  return from_coords(inv);
}

int Pir::valuation(RingElement a, std::size_t f) const {
  return latroid::valuation(factors_[f], coord(a, f));
}

RingElement Pir::embed(std::size_t f, RingElement x) const {
  return RingElement{static_cast<std::uint32_t>(mod(x.index, moduli_[f]) * strides_[f])};
}

RingElement Pir::alpha_power(std::size_t f, int e) const {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= factors_[f].p;
  return embed(f, RingElement{static_cast<std::uint32_t>(mod(v, moduli_[f]))});
}

bool Pir::in_ideal(RingElement a, const Ideal& ideal) const {
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (valuation(a, f) < ideal.exponents.at(f)) return false;
  }
  return true;
}

std::uint64_t Pir::ideal_size(const Ideal& ideal) const {
  std::uint64_t s = 1;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    for (int i = 0; i < factors_[f].k - ideal.exponents.at(f); ++i) s *= factors_[f].p;
  }
  return s;
}

std::int64_t Pir::to_integer(RingElement a) const {
  std::int64_t x = 0, m = 1;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    const std::int64_t target = coord(a, f);
    std::int64_t t = 0;
    while (t < moduli_[f] && mod(x + t * m, moduli_[f]) != target) ++t;
    if (t == moduli_[f]) throw InputError("element of " + name() + " has no integer representative");
    x += t * m;
    m *= moduli_[f];
  }
  return x;
}

std::string Pir::to_string(RingElement a) const {
  if (factors_.size() == 1) return std::to_string(a.index);
  std::string s = "(";
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (f) s += ",";
    s += std::to_string(coord(a, f));
  }
  return s + ")";
}

std::string Pir::name() const {
  std::string s;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    if (f) s += " x ";
    s += "Z_{" + std::to_string(factors_[f].p) + "^" + std::to_string(factors_[f].k) + "}";
  }
  return s;
}

FiniteLattice ideal_lattice(const Pir& ring) {
  // Ideal containment is the reversed exponent order, i.e. a grid in the
  // co-exponents k_f - e_f.
  std::vector<int> maxima;
  for (const auto& f : ring.factors()) maxima.push_back(f.k);
  const FiniteLattice grid = grid_lattice(maxima);
  std::vector<Label> labels;
  labels.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Label exps = grid.label(i);
    for (std::size_t f = 0; f < exps.size(); ++f) exps[f] = maxima[f] - exps[f];
    labels.push_back(std::move(exps));
  }
  return grid.relabeled(std::move(labels), /*labels_are_points=*/false);
}

}  // namespace latroid
