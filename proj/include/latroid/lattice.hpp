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

// Explicit finite lattices: order, join/meet tables, atoms, covers, height and
// the structural predicates (graded, modular, distributive, complemented,
// relatively complemented).
//
// Invariant: element indices form a linear extension of the order, so index 0
// is the bottom, size()-1 is the top, and i <= j in the lattice implies
// i <= j as integers. All witness reporting uses this index order.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "latroid/kernels.hpp"

namespace latroid {

using Label = std::vector<std::int64_t>;

struct LatticeFlags {
  bool graded = false;
  bool modular = false;
  bool distributive = false;
  bool complemented = false;
  bool relatively_complemented = false;
};

class FiniteLattice {
 public:
  FiniteLattice() = default;

  // Builds the lattice of `labels` under `leq` (which receives positions in
  // `labels`). Throws InputError when leq is not a partial order or some pair
  // lacks a join or meet; CapExceeded above caps().lattice elements.
  // `labels_are_points` marks labels as integer vectors whose product order is
  // the lattice order (grid lattices).
  static FiniteLattice from_order(std::vector<Label> labels,
                                  const std::function<bool(std::size_t, std::size_t)>& leq,
                                  bool labels_are_points = false, Exec exec = Exec::Parallel);

  std::size_t size() const { return n_; }
  const Label& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> find(const Label& label) const;
  std::size_t index_of(const Label& label) const;  // throws InputError if absent
  bool has_points() const { return points_; }

  bool leq(std::size_t a, std::size_t b) const {
    return (up_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return n_ - 1; }

  const std::vector<std::size_t>& atoms() const { return atoms_; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return covers_[a]; }
  // Elements of [a, b] in index order.
  std::vector<std::size_t> interval_elements(std::size_t a, std::size_t b) const;

  bool is_graded() const { return graded_; }
  int height(std::size_t a) const;  // NotGraded when !is_graded()

  // Cached predicate flags (computed on first use with the parallel kernels).
  const LatticeFlags& flags() const;

  // Same order, new labels.
  FiniteLattice relabeled(std::vector<Label> labels, bool labels_are_points) const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.labels_ == b.labels_ && a.up_ == b.up_;
  }

 private:
  struct FlagCache {
    std::once_flag once;
    LatticeFlags flags;
  };

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  bool points_ = false;
  std::vector<Label> labels_;
  std::map<Label, std::size_t> index_;
  std::vector<std::uint64_t> up_;    // row a: bitset {b : a <= b}
  std::vector<std::uint64_t> down_;  // row b: bitset {a : a <= b}
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::size_t> atoms_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<int> height_;
  bool graded_ = false;
  std::shared_ptr<FlagCache> cache_ = std::make_shared<FlagCache>();

  void derive_structure();
};

// Uncached predicate evaluation with an explicit execution policy.
LatticeFlags compute_predicates(const FiniteLattice& lat, Exec exec = Exec::Parallel);
bool is_modular(const FiniteLattice& lat, Exec exec = Exec::Parallel);
bool is_distributive(const FiniteLattice& lat, Exec exec = Exec::Parallel);
bool is_complemented(const FiniteLattice& lat, Exec exec = Exec::Parallel);
bool is_relatively_complemented(const FiniteLattice& lat, Exec exec = Exec::Parallel);
// Graded with hgt(L)+hgt(M) = hgt(L v M)+hgt(L ^ M) for all pairs.
bool height_is_modular(const FiniteLattice& lat);

// [a, b] as a lattice; labels are inherited. Throws InputError if a !<= b.
FiniteLattice interval(const FiniteLattice& lat, std::size_t a, std::size_t b);
// Order-reversed lattice. Element L^perp keeps the label of L; index i of the
// dual is index size()-1-i of the original.
FiniteLattice dual(const FiniteLattice& lat);
// Componentwise product; index (i, j) maps to i * b.size() + j. Point labels
// concatenate; other labels are stored as [len(a-label), a-label..., b-label...].
FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b);
std::size_t product_index(const FiniteLattice& b, std::size_t i, std::size_t j);

// {0..m_1} x ... x {0..m_u} with componentwise order.
FiniteLattice grid_lattice(const std::vector<int>& maxima);
FiniteLattice boolean_lattice(int n);
// Chain lattice 0 < 1 < ... < length.
FiniteLattice chain_lattice(int length);

struct AtomsJoinReport {
  bool ok = true;
  std::optional<std::size_t> failing_element;
};
// Checks that every element is the join of the atoms below it.
AtomsJoinReport atoms_join_check(const FiniteLattice& lat);

}  // namespace latroid
