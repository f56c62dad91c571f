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

// Support functions R^n -> Z^u, their axioms, weights and CRT splitting.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latroid/codes.hpp"
#include "latroid/kernels.hpp"

namespace latroid {

using SupportVec = std::vector<std::int32_t>;

enum class SupportKind { Hamming, Chain, Product, Custom };

// A support on R^n. Standard supports (Hamming, Chain, Product) are stored as
// one table per coordinate, R -> Z^{u_i}, together with the output position
// of every table entry; Custom supports carry a full table indexed by VecKey.
class SupportFn {
 public:
  // Indicator of r != 0 per coordinate (u = n).
  static SupportFn hamming(const Ambient& amb);
  // k_f - valuation_f(r) per coordinate and factor. Over a CRT product the
  // layout is factor-major: position f * n + i (u = l * n).
  static SupportFn chain(const Ambient& amb);
  // Coordinate i uses per_coordinate[i], a support on R^1; outputs are
  // concatenated in coordinate order.
  static SupportFn product(const Ambient& amb, const std::vector<SupportFn>& per_coordinate);
  // Per-coordinate table r -> Z^{u_1}, the same for every coordinate.
  static SupportFn standard(const Ambient& amb, const std::vector<SupportVec>& table);
  // Full table indexed by VecKey. Throws InputError naming the failed axiom
  // unless axioms 1-3 hold.
  static SupportFn from_table(const Ambient& amb, int u, std::vector<SupportVec> table);

  const Ambient& ambient() const { return amb_; }
  int u() const { return u_; }
  SupportKind kind() const { return kind_; }
  bool is_standard() const { return kind_ != SupportKind::Custom; }

  SupportVec eval(VecKey v) const;
  SupportVec eval(const Vector& v) const { return eval(amb_.pack(v)); }
  // supp(R^n).
  SupportVec top() const { return top_; }
  // Standard supports only: per-coordinate table and output positions.
  const std::vector<SupportVec>& coordinate_table(int i) const { return coord_tables_[i]; }
  const std::vector<int>& coordinate_layout(int i) const { return layout_[i]; }

 private:
  SupportFn(Ambient amb, int u, SupportKind kind) : amb_(std::move(amb)), u_(u), kind_(kind) {}
  void finish();

  Ambient amb_;
  int u_;
  SupportKind kind_;
  std::vector<std::vector<SupportVec>> coord_tables_;  // [i][r]
  std::vector<std::vector<int>> layout_;              // [i][j] -> output position
  std::vector<SupportVec> table_;                      // Custom: [key]
  SupportVec top_;
};

SupportVec join(const SupportVec& a, const SupportVec& b);
SupportVec meet(const SupportVec& a, const SupportVec& b);
bool leq(const SupportVec& a, const SupportVec& b);
std::int64_t norm1(const SupportVec& a);
std::string to_string(const SupportVec& a);

// supp(X) = join of supp(x) over x in X (zero for an empty X).
SupportVec set_support(const SupportFn& s, const std::vector<VecKey>& xs);
SupportVec code_support(const SupportFn& s, const Code& c);
std::int64_t weight(const SupportFn& s, VecKey v);
std::int64_t code_weight(const SupportFn& s, const Code& c);
struct MinMaxWeight {
  std::int64_t min;
  std::int64_t max;
};
// InputError for the zero code.
MinMaxWeight min_max_weight(const SupportFn& s, const Code& c);

// First violated axiom and its lowest witness in lexicographic key order.
struct SupportReport {
  bool valid = true;
  int axiom = 0;  // 1..4
  VecKey v = 0;
  VecKey w = 0;
  std::optional<RingElement> r;
  int coordinate = -1;
  std::string message;
};

// Axioms 1-3 of a table R^n -> Z^u (exhaustive).
SupportReport validate_table(const Ambient& amb, int u, const std::vector<SupportVec>& table,
                             Exec exec = Exec::Parallel);
SupportReport validate_support(const SupportFn& s, Exec exec = Exec::Parallel);
// Axiom 4: for supp(v)_i > 0 with supp(v)_i <= supp(w)_i some r gives
// supp(v + r w)_i < supp(v)_i.
SupportReport validate_modular(const SupportFn& s, Exec exec = Exec::Parallel);

// supp = (supp_1 x ... x supp_l) o perm: output coordinate j of s equals
// coordinate j' of the concatenated factor supports where perm[j'] = j.
struct SplitSupport {
  std::vector<SupportFn> factors;  // factor f acts on R_f^n
  std::vector<int> permutation;    // position in concatenation -> position in s
};
// HypothesisError when s is not modular or a coordinate depends on more than
// one factor.
SplitSupport split_support(const SupportFn& s);
// Exhaustively checks that the split recombines to s.
bool recombines(const SupportFn& s, const SplitSupport& split);
// Same values on every vector.
bool same_values(const SupportFn& a, const SupportFn& b);

}  // namespace latroid
