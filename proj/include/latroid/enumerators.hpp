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

// Exact multivariate polynomials, weight enumerators and the weighted
// Tutte-Whitney generating functions.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "latroid/codes.hpp"
#include "latroid/latroid.hpp"
#include "latroid/supports.hpp"

namespace latroid {

struct VarGroup {
  std::string name;
  int size = 0;
  friend bool operator==(const VarGroup&, const VarGroup&) = default;
};

using Exponents = std::vector<std::int32_t>;

// Graded-lex: higher total degree first, then lexicographically larger first.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class ExpPoly {
 public:
  using Terms = std::map<Exponents, std::int64_t, GradedLex>;

  explicit ExpPoly(std::vector<VarGroup> layout);

  const std::vector<VarGroup>& layout() const { return layout_; }
  int num_vars() const { return nvars_; }
  int offset(const std::string& group) const;  // throws InputError if absent
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, std::int64_t coeff);
  std::int64_t coefficient(const Exponents& e) const;
  // Value at all variables = 1.
  std::int64_t sum_of_coefficients() const;

  ExpPoly operator+(const ExpPoly& o) const;
  ExpPoly operator-(const ExpPoly& o) const;
  ExpPoly operator*(const ExpPoly& o) const;
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
    return a.layout_ == b.layout_ && a.terms_ == b.terms_;
  }

  // Sets every variable of `group` to 1 and removes the group.
  ExpPoly set_group_to_one(const std::string& group) const;
  // Variable i moves to index var_map[i] of a polynomial with `layout`.
  ExpPoly remap(std::vector<VarGroup> layout, const std::vector<int>& var_map) const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static ExpPoly from_json(const nlohmann::json& j);

 private:
  void check_layout(const ExpPoly& o) const;

  std::vector<VarGroup> layout_;
  int nvars_ = 0;
  Terms terms_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, std::int64_t e);

// Layout (x: u, y: u) with u = s.u().
ExpPoly refined_enumerator(const Code& c, const SupportFn& s);
// Layout (x: 1, y: 1).
ExpPoly homogeneous_enumerator(const Code& c, const SupportFn& s);
// A_w for w = 0..wt(R^n).
std::vector<std::int64_t> weight_distribution(const Code& c, const SupportFn& s);

// table[r][w] = #{D <= C : lambda(D) = r, wt(D) = w}, r in [0, lambda(C)],
// w in [0, wt(R^n)].
std::vector<std::vector<std::int64_t>> generalized_distributions(const Code& c,
                                                                 const SupportFn& s);
// sum_w A^(r)_w x^{wt(R^n) - w} y^w on layout (x: 1, y: 1).
ExpPoly generalized_enumerator(const Code& c, const SupportFn& s, int r);
// min{w : A^(j)_w != 0 for some j >= r}, 1 <= r <= lambda(C).
std::int64_t dbar_from_distributions(const std::vector<std::vector<std::int64_t>>& table, int r);

// Lattice labels must be integer points. Layout (x: g, y: g, u: w, v: w) with
// g the label width and w = lt.u(); exponents of u and v must be integral.
ExpPoly tutte_whitney_R(const Latroid& lt);
// Layout (x: g, z: g, y: g, u: w, v: w).
ExpPoly tutte_whitney_Rprime(const Latroid& lt);

// Substitutes z = (y - x) / y, u = 1, v_f = v_values[f] into an R' polynomial.
// The y-denominator is cleared termwise; throws Error if it does not divide.
ExpPoly substitute_tutte(const ExpPoly& rprime, const std::vector<std::int64_t>& v_values);

// Refined enumerator for the chain support, computed from R' of the chain
// support latroid with v_f = |R_f / (alpha_f)|.
ExpPoly enumerator_from_tutte(const Code& c);

// Product over factors of the refined enumerators of C_f under the factors of
// split_support(s), mapped back to the variables of s.
ExpPoly enumerator_product(const Code& c, const SupportFn& s);

struct CorollaryReport {
  bool rprime_factors = false;     // R'(C) = prod_f R'(C_f)
  bool enumerator_matches = false;  // prod_f subst(R'(C_f)) = W_C
  bool ok() const { return rprime_factors && enumerator_matches; }
};
CorollaryReport pir_tutte_corollary(const Code& c);

struct IdentityReport {
  bool ok = true;
  std::size_t checked = 0;
  Label failing;
  std::string message;
};
// n_C(A) against the alternating sum of |C_B| over every grid point A of the
// chain support lattice.
IdentityReport inclusion_exclusion_check(const Code& c);
// x^B (y - x)^{1 - B} = sum_{B <= A <= 1} (-1)^{|A| - |B|} x^A y^{1 - A} for
// every 0/1 vector B.
IdentityReport binomial_identity_check(int u);
// The same sum against y^B (y - x)^{1 - B}; fails for every u >= 1 (at B = 1
// the left side is y^1 and the right side x^1).
IdentityReport binomial_identity_check_y_lead(int u);

}  // namespace latroid
