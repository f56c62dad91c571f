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

// Latroids attached to codes: submodule-lattice latroids, the chain support
// latroid, rho^supp on rectangular modules, block-code matroids, rank-metric
// and sum-rank latroids; generalized weights with brute-force oracles.

#include <functional>
#include <string>
#include <vector>

#include "latroid/builders.hpp"
#include "latroid/codes.hpp"
#include "latroid/latroid.hpp"
#include "latroid/supports.hpp"

namespace latroid {

using LengthFn = std::function<Scalar(const Code&)>;
Scalar lambda_length(const Code& c);

// rho_C(M) = ||M|| - ||M cap C|| on a lattice of submodules. HypothesisError
// when ||.|| is not strictly increasing and modular on the lattice.
Latroid latroid_from_code(const Code& c, const SubmoduleLattice& lat, const LengthFn& length);

// Chain support latroid on the support grid: rho(P) = |P| - lambda(M_P cap C)
// computed per CRT factor (a Z^l-latroid; length is the per-factor 1-norm).
Latroid chain_support_latroid(const Code& c);
// The u = 1 collapse: sum of the factor coordinates of rho and length.
Latroid collapse_to_norm(const Latroid& lt);

// rho^supp(M) = supp(M) - supp(M cap C-bar) with length supp(M) on the
// rectangular module lattice. HypothesisError unless s is standard and
// modular.
Latroid rect_supp_latroid(const Code& c, const SupportFn& s, const RectangularLattice& lat);
// Same, but subtracting the support of the smallest rectangular module that
// contains M cap C. This differs from M cap C-bar on non-rectangular codes and
// can violate L4 (C = <(1,2)> in Z_4^2, M = Z_4 x 0).
Latroid rect_supp_closure_latroid(const Code& c, const SupportFn& s,
                                  const RectangularLattice& lat);

// rho(L) = |L| - dim C(L) on the Boolean lattice of [n]; C over a prime field.
Latroid block_matroid(const Code& c);

struct Block {
  int m = 1;  // rows
  int n = 1;  // columns
};

// F_q-linear code of block matrices; a codeword is the row-major
// concatenation of its blocks, stored as a Code over Z_q.
class MatrixCode {
 public:
  static MatrixCode from_generators(int q, std::vector<Block> blocks,
                                    const std::vector<std::vector<std::int64_t>>& generators);
  static MatrixCode from_code(int q, std::vector<Block> blocks, Code code);

  int q() const { return q_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Code& code() const { return code_; }
  int dim() const;
  // Rows (vectors in F_q^{n_b}) or columns (in F_q^{m_b}) of block b.
  std::vector<VecKey> rows(VecKey word, std::size_t b) const;
  std::vector<VecKey> columns(VecKey word, std::size_t b) const;
  // Block b of each codeword, as a one-block code.
  MatrixCode block_code(std::size_t b) const;

 private:
  MatrixCode(int q, std::vector<Block> blocks, Code code)
      : q_(q), blocks_(std::move(blocks)), code_(std::move(code)) {}
  std::int64_t entry(VecKey word, std::size_t b, int r, int c) const;

  int q_;
  std::vector<Block> blocks_;
  Code code_;
};

// Product code C_1 x C_2 of two matrix codes over the same field.
MatrixCode product_code(const MatrixCode& a, const MatrixCode& b);

// rho(V) = m dim V - dim C(V), C(V) = codewords with rowspace in V.
Latroid rank_metric_latroid(const MatrixCode& c, const SubspaceLattice& lat);
// rho~(V) = (dim C - dim C(V^perp)) / m with length dim V.
Latroid tilde_polymatroid(const MatrixCode& c, const SubspaceLattice& lat);

struct PolymatroidReport {
  bool ok = true;
  std::string axiom;  // "P1", "P2", "P3"
  std::size_t a = 0;
  std::size_t b = 0;
};
PolymatroidReport check_q_polymatroid(const SubspaceLattice& lat, const std::vector<Scalar>& rho);
// rho~(V) = (rho(V^perp) - m dim V^perp + dim C) / m for every V.
bool tilde_relation_holds(const MatrixCode& c, const SubspaceLattice& lat);

enum class SumRankConvention { Column, Row };
// Lattice: product over blocks of subspace lattices (of F_q^{m_i} for the
// column convention, F_q^{n_i} for the row convention). ||L|| = sum m_i dim V_i.
Latroid sum_rank_latroid(const MatrixCode& c, SumRankConvention conv);

// Generalized weights by brute force over submodules D of C:
// d_r uses M(D) >= r (1 <= r <= M(C)), dbar uses lambda(D) >= r
// (1 <= r <= lambda(C)). InputError for r out of range; Error when no
// submodule qualifies.
std::int64_t code_gen_weights_dr(const Code& c, const SupportFn& s, int r);
std::int64_t code_gen_weights_dbar(const Code& c, const SupportFn& s, int r);

struct WeightRow {
  int r = 0;
  Rational code_side;
  Rational latroid_side;
  bool equal = false;
};
struct WeightReport {
  bool all_equal = true;
  std::vector<WeightRow> rows;
};

// dbar_r(C) against d_r of the collapsed chain support latroid.
WeightReport latroid_weights_equal_code_weights(const Code& c);
// m * d_r(C) (subcode rowspace oracle) against d_r of the rank-metric
// latroid; HypothesisError unless m > n.
WeightReport rank_weights_equal(const MatrixCode& c);
// Equal m_i = m > n_i: m * min sum_i dim rowsp(D_i) against d_r of the
// row-convention sum-rank latroid.
WeightReport sum_rank_weights_equal(const MatrixCode& c);
// Block matroid d_r against min |supp(D)| over subcodes with dim D >= r.
WeightReport block_weights_equal(const Code& c);

}  // namespace latroid
