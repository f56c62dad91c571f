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

#include "latroid/isometries.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "latroid/enumerators.hpp"
#include "latroid/errors.hpp"

namespace latroid {

RingMatrix::RingMatrix(Pir ring, int n)
    : ring_(std::move(ring)), n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  if (n < 1) throw InputError("matrix size must be positive");
}

RingMatrix RingMatrix::identity(const Pir& ring, int n) {
  RingMatrix m(ring, n);
  for (int i = 0; i < n; ++i) m.set(i, i, ring.one());
  return m;
}

RingMatrix RingMatrix::from_integers(const Pir& ring,
                                     const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  RingMatrix m(ring, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw InputError("matrix must be square");
    for (int j = 0; j < n; ++j) m.set(i, j, ring.from_integer(rows[i][j]));
  }
  return m;
}

RingMatrix RingMatrix::permutation(const Pir& ring, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i) throw InputError("not a permutation of 0..n-1");
  }
  RingMatrix m(ring, n);
  for (int i = 0; i < n; ++i) m.set(i, perm[i], ring.one());
  return m;
}

RingMatrix RingMatrix::diagonal(const Pir& ring, const std::vector<RingElement>& diag) {
  RingMatrix m(ring, static_cast<int>(diag.size()));
  for (int i = 0; i < m.n_; ++i) m.set(i, i, diag[i]);
  return m;
}

Vector RingMatrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != n_) throw InputError("vector length does not match the matrix");
  Vector out(v.size());
  for (int i = 0; i < n_; ++i) {
    RingElement acc = ring_.zero();
    for (int j = 0; j < n_; ++j) acc = ring_.add(acc, ring_.mul(at(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

VecKey RingMatrix::apply(const Ambient& amb, VecKey v) const { return amb.pack(apply(amb.unpack(v))); }

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
  if (!(ring_ == o.ring_) || n_ != o.n_) throw InputError("matrix shapes or rings differ");
  RingMatrix r(ring_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      RingElement acc = ring_.zero();
      for (int k = 0; k < n_; ++k) acc = ring_.add(acc, ring_.mul(at(i, k), o.at(k, j)));
      r.set(i, j, acc);
    }
  }
  return r;
}

RingMatrix RingMatrix::project(std::size_t f) const {
  RingMatrix r(ring_.factor_ring(f), n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) r.set(i, j, ring_.project(at(i, j), f));
  }
  return r;
}

bool RingMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j && at(i, j) != ring_.zero()) return false;
    }
  }
  return true;
}

bool RingMatrix::is_permutation() const {
  std::vector<int> col_ones(n_);
  for (int i = 0; i < n_; ++i) {
    int ones = 0;
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) == ring_.one()) {
        ++ones;
        ++col_ones[j];
      } else if (at(i, j) != ring_.zero()) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return std::all_of(col_ones.begin(), col_ones.end(), [](int c) { return c == 1; });
}

std::vector<std::vector<std::int64_t>> RingMatrix::to_integers() const {
  std::vector<std::vector<std::int64_t>> rows(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) rows[i].push_back(ring_.to_integer(at(i, j)));
  }
  return rows;
}

std::string RingMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (int i = 0; i < n_; ++i) {
    out << (i ? ", [" : "[");
    for (int j = 0; j < n_; ++j) out << (j ? ", " : "") << ring_.to_string(at(i, j));
    out << "]";
  }
  out << "]";
  return out.str();
}

namespace {

void require_matching(const RingMatrix& m, const SupportFn& s) {
  if (!(m.ring() == s.ambient().ring()) || m.n() != s.ambient().n()) {
    throw InputError("matrix and support live on different ambients");
  }
}

std::vector<VecKey> images(const RingMatrix& m, const Ambient& amb) {
  const VecKey total = amb.cardinality();
  require_cap(total, caps().ambient, "|R|^n");
  std::vector<VecKey> img(total);
  for_each_index(total, [&](std::size_t v) { img[v] = m.apply(amb, v); });
  return img;
}

}  // namespace

bool is_isometry(const RingMatrix& m, const SupportFn& s, Exec exec) {
  require_matching(m, s);
  const Ambient& amb = s.ambient();
  const VecKey total = amb.cardinality();
  require_cap(total, caps().ambient, "|R|^n");
  std::vector<VecKey> img(total);
  const std::size_t bad = first_index(total, [&](std::size_t v) {
    img[v] = m.apply(amb, v);
    return weight(s, img[v]) != weight(s, v);
  }, exec);
  if (bad != total) return false;
  std::vector<bool> seen(total);
  for (VecKey w : img) {
    if (seen[w]) return false;
    seen[w] = true;
  }
  return true;
}

RingMatrix inverse(const RingMatrix& m) {
  const Ambient amb(m.ring(), m.n());
  const auto img = images(m, amb);
  std::vector<VecKey> pre(img.size(), img.size());
  for (VecKey v = 0; v < img.size(); ++v) {
    if (pre[img[v]] != img.size()) throw InputError("matrix is not invertible");
    pre[img[v]] = v;
  }
  RingMatrix inv(m.ring(), m.n());
  for (int j = 0; j < m.n(); ++j) {
    Vector e(static_cast<std::size_t>(m.n()), m.ring().zero());
    e[j] = m.ring().one();
    const Vector col = amb.unpack(pre[amb.pack(e)]);
    for (int i = 0; i < m.n(); ++i) inv.set(i, j, col[i]);
  }
  return inv;
}

ChainDecomposition decompose_chain_isometry(const RingMatrix& m, const SupportFn& s) {
  require_matching(m, s);
  const Pir& ring = m.ring();
  if (!ring.is_chain_ring()) throw HypothesisError("decomposition needs a chain ring");
  if (!s.is_standard()) throw HypothesisError("decomposition needs a standard support");
  const SupportReport rep = validate_modular(s);
  if (!rep.valid) throw HypothesisError("decomposition needs a modular support: " + rep.message);
  if (!is_isometry(m, s)) throw HypothesisError("matrix is not an isometry");

  const int n = m.n();
  const RingElement one = ring.one();
  std::vector<std::int64_t> size_of_one(n);
  for (int i = 0; i < n; ++i) size_of_one[i] = norm1(s.coordinate_table(i)[one.index]);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return size_of_one[a] > size_of_one[b]; });

  // Peel columns in sorted order; each must hold one unit in a fresh row.
  std::vector<int> perm(n, -1);
  std::vector<RingElement> diag(n, ring.zero());
  for (int j : order) {
    int row = -1;
    for (int i = 0; i < n; ++i) {
      if (perm[i] == -1 && ring.is_unit(m.at(i, j))) {
        if (row != -1) throw Error("decomposition failed: column " + std::to_string(j) + " has two unit entries");
        row = i;
      }
    }
    if (row == -1) throw Error("decomposition failed: column " + std::to_string(j) + " has no free unit entry");
    if (size_of_one[row] != size_of_one[j]) {
      throw Error("decomposition failed: coordinates " + std::to_string(row) + " and " +
                  std::to_string(j) + " have different |supp_i(1)|");
    }
    perm[row] = j;
    diag[row] = m.at(row, j);
  }
  ChainDecomposition out{RingMatrix::diagonal(ring, diag), RingMatrix::permutation(ring, perm), perm};
  if (!(out.d * out.p == m)) throw Error("decomposition failed: N != D * P");
  return out;
}

std::vector<FactorMap> pir_isometry_projections(const RingMatrix& m, const SupportFn& s) {
  require_matching(m, s);
  if (!is_isometry(m, s)) throw HypothesisError("matrix is not an isometry");
  const SplitSupport split = split_support(s);
  std::vector<FactorMap> out;
  for (std::size_t f = 0; f < split.factors.size(); ++f) {
    RingMatrix mf = m.project(f);
    if (!is_isometry(mf, split.factors[f])) {
      throw Error("factor " + std::to_string(f) + " projection is not an isometry");
    }
    out.push_back({f, std::move(mf)});
  }
  return out;
}

namespace {

void all_gen_weights(const Code& c, const SupportFn& s, std::vector<std::int64_t>& dr,
                     std::vector<std::int64_t>& dbar) {
  const auto subs = enumerate_submodules(c);
  dr.assign(static_cast<std::size_t>(big_m(c)), -1);
  dbar.assign(static_cast<std::size_t>(length_lambda(c)), -1);
  for (const auto& d : subs) {
    const std::int64_t w = code_weight(s, d);
    const int md = big_m(d), ld = length_lambda(d);
    for (int r = 1; r <= md; ++r) {
      auto& x = dr[static_cast<std::size_t>(r - 1)];
      if (x < 0 || w < x) x = w;
    }
    for (int r = 1; r <= ld; ++r) {
      auto& x = dbar[static_cast<std::size_t>(r - 1)];
      if (x < 0 || w < x) x = w;
    }
  }
}

}  // namespace

EquivalenceReport equivalence_invariance_check(const Code& c, const RingMatrix& m,
                                               const SupportFn& s) {
  require_matching(m, s);
  const Code c2 = c.mapped(m.entries());
  EquivalenceReport rep;
  all_gen_weights(c, s, rep.dr1, rep.dbar1);
  all_gen_weights(c2, s, rep.dr2, rep.dbar2);
  rep.dist1 = weight_distribution(c, s);
  rep.dist2 = weight_distribution(c2, s);
  rep.ok = rep.dr1 == rep.dr2 && rep.dbar1 == rep.dbar2 && rep.dist1 == rep.dist2;
  return rep;
}

}  // namespace latroid
