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

#include "latroid/code_latroids.hpp"

#include <algorithm>
#include <limits>

#include "latroid/errors.hpp"

namespace latroid {
namespace {

Scalar ints_scalar(const SupportVec& v) {
  std::vector<std::int64_t> xs(v.begin(), v.end());
  return Scalar::from_ints(xs);
}

// Codewords of c lying in the rectangular module m.
Code meet_rectangular(const Code& c, const RectangularModule& m) {
  std::vector<VecKey> keys;
  for (VecKey k : c.keys()) {
    bool inside = true;
    for (int i = 0; i < c.n() && inside; ++i) {
      inside = c.ring().in_ideal(c.ambient().entry(k, i), m.ideals[i]);
    }
    if (inside) keys.push_back(k);
  }
  return Code::from_keys(c.ambient(), std::move(keys));
}

int field_dim(std::size_t count, int q) { return exact_log(count, q); }

void require_field(const Pir& ring) {
  if (!ring.is_field()) throw InputError("this construction needs a code over a prime field");
}

// Rank of all rows of block b over the codewords of d.
int block_rowspace_dim(const MatrixCode& mc, const Code& d, std::size_t b) {
  const Ambient space(Pir::chain(mc.q(), 1), mc.blocks()[b].n);
  std::vector<VecKey> rows;
  for (VecKey w : d.keys()) {
    for (auto r : mc.rows(w, b)) rows.push_back(r);
  }
  return rank_of(space, rows);
}

// Min over subcodes D with dim D >= r of `cost(D)`.
template <class Cost>
std::int64_t subcode_min(const std::vector<Code>& subs, int q, int r, Cost&& cost) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& d : subs) {
    if (field_dim(d.size(), q) >= r) best = std::min<std::int64_t>(best, cost(d));
  }
  return best;
}

void add_row(WeightReport& rep, int r, Rational code_side, Rational latroid_side) {
  const bool eq = code_side == latroid_side;
  rep.rows.push_back({r, code_side, latroid_side, eq});
  rep.all_equal = rep.all_equal && eq;
}

}  // namespace

Scalar lambda_length(const Code& c) { return Scalar::of(length_lambda(c)); }

Latroid latroid_from_code(const Code& c, const SubmoduleLattice& lat, const LengthFn& length) {
  std::vector<Scalar> rho, len;
  for (const auto& m : lat.modules) {
    len.push_back(length(m));
    rho.push_back(len.back() - length(m.intersect(c)));
  }
  const LatroidReport rep = validate_latroid(free_latroid(lat.lattice, len));
  if (!rep.valid) {
    throw HypothesisError("length function is not a strictly increasing modular function: " +
                          rep.message);
  }
  return make_latroid(lat.lattice, std::move(rho), std::move(len));
}

Latroid chain_support_latroid(const Code& c) {
  const Ambient& amb = c.ambient();
  auto lat = std::make_shared<const FiniteLattice>(chain_support_lattice(amb));
  const std::size_t l = amb.ring().num_factors();
  const auto n = static_cast<std::size_t>(amb.n());
  std::vector<Scalar> rho(lat->size()), len(lat->size());
  for_each_index(lat->size(), [&](std::size_t x) {
    const Label& p = lat->label(x);
    const auto lambdas = lambda_factors(meet_rectangular(c, module_of_support_point(amb, p)));
    std::vector<std::int64_t> r(l), s(l);
    for (std::size_t f = 0; f < l; ++f) {
      for (std::size_t i = 0; i < n; ++i) s[f] += p[f * n + i];
      r[f] = s[f] - lambdas[f];
    }
    rho[x] = Scalar::from_ints(r);
    len[x] = Scalar::from_ints(s);
  });
  return make_latroid(std::move(lat), std::move(rho), std::move(len));
}

Latroid collapse_to_norm(const Latroid& lt) {
  std::vector<Scalar> rho, len;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    rho.emplace_back(std::vector<Rational>{lt.rho[i].norm1()});
    len.emplace_back(std::vector<Rational>{lt.len[i].norm1()});
  }
  return make_latroid(lt.lattice, std::move(rho), std::move(len));
}

namespace {

template <class Subtrahend>
Latroid rect_supp_impl(const Code& c, const SupportFn& s, const RectangularLattice& lat,
                       Subtrahend&& sub) {
  if (!s.is_standard()) throw HypothesisError("rho^supp needs a standard support");
  const SupportReport rep = validate_modular(s);
  if (!rep.valid) throw HypothesisError("rho^supp needs a modular support: " + rep.message);
  const Ambient& amb = c.ambient();
  std::vector<Scalar> rho, len;
  for (const auto& m : lat.modules) {
    const SupportVec sm = code_support(s, rectangular_code(amb, m));
    const SupportVec sc = code_support(s, rectangular_code(amb, sub(m)));
    len.push_back(ints_scalar(sm));
    rho.push_back(len.back() - ints_scalar(sc));
  }
  return make_latroid(lat.lattice, std::move(rho), std::move(len));
}

}  // namespace

Latroid rect_supp_latroid(const Code& c, const SupportFn& s, const RectangularLattice& lat) {
  const Code cbar = rectangular_code(c.ambient(), rectangular_closure(c));
  return rect_supp_impl(c, s, lat, [&](const RectangularModule& m) {
    return rectangular_closure(meet_rectangular(cbar, m));
  });
}

Latroid rect_supp_closure_latroid(const Code& c, const SupportFn& s,
                                  const RectangularLattice& lat) {
  return rect_supp_impl(c, s, lat, [&](const RectangularModule& m) {
    return rectangular_closure(meet_rectangular(c, m));
  });
}

Latroid block_matroid(const Code& c) {
  require_field(c.ring());
  const int q = static_cast<int>(c.ring().size());
  auto lat = std::make_shared<const FiniteLattice>(boolean_lattice(c.n()));
  std::vector<Scalar> rho, len;
  for (std::size_t x = 0; x < lat->size(); ++x) {
    const Label& p = lat->label(x);
    std::size_t count = 0;
    for (VecKey k : c.keys()) {
      bool inside = true;
      for (int i = 0; i < c.n() && inside; ++i) inside = p[i] == 1 || c.ambient().entry(k, i).index == 0;
      count += inside;
    }
    std::int64_t size = 0;
    for (auto v : p) size += v;
    len.push_back(Scalar::of(size));
    rho.push_back(Scalar::of(size - field_dim(count, q)));
  }
  return make_latroid(std::move(lat), std::move(rho), std::move(len));
}

MatrixCode MatrixCode::from_generators(int q, std::vector<Block> blocks,
                                       const std::vector<std::vector<std::int64_t>>& generators) {
  int total = 0;
  for (const auto& b : blocks) {
    if (b.m < 1 || b.n < 1) throw InputError("matrix blocks need positive dimensions");
    total += b.m * b.n;
  }
  if (blocks.empty()) throw InputError("a matrix code needs at least one block");
  const Ambient amb(Pir::chain(q, 1), total);
  require_field(amb.ring());
  std::vector<Vector> gens;
  for (const auto& g : generators) gens.push_back(amb.from_integers(g));
  return MatrixCode(q, std::move(blocks), Code::span(amb, gens));
}

MatrixCode MatrixCode::from_code(int q, std::vector<Block> blocks, Code code) {
  int total = 0;
  for (const auto& b : blocks) total += b.m * b.n;
  if (code.n() != total || static_cast<int>(code.ring().size()) != q || !code.ring().is_field()) {
    throw InputError("code does not match the block shape");
  }
  return MatrixCode(q, std::move(blocks), std::move(code));
}

int MatrixCode::dim() const { return field_dim(code_.size(), q_); }

std::int64_t MatrixCode::entry(VecKey word, std::size_t b, int r, int c) const {
  int offset = 0;
  for (std::size_t i = 0; i < b; ++i) offset += blocks_[i].m * blocks_[i].n;
  return code_.ambient().entry(word, offset + r * blocks_[b].n + c).index;
}

std::vector<VecKey> MatrixCode::rows(VecKey word, std::size_t b) const {
  const Block& bl = blocks_.at(b);
  const Ambient space(Pir::chain(q_, 1), bl.n);
  std::vector<VecKey> out;
  for (int r = 0; r < bl.m; ++r) {
    std::vector<std::int64_t> row;
    for (int c = 0; c < bl.n; ++c) row.push_back(entry(word, b, r, c));
    out.push_back(space.pack(space.from_integers(row)));
  }
  return out;
}

std::vector<VecKey> MatrixCode::columns(VecKey word, std::size_t b) const {
  const Block& bl = blocks_.at(b);
  const Ambient space(Pir::chain(q_, 1), bl.m);
  std::vector<VecKey> out;
  for (int c = 0; c < bl.n; ++c) {
    std::vector<std::int64_t> col;
    for (int r = 0; r < bl.m; ++r) col.push_back(entry(word, b, r, c));
    out.push_back(space.pack(space.from_integers(col)));
  }
  return out;
}

MatrixCode MatrixCode::block_code(std::size_t b) const {
  const Block bl = blocks_.at(b);
  const Ambient amb(Pir::chain(q_, 1), bl.m * bl.n);
  std::vector<VecKey> keys;
  for (VecKey w : code_.keys()) {
    std::vector<std::int64_t> flat;
    for (int r = 0; r < bl.m; ++r) {
      for (int c = 0; c < bl.n; ++c) flat.push_back(entry(w, b, r, c));
    }
    keys.push_back(amb.pack(amb.from_integers(flat)));
  }
  return MatrixCode(q_, {bl}, Code::from_keys(amb, std::move(keys)));
}

MatrixCode product_code(const MatrixCode& a, const MatrixCode& b) {
  if (a.q() != b.q()) throw InputError("product code needs a common field");
  std::vector<Block> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  const Ambient amb(Pir::chain(a.q(), 1), a.code().n() + b.code().n());
  require_cap(a.code().size() * b.code().size(), caps().codewords, "product code size");
  const VecKey shift = b.code().ambient().cardinality();
  std::vector<VecKey> keys;
  for (VecKey x : a.code().keys()) {
    for (VecKey y : b.code().keys()) keys.push_back(x * shift + y);
  }
  return MatrixCode::from_code(a.q(), std::move(blocks), Code::from_keys(amb, std::move(keys)));
}

namespace {

// dim C(V) for every subspace V of a one-block code, rows in V.
std::vector<int> rowspace_filter_dims(const MatrixCode& c, const SubspaceLattice& lat) {
  if (c.blocks().size() != 1) throw InputError("rank-metric codes have exactly one block");
  if (lat.q != c.q() || lat.n != c.blocks()[0].n) {
    throw InputError("subspace lattice does not match the code's row length");
  }
  std::vector<int> dims(lat.members.size());
  for_each_index(dims.size(), [&](std::size_t v) {
    std::size_t count = 0;
    for (VecKey w : c.code().keys()) {
      const auto rows = c.rows(w, 0);
      count += std::all_of(rows.begin(), rows.end(), [&](VecKey r) { return lat.members[v].test(r); });
    }
    dims[v] = field_dim(count, c.q());
  });
  return dims;
}

}  // namespace

Latroid rank_metric_latroid(const MatrixCode& c, const SubspaceLattice& lat) {
  const auto dims = rowspace_filter_dims(c, lat);
  const int m = c.blocks()[0].m;
  std::vector<Scalar> rho, len;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    len.push_back(Scalar::of(m * lat.dims[v]));
    rho.push_back(Scalar::of(m * lat.dims[v] - dims[v]));
  }
  return make_latroid(lat.lattice, std::move(rho), std::move(len));
}

Latroid tilde_polymatroid(const MatrixCode& c, const SubspaceLattice& lat) {
  const auto dims = rowspace_filter_dims(c, lat);
  const int m = c.blocks()[0].m;
  std::vector<Scalar> rho, len;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    len.push_back(Scalar::of(lat.dims[v]));
    rho.emplace_back(std::vector<Rational>{Rational(c.dim() - dims[lat.perp[v]], m)});
  }
  return make_latroid(lat.lattice, std::move(rho), std::move(len));
}

PolymatroidReport check_q_polymatroid(const SubspaceLattice& lat, const std::vector<Scalar>& rho) {
  const FiniteLattice& l = *lat.lattice;
  const std::size_t n = l.size();
  PolymatroidReport rep;
  for (std::size_t a = 0; a < n; ++a) {
    const Rational r = rho[a].value();
    if (r < 0 || r > lat.dims[a]) return {false, "P1", a, a};
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (l.leq(a, b) && rho[a].value() > rho[b].value()) return {false, "P2", a, b};
      if (rho[l.join(a, b)].value() + rho[l.meet(a, b)].value() >
          rho[a].value() + rho[b].value()) {
        return {false, "P3", a, b};
      }
    }
  }
  return rep;
}

bool tilde_relation_holds(const MatrixCode& c, const SubspaceLattice& lat) {
  const Latroid r = rank_metric_latroid(c, lat);
  const Latroid t = tilde_polymatroid(c, lat);
  const int m = c.blocks()[0].m;
  for (std::size_t v = 0; v < r.size(); ++v) {
    const std::size_t p = lat.perp[v];
    const Rational rhs = (r.rho[p].value() - m * lat.dims[p] + c.dim()) / Rational(m);
    if (t.rho[v].value() != rhs) return false;
  }
  return true;
}

Latroid sum_rank_latroid(const MatrixCode& c, SumRankConvention conv) {
  std::vector<SubspaceLattice> parts;
  for (const auto& b : c.blocks()) {
    parts.push_back(subspace_lattice(c.q(), conv == SumRankConvention::Column ? b.m : b.n));
  }
  std::shared_ptr<const FiniteLattice> lat = parts[0].lattice;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    lat = std::make_shared<const FiniteLattice>(product(*lat, *parts[i].lattice));
  }
  std::vector<Scalar> rho(lat->size()), len(lat->size());
  for_each_index(lat->size(), [&](std::size_t x) {
    // Mixed radix with the last block least significant.
    std::vector<std::size_t> idx(parts.size());
    std::size_t rest = x;
    for (std::size_t i = parts.size(); i-- > 0;) {
      idx[i] = rest % parts[i].members.size();
      rest /= parts[i].members.size();
    }
    std::int64_t length = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      length += std::int64_t{c.blocks()[i].m} * parts[i].dims[idx[i]];
    }
    std::size_t count = 0;
    for (VecKey w : c.code().keys()) {
      bool inside = true;
      for (std::size_t i = 0; i < parts.size() && inside; ++i) {
        const auto vecs = conv == SumRankConvention::Column ? c.columns(w, i) : c.rows(w, i);
        inside = std::all_of(vecs.begin(), vecs.end(),
                             [&](VecKey v) { return parts[i].members[idx[i]].test(v); });
      }
      count += inside;
    }
    len[x] = Scalar::of(length);
    rho[x] = Scalar::of(length - field_dim(count, c.q()));
  });
  return make_latroid(std::move(lat), std::move(rho), std::move(len));
}

std::int64_t code_gen_weights_dr(const Code& c, const SupportFn& s, int r) {
  const int top = big_m(c);
  if (r < 1 || r > top) {
    throw InputError("r must lie in [1, M(C)] = [1, " + std::to_string(top) + "]");
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& d : enumerate_submodules(c)) {
    if (big_m(d) >= r) best = std::min(best, code_weight(s, d));
  }
  if (best == std::numeric_limits<std::int64_t>::max()) {
    throw Error("no submodule D with M(D) >= " + std::to_string(r));
  }
  return best;
}

std::int64_t code_gen_weights_dbar(const Code& c, const SupportFn& s, int r) {
  const int top = length_lambda(c);
  if (r < 1 || r > top) {
    throw InputError("r must lie in [1, lambda(C)] = [1, " + std::to_string(top) + "]");
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& d : enumerate_submodules(c)) {
    if (length_lambda(d) >= r) best = std::min(best, code_weight(s, d));
  }
  return best;
}

WeightReport latroid_weights_equal_code_weights(const Code& c) {
  const Latroid lt = collapse_to_norm(chain_support_latroid(c));
  const SupportFn s = SupportFn::chain(c.ambient());
  const auto subs = enumerate_submodules(c);
  WeightReport rep;
  for (int r = 1; r <= length_lambda(c); ++r) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& d : subs) {
      if (length_lambda(d) >= r) best = std::min(best, code_weight(s, d));
    }
    add_row(rep, r, Rational(best), gen_weight(lt, Scalar::of(r)).value());
  }
  return rep;
}

WeightReport rank_weights_equal(const MatrixCode& c) {
  if (c.blocks().size() != 1) throw InputError("rank-metric codes have exactly one block");
  const Block b = c.blocks()[0];
  if (b.m <= b.n) throw HypothesisError("the rank weight equality needs m > n");
  const SubspaceLattice lat = subspace_lattice(c.q(), b.n);
  const Latroid lt = rank_metric_latroid(c, lat);
  const auto subs = enumerate_submodules(c.code());
  WeightReport rep;
  for (int r = 1; r <= c.dim(); ++r) {
    const auto d = subcode_min(subs, c.q(), r, [&](const Code& s) { return block_rowspace_dim(c, s, 0); });
    add_row(rep, r, Rational(b.m * d), gen_weight(lt, Scalar::of(r)).value());
  }
  return rep;
}

WeightReport sum_rank_weights_equal(const MatrixCode& c) {
  const int m = c.blocks()[0].m;
  for (const auto& b : c.blocks()) {
    if (b.m != m || b.m <= b.n) {
      throw HypothesisError("the sum-rank weight equality needs equal m_i with m_i > n_i");
    }
  }
  const Latroid lt = sum_rank_latroid(c, SumRankConvention::Row);
  const auto subs = enumerate_submodules(c.code());
  WeightReport rep;
  for (int r = 1; r <= c.dim(); ++r) {
    const auto d = subcode_min(subs, c.q(), r, [&](const Code& s) {
      std::int64_t total = 0;
      for (std::size_t i = 0; i < c.blocks().size(); ++i) total += block_rowspace_dim(c, s, i);
      return total;
    });
    add_row(rep, r, Rational(m * d), gen_weight(lt, Scalar::of(r)).value());
  }
  return rep;
}

WeightReport block_weights_equal(const Code& c) {
  require_field(c.ring());
  const int q = static_cast<int>(c.ring().size());
  const Latroid lt = block_matroid(c);
  const SupportFn hamming = SupportFn::hamming(c.ambient());
  const auto subs = enumerate_submodules(c);
  WeightReport rep;
  for (int r = 1; r <= field_dim(c.size(), q); ++r) {
    const auto d = subcode_min(subs, q, r, [&](const Code& s) { return code_weight(hamming, s); });
    add_row(rep, r, Rational(d), gen_weight(lt, Scalar::of(r)).value());
  }
  return rep;
}

}  // namespace latroid
