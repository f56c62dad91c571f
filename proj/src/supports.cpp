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

#include "latroid/supports.hpp"

#include <algorithm>
#include <numeric>

#include "latroid/errors.hpp"

namespace latroid {
namespace {

void require_exhaustive(const Ambient& amb) {
  require_cap(amb.cardinality(), caps().ambient, "|R|^n for an exhaustive scan");
}

std::vector<SupportVec> full_table(const SupportFn& s) {
  require_exhaustive(s.ambient());
  std::vector<SupportVec> table(s.ambient().cardinality());
  for_each_index(table.size(), [&](std::size_t v) { table[v] = s.eval(v); });
  return table;
}

bool is_zero(const SupportVec& a) {
  return std::all_of(a.begin(), a.end(), [](std::int32_t x) { return x == 0; });
}

// Full-ambient key of the vector whose factor-f part is `factor_key` (a key
// of R_f^n) and whose other parts are zero.
VecKey embed_key(const Ambient& amb, const Ambient& factor_amb, std::size_t f, VecKey factor_key) {
  Vector v = factor_amb.unpack(factor_key);
  for (auto& x : v) x = amb.ring().embed(f, x);
  return amb.pack(v);
}

VecKey project_key(const Ambient& amb, const Ambient& factor_amb, std::size_t f, VecKey key) {
  Vector v = amb.unpack(key);
  for (auto& x : v) x = amb.ring().project(x, f);
  return factor_amb.pack(v);
}

}  // namespace

SupportVec join(const SupportVec& a, const SupportVec& b) {
  SupportVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

SupportVec meet(const SupportVec& a, const SupportVec& b) {
  SupportVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

bool leq(const SupportVec& a, const SupportVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

std::int64_t norm1(const SupportVec& a) {
  return std::accumulate(a.begin(), a.end(), std::int64_t{0});
}

std::string to_string(const SupportVec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

SupportFn SupportFn::hamming(const Ambient& amb) {
  SupportFn s(amb, amb.n(), SupportKind::Hamming);
  std::vector<SupportVec> table;
  for (std::uint32_t r = 0; r < amb.ring().size(); ++r) table.push_back({r != 0 ? 1 : 0});
  for (int i = 0; i < amb.n(); ++i) {
    s.coord_tables_.push_back(table);
    s.layout_.push_back({i});
  }
  s.finish();
  return s;
}

SupportFn SupportFn::chain(const Ambient& amb) {
  const Pir& ring = amb.ring();
  const int l = static_cast<int>(ring.num_factors());
  SupportFn s(amb, l * amb.n(), SupportKind::Chain);
  std::vector<SupportVec> table;
  for (std::uint32_t r = 0; r < ring.size(); ++r) {
    SupportVec v;
    for (int f = 0; f < l; ++f) v.push_back(ring.factor(f).k - ring.valuation(RingElement{r}, f));
    table.push_back(std::move(v));
  }
  for (int i = 0; i < amb.n(); ++i) {
    s.coord_tables_.push_back(table);
    std::vector<int> pos;
    for (int f = 0; f < l; ++f) pos.push_back(f * amb.n() + i);
    s.layout_.push_back(std::move(pos));
  }
  s.finish();
  return s;
}

SupportFn SupportFn::product(const Ambient& amb, const std::vector<SupportFn>& per_coordinate) {
  if (static_cast<int>(per_coordinate.size()) != amb.n()) {
    throw InputError("product support needs one support per coordinate");
  }
  int u = 0;
  for (const auto& c : per_coordinate) {
    if (c.ambient().n() != 1 || !(c.ambient().ring() == amb.ring())) {
      throw InputError("product support factors must be supports on R^1 over the same ring");
    }
    u += c.u();
  }
  SupportFn s(amb, u, SupportKind::Product);
  int offset = 0;
  for (const auto& c : per_coordinate) {
    std::vector<SupportVec> table;
    for (std::uint32_t r = 0; r < amb.ring().size(); ++r) table.push_back(c.eval(VecKey{r}));
    s.coord_tables_.push_back(std::move(table));
    std::vector<int> pos(static_cast<std::size_t>(c.u()));
    std::iota(pos.begin(), pos.end(), offset);
    s.layout_.push_back(std::move(pos));
    offset += c.u();
  }
  s.finish();
  return s;
}

SupportFn SupportFn::standard(const Ambient& amb, const std::vector<SupportVec>& table) {
  if (table.size() != amb.ring().size() || table.empty()) {
    throw InputError("per-coordinate support table needs one entry per ring element");
  }
  const Ambient one(amb.ring(), 1);
  const SupportFn base = from_table(one, static_cast<int>(table[0].size()), table);
  return product(amb, std::vector<SupportFn>(static_cast<std::size_t>(amb.n()), base));
}

SupportFn SupportFn::from_table(const Ambient& amb, int u, std::vector<SupportVec> table) {
  const SupportReport rep = validate_table(amb, u, table);
  if (!rep.valid) throw InputError("support table rejected: " + rep.message);
  SupportFn s(amb, u, SupportKind::Custom);
  s.table_ = std::move(table);
  s.finish();
  return s;
}

void SupportFn::finish() {
  top_.assign(static_cast<std::size_t>(u_), 0);
  if (kind_ == SupportKind::Custom) {
    for (const auto& t : table_) top_ = join(top_, t);
    return;
  }
  for (std::size_t i = 0; i < coord_tables_.size(); ++i) {
    for (const auto& t : coord_tables_[i]) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        top_[layout_[i][j]] = std::max(top_[layout_[i][j]], t[j]);
      }
    }
  }
}

SupportVec SupportFn::eval(VecKey v) const {
  if (kind_ == SupportKind::Custom) return table_.at(v);
  SupportVec out(static_cast<std::size_t>(u_), 0);
  for (int i = 0; i < amb_.n(); ++i) {
    const SupportVec& t = coord_tables_[i][amb_.entry(v, i).index];
    for (std::size_t j = 0; j < t.size(); ++j) out[layout_[i][j]] = t[j];
  }
  return out;
}

SupportVec set_support(const SupportFn& s, const std::vector<VecKey>& xs) {
  SupportVec out(static_cast<std::size_t>(s.u()), 0);
  for (VecKey x : xs) out = join(out, s.eval(x));
  return out;
}

SupportVec code_support(const SupportFn& s, const Code& c) { return set_support(s, c.keys()); }

std::int64_t weight(const SupportFn& s, VecKey v) { return norm1(s.eval(v)); }

std::int64_t code_weight(const SupportFn& s, const Code& c) { return norm1(code_support(s, c)); }

MinMaxWeight min_max_weight(const SupportFn& s, const Code& c) {
  if (c.size() < 2) throw InputError("minimum weight of the zero code is undefined");
  MinMaxWeight out{INT64_MAX, 0};
  for (VecKey k : c.keys()) {
    const auto w = weight(s, k);
    if (k != 0) out.min = std::min(out.min, w);
    out.max = std::max(out.max, w);
  }
  return out;
}

SupportReport validate_table(const Ambient& amb, int u, const std::vector<SupportVec>& table,
                             Exec exec) {
  require_exhaustive(amb);
  const std::size_t card = amb.cardinality();
  if (table.size() != card) {
    throw InputError("support table has " + std::to_string(table.size()) + " entries, expected " +
                     std::to_string(card));
  }
  for (std::size_t v = 0; v < card; ++v) {
    if (static_cast<int>(table[v].size()) != u) throw InputError("support table entry has wrong width");
    if (std::any_of(table[v].begin(), table[v].end(), [](std::int32_t x) { return x < 0; })) {
      throw InputError("support values must be nonnegative");
    }
  }
  SupportReport rep;
  const std::size_t a1 =
      first_index(card, [&](std::size_t v) { return is_zero(table[v]) != (v == 0); }, exec);
  if (a1 < card) {
    rep.valid = false;
    rep.axiom = 1;
    rep.v = a1;
    rep.message = "axiom 1 fails at v=" + amb.to_string(a1);
    return rep;
  }
  const std::size_t nr = amb.ring().size();
  const IndexPair a2 = first_pair(
      card, nr,
      [&](std::size_t v, std::size_t r) {
        return !leq(table[amb.scale(RingElement{static_cast<std::uint32_t>(r)}, v)], table[v]);
      },
      exec);
  if (a2.first < card) {
    rep.valid = false;
    rep.axiom = 2;
    rep.v = a2.first;
    rep.r = RingElement{static_cast<std::uint32_t>(a2.second)};
    rep.message = "axiom 2 fails at r=" + amb.ring().to_string(*rep.r) +
                  ", v=" + amb.to_string(a2.first);
    return rep;
  }
  const IndexPair a3 = first_pair(
      card, card,
      [&](std::size_t v, std::size_t w) {
        return !leq(table[amb.add(v, w)], join(table[v], table[w]));
      },
      exec);
  if (a3.first < card) {
    rep.valid = false;
    rep.axiom = 3;
    rep.v = a3.first;
    rep.w = a3.second;
    rep.message = "axiom 3 fails at v=" + amb.to_string(a3.first) +
                  ", w=" + amb.to_string(a3.second);
  }
  return rep;
}

SupportReport validate_support(const SupportFn& s, Exec exec) {
  return validate_table(s.ambient(), s.u(), full_table(s), exec);
}

SupportReport validate_modular(const SupportFn& s, Exec exec) {
  SupportReport rep = validate_support(s, exec);
  if (!rep.valid) return rep;
  const Ambient& amb = s.ambient();
  const auto table = full_table(s);
  const std::size_t card = table.size();
  const std::uint32_t nr = amb.ring().size();
  std::vector<std::pair<VecKey, int>> hit(card);
  const std::size_t v = first_index(
      card,
      [&](std::size_t vi) {
        for (std::size_t w = 0; w < card; ++w) {
          for (int i = 0; i < s.u(); ++i) {
            const auto sv = table[vi][i];
            if (sv == 0 || sv > table[w][i]) continue;
            bool found = false;
            for (std::uint32_t r = 0; r < nr && !found; ++r) {
              found = table[amb.add(vi, amb.scale(RingElement{r}, w))][i] < sv;
            }
            if (!found) {
              hit[vi] = {w, i};
              return true;
            }
          }
        }
        return false;
      },
      exec);
  if (v < card) {
    rep.valid = false;
    rep.axiom = 4;
    rep.v = v;
    rep.w = hit[v].first;
    rep.coordinate = hit[v].second;
    rep.message = "axiom 4 fails at v=" + amb.to_string(v) + ", w=" + amb.to_string(rep.w) +
                  ", i=" + std::to_string(rep.coordinate);
  }
  return rep;
}

SplitSupport split_support(const SupportFn& s) {
  const SupportReport rep = validate_modular(s);
  if (!rep.valid) throw HypothesisError("split_support needs a modular support: " + rep.message);
  const Ambient& amb = s.ambient();
  const Pir& ring = amb.ring();
  const std::size_t l = ring.num_factors();
  SplitSupport out;
  if (l == 1) {
    out.factors.push_back(s);
    out.permutation.resize(static_cast<std::size_t>(s.u()));
    std::iota(out.permutation.begin(), out.permutation.end(), 0);
    return out;
  }
  std::vector<int> owner(static_cast<std::size_t>(s.u()), -1);
  std::vector<Ambient> factor_amb;
  for (std::size_t f = 0; f < l; ++f) {
    factor_amb.emplace_back(ring.factor_ring(f), amb.n());
    for (VecKey k = 1; k < factor_amb[f].cardinality(); ++k) {
      const SupportVec sv = s.eval(embed_key(amb, factor_amb[f], f, k));
      for (int j = 0; j < s.u(); ++j) {
        if (sv[j] == 0) continue;
        if (owner[j] >= 0 && owner[j] != static_cast<int>(f)) {
          throw HypothesisError("support coordinate " + std::to_string(j) +
                                " depends on more than one factor");
        }
        owner[j] = static_cast<int>(f);
      }
    }
  }
  for (auto& o : owner) o = std::max(o, 0);
  for (std::size_t f = 0; f < l && s.is_standard(); ++f) {
    // Keep standard supports standard: split each coordinate table.
    const Ambient one(ring.factor_ring(f), 1);
    std::vector<SupportFn> per_coordinate;
    for (int i = 0; i < amb.n(); ++i) {
      const auto& layout = s.coordinate_layout(i);
      std::vector<std::size_t> slots;
      for (std::size_t j = 0; j < layout.size(); ++j) {
        if (owner[layout[j]] == static_cast<int>(f)) {
          slots.push_back(j);
          out.permutation.push_back(layout[j]);
        }
      }
      std::vector<SupportVec> table;
      for (std::uint32_t r = 0; r < one.ring().size(); ++r) {
        const SupportVec& full = s.coordinate_table(i)[ring.embed(f, RingElement{r}).index];
        SupportVec t;
        for (auto j : slots) t.push_back(full[j]);
        table.push_back(std::move(t));
      }
      per_coordinate.push_back(SupportFn::from_table(one, static_cast<int>(slots.size()), std::move(table)));
    }
    out.factors.push_back(SupportFn::product(factor_amb[f], per_coordinate));
  }
  for (std::size_t f = 0; f < l && !s.is_standard(); ++f) {
    std::vector<int> group;
    for (int j = 0; j < s.u(); ++j) {
      if (owner[j] == static_cast<int>(f)) group.push_back(j);
    }
    std::vector<SupportVec> table(factor_amb[f].cardinality());
    for (VecKey k = 0; k < table.size(); ++k) {
      const SupportVec sv = s.eval(embed_key(amb, factor_amb[f], f, k));
      for (int j : group) table[k].push_back(sv[j]);
    }
    out.factors.push_back(
        SupportFn::from_table(factor_amb[f], static_cast<int>(group.size()), std::move(table)));
    out.permutation.insert(out.permutation.end(), group.begin(), group.end());
  }
  if (!recombines(s, out)) {
    throw HypothesisError("support does not split as a product over the CRT factors");
  }
  return out;
}

bool recombines(const SupportFn& s, const SplitSupport& split) {
  const Ambient& amb = s.ambient();
  require_exhaustive(amb);
  std::vector<Ambient> factor_amb;
  for (const auto& f : split.factors) factor_amb.push_back(f.ambient());
  const std::size_t bad = first_index(amb.cardinality(), [&](std::size_t v) {
    const SupportVec sv = s.eval(v);
    std::size_t pos = 0;
    for (std::size_t f = 0; f < split.factors.size(); ++f) {
      const VecKey fk = split.factors.size() == 1 ? v : project_key(amb, factor_amb[f], f, v);
      for (auto x : split.factors[f].eval(fk)) {
        if (sv[split.permutation[pos++]] != x) return true;
      }
    }
    return pos != sv.size();
  });
  return bad == amb.cardinality();
}

bool same_values(const SupportFn& a, const SupportFn& b) {
  if (!(a.ambient() == b.ambient()) || a.u() != b.u()) return false;
  require_exhaustive(a.ambient());
  const std::size_t card = a.ambient().cardinality();
  return first_index(card, [&](std::size_t v) { return a.eval(v) != b.eval(v); }) == card;
}

}  // namespace latroid
