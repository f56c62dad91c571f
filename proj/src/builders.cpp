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

#include "latroid/builders.hpp"

#include <algorithm>
#include <unordered_map>

#include "latroid/errors.hpp"

namespace latroid {
namespace {

std::vector<std::int64_t> to_ints(const Ambient& space, VecKey key) {
  std::vector<std::int64_t> v;
  for (int i = 0; i < space.n(); ++i) v.push_back(space.entry(key, i).index);
  return v;
}

VecKey from_ints(const Ambient& space, const std::vector<std::int64_t>& v) {
  return space.pack(space.from_integers(v));
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t q) {
  std::int64_t r = 1;
  for (std::int64_t e = q - 2, b = a % q; e > 0; e >>= 1, b = b * b % q) {
    if (e & 1) r = r * b % q;
  }
  return r;
}

}  // namespace

std::vector<VecKey> rref(const Ambient& space, const std::vector<VecKey>& rows) {
  const std::int64_t q = space.ring().size();
  std::vector<std::vector<std::int64_t>> m;
  for (auto r : rows) m.push_back(to_ints(space, r));
  std::size_t rank = 0;
  for (int col = 0; col < space.n() && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    const std::int64_t inv = inverse_mod(m[rank][col], q);
    for (auto& x : m[rank]) x = x * inv % q;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const std::int64_t f = m[r][col];
      for (int c = 0; c < space.n(); ++c) m[r][c] = ((m[r][c] - f * m[rank][c]) % q + q) % q;
    }
    ++rank;
  }
  std::vector<VecKey> out;
  for (std::size_t r = 0; r < rank; ++r) out.push_back(from_ints(space, m[r]));
  return out;
}

int rank_of(const Ambient& space, const std::vector<VecKey>& rows) {
  return static_cast<int>(rref(space, rows).size());
}

Members span_members(const Ambient& space, const std::vector<VecKey>& rows) {
  if (space.cardinality() > kMaxSubspaceAmbient) throw CapExceeded("q^n must be at most 256");
  std::vector<VecKey> elems{0};
  for (auto r : rref(space, rows)) {
    std::vector<VecKey> next;
    for (std::uint32_t c = 0; c < space.ring().size(); ++c) {
      const VecKey m = space.scale(RingElement{c}, r);
      for (auto e : elems) next.push_back(space.add(e, m));
    }
    elems = std::move(next);
  }
  Members out;
  for (auto e : elems) out.set(e);
  return out;
}

std::size_t SubspaceLattice::span_of(const std::vector<VecKey>& vectors) const {
  const Members m = span_members(space(), vectors);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == m) return i;
  }
  throw Error("subspace missing from the lattice");
}

SubspaceLattice subspace_lattice(int q, int n) {
  const Ambient space(Pir::chain(q, 1), n);
  if (space.ring().factor(0).k != 1) throw InputError("subspace lattices need a prime q");
  if (space.cardinality() > kMaxSubspaceAmbient) throw CapExceeded("q^n must be at most 256");
  const std::size_t card = space.cardinality();

  // Breadth-first over spans, each subspace stored by its RREF basis.
  std::vector<std::vector<VecKey>> bases{{}};
  std::unordered_map<Members, std::size_t> seen{{span_members(space, {}), 0}};
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const Members cur = span_members(space, bases[i]);
    for (VecKey v = 1; v < card; ++v) {
      if (cur.test(v)) continue;
      auto rows = bases[i];
      rows.push_back(v);
      rows = rref(space, rows);
      const Members m = span_members(space, rows);
      if (seen.emplace(m, bases.size()).second) {
        bases.push_back(std::move(rows));
        require_cap(bases.size(), caps().lattice, "number of subspaces");
      }
    }
  }
  std::sort(bases.begin(), bases.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  SubspaceLattice out;
  out.q = q;
  out.n = n;
  std::vector<Label> labels;
  for (const auto& b : bases) {
    out.members.push_back(span_members(space, b));
    out.dims.push_back(static_cast<int>(b.size()));
    labels.emplace_back(b.begin(), b.end());
  }
  const auto& mem = out.members;
  out.lattice = std::make_shared<const FiniteLattice>(FiniteLattice::from_order(
      std::move(labels), [&](std::size_t a, std::size_t b) { return (mem[a] & ~mem[b]).none(); }));

  std::unordered_map<Members, std::size_t> index;
  for (std::size_t i = 0; i < mem.size(); ++i) index.emplace(mem[i], i);
  for (std::size_t i = 0; i < mem.size(); ++i) {
    Members perp;
    for (VecKey x = 0; x < card; ++x) {
      bool orth = true;
      for (auto b : bases[i]) {
        std::int64_t dot = 0;
        for (int c = 0; c < n; ++c) dot += space.entry(x, c).index * space.entry(b, c).index;
        if (dot % q != 0) {
          orth = false;
          break;
        }
      }
      if (orth) perp.set(x);
    }
    out.perp.push_back(index.at(perp));
  }
  return out;
}

SubmoduleLattice submodule_lattice(const Code& c) {
  SubmoduleLattice out;
  out.modules = enumerate_submodules(c);
  std::vector<Label> labels;
  for (const auto& m : out.modules) labels.emplace_back(m.keys().begin(), m.keys().end());
  const auto& mods = out.modules;
  out.lattice = std::make_shared<const FiniteLattice>(FiniteLattice::from_order(
      std::move(labels), [&](std::size_t a, std::size_t b) { return mods[a].is_subcode_of(mods[b]); }));
  return out;
}

FiniteLattice chain_support_lattice(const Ambient& amb) {
  std::vector<int> maxima;
  for (std::size_t f = 0; f < amb.ring().num_factors(); ++f) {
    for (int i = 0; i < amb.n(); ++i) maxima.push_back(amb.ring().factor(f).k);
  }
  return grid_lattice(maxima);
}

RectangularModule module_of_support_point(const Ambient& amb, const Label& point) {
  const std::size_t l = amb.ring().num_factors();
  const auto n = static_cast<std::size_t>(amb.n());
  if (point.size() != l * n) throw InputError("support point has the wrong width");
  RectangularModule m;
  for (std::size_t i = 0; i < n; ++i) {
    Ideal ideal;
    for (std::size_t f = 0; f < l; ++f) {
      ideal.exponents.push_back(amb.ring().factor(f).k - static_cast<int>(point[f * n + i]));
    }
    m.ideals.push_back(std::move(ideal));
  }
  return m;
}

Label support_point_of_module(const Ambient& amb, const RectangularModule& m) {
  const std::size_t l = amb.ring().num_factors();
  const auto n = static_cast<std::size_t>(amb.n());
  Label point(l * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < l; ++f) {
      point[f * n + i] = amb.ring().factor(f).k - m.ideals[i].exponents[f];
    }
  }
  return point;
}

RectangularLattice rectangular_lattice(const Ambient& amb) {
  RectangularLattice out;
  out.modules = all_rectangular_modules(amb);
  // Larger modules have smaller exponents; order by total exponent, largest
  // first, to get a linear extension.
  auto total = [](const RectangularModule& m) {
    int t = 0;
    for (const auto& id : m.ideals) {
      for (int e : id.exponents) t += e;
    }
    return t;
  };
  std::stable_sort(out.modules.begin(), out.modules.end(),
                   [&](const auto& a, const auto& b) { return total(a) > total(b); });
  std::vector<Label> labels;
  for (const auto& m : out.modules) {
    Label l;
    for (const auto& id : m.ideals) l.insert(l.end(), id.exponents.begin(), id.exponents.end());
    labels.push_back(std::move(l));
  }
  const auto& mods = out.modules;
  out.lattice = std::make_shared<const FiniteLattice>(FiniteLattice::from_order(
      std::move(labels), [&](std::size_t a, std::size_t b) { return rect_leq(mods[a], mods[b]); }));
  return out;
}

}  // namespace latroid
