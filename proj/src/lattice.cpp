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

#include "latroid/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "latroid/errors.hpp"

namespace latroid {
namespace {

std::string label_string(const Label& l) {
  std::string s = "[";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(l[i]);
  }
  return s + "]";
}

// Lowest set bit of (a & b) over `words` words, or npos.
constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

FiniteLattice FiniteLattice::from_order(std::vector<Label> labels,
                                        const std::function<bool(std::size_t, std::size_t)>& leq,
                                        bool labels_are_points, Exec exec) {
  const std::size_t n = labels.size();
  if (n == 0) throw InputError("a lattice needs at least one element");
  require_cap(n, caps().lattice, "lattice size");
  if (n > 65535) throw CapExceeded("lattice size exceeds 65535");
  const std::size_t words = (n + 63) / 64;

  // Order matrix in input positions.
  std::vector<std::uint64_t> raw(n * words, 0);
  for_each_index(
      n,
      [&](std::size_t a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (leq(a, b)) raw[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
        }
      },
      exec);
  auto raw_leq = [&](std::size_t a, std::size_t b) {
    return (raw[a * words + b / 64] >> (b % 64)) & 1U;
  };

  for (std::size_t a = 0; a < n; ++a) {
    if (!raw_leq(a, a)) throw InputError("order is not reflexive at " + label_string(labels[a]));
  }
  const IndexPair anti = first_pair(
      n, n, [&](std::size_t a, std::size_t b) { return a < b && raw_leq(a, b) && raw_leq(b, a); },
      exec);
  if (anti.first < n) {
    throw InputError("order is not antisymmetric: " + label_string(labels[anti.first]) + " and " +
                     label_string(labels[anti.second]));
  }
  const std::size_t bad_trans = first_index(
      n,
      [&](std::size_t a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (!raw_leq(a, b)) continue;
          for (std::size_t w = 0; w < words; ++w) {
            if ((raw[b * words + w] & ~raw[a * words + w]) != 0) return true;
          }
        }
        return false;
      },
      exec);
  if (bad_trans < n) {
    throw InputError("order is not transitive above " + label_string(labels[bad_trans]));
  }

  // Keep the input order when it already is a linear extension, otherwise
  // sort stably by down-set size.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const IndexPair backwards = first_pair(
      n, n, [&](std::size_t a, std::size_t b) { return b < a && raw_leq(a, b); }, exec);
  if (backwards.first < n) {
    std::vector<std::size_t> down_size(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) down_size[b] += raw_leq(a, b);
    }
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t x, std::size_t y) { return down_size[x] < down_size[y]; });
  }

  FiniteLattice lat;
  lat.n_ = n;
  lat.words_ = words;
  lat.points_ = labels_are_points;
  lat.labels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) lat.labels_[i] = labels[perm[i]];
  for (std::size_t i = 0; i < n; ++i) {
    if (!lat.index_.emplace(lat.labels_[i], i).second) {
      throw InputError("duplicate lattice label " + label_string(lat.labels_[i]));
    }
  }
  lat.up_.assign(n * words, 0);
  lat.down_.assign(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (raw_leq(perm[i], perm[j])) {
        lat.up_[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        lat.down_[j * words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }

  // Join: the lowest-index common upper bound must lie below every other
  // common upper bound; meet symmetrically with the highest common lower bound.
  lat.join_.assign(n * n, 0);
  lat.meet_.assign(n * n, 0);
  std::vector<std::size_t> bad(n, npos);
  for_each_index(
      n,
      [&](std::size_t a) {
        std::vector<std::uint64_t> acc(words);
        for (std::size_t b = 0; b < n && bad[a] == npos; ++b) {
          std::size_t lo = npos;
          for (std::size_t w = 0; w < words; ++w) {
            acc[w] = lat.up_[a * words + w] & lat.up_[b * words + w];
            if (lo == npos && acc[w]) lo = w * 64 + std::countr_zero(acc[w]);
          }
          bool ok = lo != npos;
          for (std::size_t w = 0; ok && w < words; ++w) {
            ok = (acc[w] & ~lat.up_[lo * words + w]) == 0;
          }
          std::size_t hi = npos;
          for (std::size_t w = words; w-- > 0;) {
            acc[w] = lat.down_[a * words + w] & lat.down_[b * words + w];
            if (hi == npos && acc[w]) hi = w * 64 + 63 - std::countl_zero(acc[w]);
          }
          ok = ok && hi != npos;
          for (std::size_t w = 0; ok && w < words; ++w) {
            ok = (acc[w] & ~lat.down_[hi * words + w]) == 0;
          }
          if (!ok) {
            bad[a] = b;
            break;
          }
          lat.join_[a * n + b] = static_cast<std::uint16_t>(lo);
          lat.meet_[a * n + b] = static_cast<std::uint16_t>(hi);
        }
      },
      exec);
  for (std::size_t a = 0; a < n; ++a) {
    if (bad[a] != npos) {
      throw InputError("not a lattice: " + label_string(lat.labels_[a]) + " and " +
                       label_string(lat.labels_[bad[a]]) + " lack a join or meet");
    }
  }
  lat.derive_structure();
  return lat;
}

void FiniteLattice::derive_structure() {
  covers_.assign(n_, {});
  std::vector<std::vector<std::size_t>> lower(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      if (!leq(a, b)) continue;
      std::size_t between = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        between += std::popcount(up_[a * words_ + w] & down_[b * words_ + w]);
      }
      if (between == 2) {
        covers_[a].push_back(b);
        lower[b].push_back(a);
      }
    }
  }
  atoms_ = covers_[0];
  height_.assign(n_, 0);
  graded_ = true;
  for (std::size_t b = 1; b < n_ && graded_; ++b) {
    height_[b] = height_[lower[b].front()] + 1;
    for (std::size_t a : lower[b]) {
      if (height_[a] + 1 != height_[b]) graded_ = false;
    }
  }
  if (!graded_) height_.clear();
}

std::optional<std::size_t> FiniteLattice::find(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteLattice::index_of(const Label& label) const {
  auto i = find(label);
  if (!i) throw InputError("no lattice element labelled " + label_string(label));
  return *i;
}

std::vector<std::size_t> FiniteLattice::interval_elements(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t x = a; x <= b; ++x) {
    if (leq(a, x) && leq(x, b)) out.push_back(x);
  }
  return out;
}

int FiniteLattice::height(std::size_t a) const {
  if (!graded_) throw NotGraded("lattice is not graded; height is undefined");
  return height_[a];
}

const LatticeFlags& FiniteLattice::flags() const {
  std::call_once(cache_->once, [this] { cache_->flags = compute_predicates(*this); });
  return cache_->flags;
}

FiniteLattice FiniteLattice::relabeled(std::vector<Label> labels, bool labels_are_points) const {
  if (labels.size() != n_) throw InputError("relabel needs one label per element");
  FiniteLattice out = *this;
  out.cache_ = std::make_shared<FlagCache>();
  out.points_ = labels_are_points;
  out.labels_ = std::move(labels);
  out.index_.clear();
  for (std::size_t i = 0; i < n_; ++i) {
    if (!out.index_.emplace(out.labels_[i], i).second) {
      throw InputError("duplicate lattice label " + label_string(out.labels_[i]));
    }
  }
  return out;
}

bool is_modular(const FiniteLattice& lat, Exec exec) {
  const std::size_t n = lat.size();
  return first_index(
             n,
             [&](std::size_t a) {
               for (std::size_t b = a; b < n; ++b) {
                 if (!lat.leq(a, b)) continue;
                 for (std::size_t c = 0; c < n; ++c) {
                   if (lat.join(a, lat.meet(c, b)) != lat.meet(lat.join(a, c), b)) return true;
                 }
               }
               return false;
             },
             exec) == n;
}

bool is_distributive(const FiniteLattice& lat, Exec exec) {
  const std::size_t n = lat.size();
  return first_index(
             n,
             [&](std::size_t a) {
               for (std::size_t b = 0; b < n; ++b) {
                 for (std::size_t c = b + 1; c < n; ++c) {
                   if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c))) {
                     return true;
                   }
                 }
               }
               return false;
             },
             exec) == n;
}

bool is_complemented(const FiniteLattice& lat, Exec exec) {
  const std::size_t n = lat.size();
  return first_index(
             n,
             [&](std::size_t a) {
               for (std::size_t b = 0; b < n; ++b) {
                 if (lat.meet(a, b) == lat.bottom() && lat.join(a, b) == lat.top()) return false;
               }
               return true;
             },
             exec) == n;
}

bool is_relatively_complemented(const FiniteLattice& lat, Exec exec) {
  const std::size_t n = lat.size();
  return first_index(
             n,
             [&](std::size_t lo) {
               for (std::size_t hi = lo; hi < n; ++hi) {
                 if (!lat.leq(lo, hi)) continue;
                 const auto inside = lat.interval_elements(lo, hi);
                 for (std::size_t mid : inside) {
                   bool found = false;
                   for (std::size_t x : inside) {
                     if (lat.meet(mid, x) == lo && lat.join(mid, x) == hi) {
                       found = true;
                       break;
                     }
                   }
                   if (!found) return true;
                 }
               }
               return false;
             },
             exec) == n;
}

bool height_is_modular(const FiniteLattice& lat) {
  if (!lat.is_graded()) return false;
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b = a + 1; b < lat.size(); ++b) {
      if (lat.height(a) + lat.height(b) !=
          lat.height(lat.join(a, b)) + lat.height(lat.meet(a, b))) {
        return false;
      }
    }
  }
  return true;
}

LatticeFlags compute_predicates(const FiniteLattice& lat, Exec exec) {
  LatticeFlags f;
  f.graded = lat.is_graded();
  f.modular = is_modular(lat, exec);
  f.distributive = is_distributive(lat, exec);
  f.complemented = is_complemented(lat, exec);
  f.relatively_complemented = is_relatively_complemented(lat, exec);
  return f;
}

FiniteLattice interval(const FiniteLattice& lat, std::size_t a, std::size_t b) {
  if (!lat.leq(a, b)) throw InputError("interval [a, b] needs a <= b");
  const auto elems = lat.interval_elements(a, b);
  std::vector<Label> labels;
  for (std::size_t x : elems) labels.push_back(lat.label(x));
  return FiniteLattice::from_order(
      std::move(labels), [&](std::size_t i, std::size_t j) { return lat.leq(elems[i], elems[j]); },
      lat.has_points());
}

FiniteLattice dual(const FiniteLattice& lat) {
  const std::size_t n = lat.size();
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(lat.label(n - 1 - i));
  return FiniteLattice::from_order(
      std::move(labels),
      [&](std::size_t i, std::size_t j) { return lat.leq(n - 1 - j, n - 1 - i); }, false);
}

std::size_t product_index(const FiniteLattice& b, std::size_t i, std::size_t j) {
  return i * b.size() + j;
}

FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b) {
  const bool points = a.has_points() && b.has_points();
  std::vector<Label> labels;
  labels.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Label l;
      if (!points) l.push_back(static_cast<std::int64_t>(a.label(i).size()));
      l.insert(l.end(), a.label(i).begin(), a.label(i).end());
      l.insert(l.end(), b.label(j).begin(), b.label(j).end());
      labels.push_back(std::move(l));
    }
  }
  const std::size_t nb = b.size();
  return FiniteLattice::from_order(
      std::move(labels),
      [&](std::size_t x, std::size_t y) {
        return a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb);
      },
      points);
}

FiniteLattice grid_lattice(const std::vector<int>& maxima) {
  std::vector<Label> points{Label(maxima.size(), 0)};
  for (std::size_t d = 0; d < maxima.size(); ++d) {
    if (maxima[d] < 0) throw InputError("grid maxima must be nonnegative");
    std::vector<Label> next;
    for (const auto& p : points) {
      for (int v = 0; v <= maxima[d]; ++v) {
        Label q = p;
        q[d] = v;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
    require_cap(points.size(), caps().lattice, "grid lattice size");
  }
  std::stable_sort(points.begin(), points.end(), [](const Label& x, const Label& y) {
    const auto sx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    const auto sy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    return sx != sy ? sx < sy : x < y;
  });
  auto pts = points;
  return FiniteLattice::from_order(
      std::move(points),
      [&](std::size_t i, std::size_t j) {
        for (std::size_t d = 0; d < pts[i].size(); ++d) {
          if (pts[i][d] > pts[j][d]) return false;
        }
        return true;
      },
      true);
}

FiniteLattice boolean_lattice(int n) {
  if (n < 0) throw InputError("boolean lattice needs n >= 0");
  return grid_lattice(std::vector<int>(static_cast<std::size_t>(n), 1));
}

FiniteLattice chain_lattice(int length) { return grid_lattice({length}); }

AtomsJoinReport atoms_join_check(const FiniteLattice& lat) {
  for (std::size_t x = 0; x < lat.size(); ++x) {
    std::size_t acc = lat.bottom();
    for (std::size_t atom : lat.atoms()) {
      if (lat.leq(atom, x)) acc = lat.join(acc, atom);
    }
    if (acc != x) return {false, x};
  }
  return {};
}

}  // namespace latroid
