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

#include "latroid/latroid.hpp"

#include <algorithm>

#include "latroid/errors.hpp"

namespace latroid {
namespace {

// a + b == c + d coordinatewise.
bool sums_equal(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  for (int i = 0; i < a.u(); ++i) {
    if (a[i] + b[i] != c[i] + d[i]) return false;
  }
  return true;
}

// a + b >= c + d coordinatewise.
bool sum_geq(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  for (int i = 0; i < a.u(); ++i) {
    if (a[i] + b[i] < c[i] + d[i]) return false;
  }
  return true;
}

// 0 <= rb - ra <= lb - la coordinatewise.
bool bounded_increase(const Scalar& ra, const Scalar& rb, const Scalar& la, const Scalar& lb) {
  for (int i = 0; i < ra.u(); ++i) {
    const Rational d = rb[i] - ra[i];
    if (d < 0 || d > lb[i] - la[i]) return false;
  }
  return true;
}

std::string pair_text(const FiniteLattice& lat, std::size_t a, std::size_t b) {
  auto lbl = [&](std::size_t x) {
    std::string s = "[";
    for (std::size_t i = 0; i < lat.label(x).size(); ++i) {
      if (i) s += ",";
      s += std::to_string(lat.label(x)[i]);
    }
    return s + "]";
  };
  return "elements #" + std::to_string(a) + " " + lbl(a) + " and #" + std::to_string(b) + " " +
         lbl(b);
}

void require_crypto_lattice(const FiniteLattice& lat) {
  const auto& f = lat.flags();
  if (!f.graded || !f.modular || !f.complemented) {
    throw HypothesisError("set axioms need a complemented modular graded lattice");
  }
}

std::vector<char> membership(const FiniteLattice& lat, const ElementSet& set) {
  std::vector<char> in(lat.size(), 0);
  for (auto x : set) {
    if (x >= lat.size()) throw InputError("element index out of range");
    in[x] = 1;
  }
  return in;
}

// Maximal members of `values` (element indices, possibly repeated).
std::vector<std::size_t> maximal_of(const FiniteLattice& lat, std::vector<std::size_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<std::size_t> out;
  for (auto x : values) {
    bool maximal = true;
    for (auto y : values) {
      if (lat.less(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

// For every L: the maximal members of the set below L.
std::vector<std::vector<std::size_t>> maximal_below(const FiniteLattice& lat,
                                                    const std::vector<char>& in) {
  std::vector<std::vector<std::size_t>> out(lat.size());
  for_each_index(lat.size(), [&](std::size_t l) {
    std::vector<std::size_t> below;
    for (std::size_t x = 0; x <= l; ++x) {
      if (in[x] && lat.leq(x, l)) below.push_back(x);
    }
    out[l] = maximal_of(lat, std::move(below));
  });
  return out;
}

std::vector<std::vector<std::size_t>> lower_covers(const FiniteLattice& lat) {
  std::vector<std::vector<std::size_t>> out(lat.size());
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (auto b : lat.upper_covers(a)) out[b].push_back(a);
  }
  return out;
}

// Shared I4/B3 check: for all L1, L2 and X1 in maxes[L1], X2 in maxes[L2]
// some Y in maxes[L1 v L2] lies below X1 v X2.
AxiomReport exchange_check(const FiniteLattice& lat,
                           const std::vector<std::vector<std::size_t>>& maxes,
                           const std::string& axiom) {
  const std::size_t n = lat.size();
  std::vector<std::vector<std::size_t>> hit(n);
  const std::size_t l1 = first_index(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& target = maxes[lat.join(a, b)];
      for (auto x1 : maxes[a]) {
        for (auto x2 : maxes[b]) {
          const std::size_t j = lat.join(x1, x2);
          const bool found = std::any_of(target.begin(), target.end(),
                                         [&](std::size_t y) { return lat.leq(y, j); });
          if (!found) {
            hit[a] = {a, b, x1, x2};
            return true;
          }
        }
      }
    }
    return false;
  });
  AxiomReport rep;
  if (l1 < n) {
    rep.ok = false;
    rep.axiom = axiom;
    rep.witness = hit[l1];
    rep.message = axiom + " fails for L1=#" + std::to_string(hit[l1][0]) + ", L2=#" +
                  std::to_string(hit[l1][1]) + " with maximal members #" +
                  std::to_string(hit[l1][2]) + ", #" + std::to_string(hit[l1][3]);
  }
  return rep;
}

AxiomReport fail(const std::string& axiom, std::vector<std::size_t> witness) {
  AxiomReport rep;
  rep.ok = false;
  rep.axiom = axiom;
  rep.message = axiom + " fails at";
  for (auto w : witness) rep.message += " #" + std::to_string(w);
  rep.witness = std::move(witness);
  return rep;
}

}  // namespace

Latroid make_latroid(std::shared_ptr<const FiniteLattice> lat, std::vector<Scalar> rho,
                     std::vector<Scalar> len) {
  if (!lat || rho.size() != lat->size() || len.size() != lat->size()) {
    throw InputError("rank and length need one value per lattice element");
  }
  const int u = rho[0].u();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i].u() != u || len[i].u() != u) throw InputError("latroid scalars differ in width");
  }
  return Latroid{std::move(lat), std::move(rho), std::move(len)};
}

LatroidReport validate_latroid(const Latroid& lt, Exec exec) {
  const FiniteLattice& lat = lt.lat();
  const std::size_t n = lat.size();
  LatroidReport rep;
  auto failed = [&](const std::string& axiom, std::size_t a, std::size_t b,
                    const std::string& what) {
    rep.valid = false;
    rep.axiom = axiom;
    rep.a = a;
    rep.b = b;
    rep.message = axiom + " (" + what + ") fails at " + pair_text(lat, a, b);
    return rep;
  };
  if (!height_is_modular(lat)) {
    rep.valid = false;
    rep.axiom = "modular";
    rep.message = "the lattice is not modular";
    return rep;
  }
  if (!lt.rho[0].is_zero() || !lt.len[0].is_zero()) return failed("L1", 0, 0, "rho(0) = ||0|| = 0");
  IndexPair w = first_pair(
      n, n,
      [&](std::size_t a, std::size_t b) { return lat.less(a, b) && !less(lt.len[a], lt.len[b]); },
      exec);
  if (w.first < n) return failed("L2", w.first, w.second, "length strictly increasing");
  w = first_pair(
      n, n,
      [&](std::size_t a, std::size_t b) {
        return b >= a &&
               !sums_equal(lt.len[a], lt.len[b], lt.len[lat.join(a, b)], lt.len[lat.meet(a, b)]);
      },
      exec);
  if (w.first < n) return failed("L3", w.first, w.second, "length modular");
  w = first_pair(
      n, n,
      [&](std::size_t a, std::size_t b) {
        return lat.less(a, b) && !bounded_increase(lt.rho[a], lt.rho[b], lt.len[a], lt.len[b]);
      },
      exec);
  if (w.first < n) return failed("L4", w.first, w.second, "rank bounded increasing");
  w = first_pair(
      n, n,
      [&](std::size_t a, std::size_t b) {
        return b >= a &&
               !sum_geq(lt.rho[a], lt.rho[b], lt.rho[lat.join(a, b)], lt.rho[lat.meet(a, b)]);
      },
      exec);
  if (w.first < n) return failed("L5", w.first, w.second, "rank submodular");
  return rep;
}

std::vector<Scalar> height_length(const FiniteLattice& lat) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < lat.size(); ++i) out.push_back(Scalar::of(lat.height(i)));
  return out;
}

Latroid free_latroid(std::shared_ptr<const FiniteLattice> lat) {
  auto len = height_length(*lat);
  return free_latroid(std::move(lat), std::move(len));
}

Latroid free_latroid(std::shared_ptr<const FiniteLattice> lat, std::vector<Scalar> len) {
  auto rho = len;
  return make_latroid(std::move(lat), std::move(rho), std::move(len));
}

Latroid uniform_latroid(std::shared_ptr<const FiniteLattice> lat, std::vector<Scalar> len,
                        const Scalar& a) {
  if (!less(Scalar::zero(a.u()), a)) throw InputError("uniform latroid needs a > 0");
  std::vector<Scalar> rho;
  for (const auto& l : len) rho.push_back(leq(l, a) ? l : a);
  return make_latroid(std::move(lat), std::move(rho), std::move(len));
}

Latroid restrict_latroid(const Latroid& lt, std::size_t lo, std::size_t hi) {
  const FiniteLattice& lat = lt.lat();
  auto sub = std::make_shared<const FiniteLattice>(interval(lat, lo, hi));
  const auto elems = lat.interval_elements(lo, hi);
  std::vector<Scalar> rho, len;
  for (auto x : elems) {
    rho.push_back(lt.rho[x] - lt.rho[lo]);
    len.push_back(lt.len[x] - lt.len[lo]);
  }
  return make_latroid(std::move(sub), std::move(rho), std::move(len));
}

Latroid direct_sum(const Latroid& a, const Latroid& b) {
  auto lat = std::make_shared<const FiniteLattice>(product(a.lat(), b.lat()));
  std::vector<Scalar> rho, len;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      rho.push_back(a.rho[i] + b.rho[j]);
      len.push_back(a.len[i] + b.len[j]);
    }
  }
  return make_latroid(std::move(lat), std::move(rho), std::move(len));
}

Latroid dual_latroid(const Latroid& lt) {
  const std::size_t n = lt.size();
  auto lat = std::make_shared<const FiniteLattice>(dual(lt.lat()));
  const Scalar& len_top = lt.len[n - 1];
  const Scalar& rho_top = lt.rho[n - 1];
  std::vector<Scalar> rho, len;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t orig = n - 1 - i;
    len.push_back(len_top - lt.len[orig]);
    rho.push_back(len.back() - rho_top + lt.rho[orig]);
  }
  return make_latroid(std::move(lat), std::move(rho), std::move(len));
}

bool dual_restriction_identity(const Latroid& lt, std::size_t lo, std::size_t hi) {
  const std::size_t n = lt.size();
  const Latroid a = dual_latroid(restrict_latroid(lt, lo, hi));
  const Latroid b = restrict_latroid(dual_latroid(lt), n - 1 - hi, n - 1 - lo);
  if (!(a.rho == b.rho && a.len == b.len && a.lat().size() == b.lat().size())) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (a.lat().leq(x, y) != b.lat().leq(x, y)) return false;
    }
  }
  return true;
}

bool dual_length_identity(const Latroid& lt) {
  const std::size_t n = lt.size();
  const Latroid d = dual_latroid(lt);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(d.len[n - 1 - i] == lt.len[n - 1] - lt.len[i])) return false;
  }
  return true;
}

ElementSet independents(const Latroid& lt) {
  ElementSet out;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    if (lt.rho[i] == lt.len[i]) out.push_back(i);
  }
  return out;
}

ElementSet bases(const Latroid& lt) {
  ElementSet out;
  const Scalar& top = lt.rho[lt.size() - 1];
  for (std::size_t i = 0; i < lt.size(); ++i) {
    if (lt.rho[i] == lt.len[i] && lt.rho[i] == top) out.push_back(i);
  }
  return out;
}

ElementSet circuits(const Latroid& lt) {
  const FiniteLattice& lat = lt.lat();
  ElementSet out;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    if (!less(lt.rho[i], lt.len[i])) continue;
    bool below_independent = true;
    for (std::size_t j = 0; j < i && below_independent; ++j) {
      if (lat.less(j, i) && !(lt.rho[j] == lt.len[j])) below_independent = false;
    }
    if (below_independent) out.push_back(i);
  }
  return out;
}

bool crypto_applicable(const Latroid& lt) {
  const auto& f = lt.lat().flags();
  if (!f.graded || !f.modular || !f.complemented || lt.u() != 1) return false;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    if (lt.len[i] != Scalar::of(lt.lat().height(i))) return false;
  }
  return true;
}

AxiomReport axioms_I(const FiniteLattice& lat, const ElementSet& indep) {
  require_crypto_lattice(lat);
  const std::size_t n = lat.size();
  const auto in = membership(lat, indep);
  if (!in[0]) return fail("I1", {0});
  for (std::size_t x = 0; x < n; ++x) {
    if (!in[x]) continue;
    for (std::size_t y = 0; y < x; ++y) {
      if (lat.less(y, x) && !in[y]) return fail("I2", {x, y});
    }
  }
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    if (!in[i1]) continue;
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      if (!in[i2] || lat.height(i2) >= lat.height(i1)) continue;
      bool found = false;
      for (auto j : lat.atoms()) {
        if (lat.leq(j, i1) && !lat.leq(j, i2) && in[lat.join(i2, j)]) {
          found = true;
          break;
        }
      }
      if (!found) return fail("I3", {i1, i2});
    }
  }
  return exchange_check(lat, maximal_below(lat, in), "I4");
}

AxiomReport axioms_B(const FiniteLattice& lat, const ElementSet& base_set) {
  require_crypto_lattice(lat);
  const std::size_t n = lat.size();
  const auto in = membership(lat, base_set);
  if (base_set.empty()) return fail("B1", {});
  const auto lower = lower_covers(lat);
  for (auto b1 : base_set) {
    for (auto b2 : base_set) {
      for (auto h : lower[b1]) {
        // Premise: an atom J <= B1 with J !<= H and J !<= B2.
        std::size_t j_atom = n;
        for (auto j : lat.atoms()) {
          if (lat.leq(j, b1) && !lat.leq(j, h) && !lat.leq(j, b2)) {
            j_atom = j;
            break;
          }
        }
        if (j_atom == n) continue;
        bool found = false;
        for (auto t : lat.atoms()) {
          if (lat.leq(t, b2) && !lat.leq(t, b1) && in[lat.join(h, t)]) {
            found = true;
            break;
          }
        }
        if (!found) return fail("B2", {b1, b2, h, j_atom});
      }
    }
  }
  std::vector<std::vector<std::size_t>> maxes(n);
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<std::size_t> meets;
    for (auto b : base_set) meets.push_back(lat.meet(b, l));
    maxes[l] = maximal_of(lat, std::move(meets));
  }
  return exchange_check(lat, maxes, "B3");
}

AxiomReport axioms_C(const FiniteLattice& lat, const ElementSet& circ) {
  require_crypto_lattice(lat);
  const auto in = membership(lat, circ);
  if (in[0]) return fail("C1", {0});
  for (auto c1 : circ) {
    for (auto c2 : circ) {
      if (c1 != c2 && lat.leq(c1, c2)) return fail("C2", {c1, c2});
    }
  }
  for (auto c1 : circ) {
    for (auto c2 : circ) {
      if (c1 == c2) continue;
      const std::size_t top = lat.join(c1, c2);
      for (std::size_t l = 0; l < top; ++l) {
        if (!lat.leq(l, top) || lat.height(l) != lat.height(top) - 1) continue;
        const bool found =
            std::any_of(circ.begin(), circ.end(), [&](std::size_t c3) { return lat.leq(c3, l); });
        if (!found) return fail("C3", {c1, c2, l});
      }
    }
  }
  return {};
}

std::vector<Scalar> rank_from_independents(const FiniteLattice& lat, const ElementSet& indep) {
  require_crypto_lattice(lat);
  const auto maxes = maximal_below(lat, membership(lat, indep));
  std::vector<Scalar> rho;
  for (std::size_t l = 0; l < lat.size(); ++l) {
    if (maxes[l].empty()) throw HypothesisError("no independent element below #" + std::to_string(l));
    const int h = lat.height(maxes[l][0]);
    for (auto x : maxes[l]) {
      if (lat.height(x) != h) {
        throw HypothesisError("maximal independents below #" + std::to_string(l) +
                              " have different heights");
      }
    }
    rho.push_back(Scalar::of(h));
  }
  return rho;
}

std::vector<Scalar> rank_from_bases(const FiniteLattice& lat, const ElementSet& base_set) {
  require_crypto_lattice(lat);
  if (base_set.empty()) throw HypothesisError("empty basis family");
  std::vector<Scalar> rho;
  for (std::size_t l = 0; l < lat.size(); ++l) {
    std::vector<std::size_t> meets;
    for (auto b : base_set) meets.push_back(lat.meet(b, l));
    const auto maxes = maximal_of(lat, std::move(meets));
    const int h = lat.height(maxes[0]);
    for (auto x : maxes) {
      if (lat.height(x) != h) {
        throw HypothesisError("maximal basis meets with #" + std::to_string(l) +
                              " have different heights");
      }
    }
    rho.push_back(Scalar::of(h));
  }
  return rho;
}

int circuit_chain_length(const FiniteLattice& lat, const ElementSet& circ, std::size_t x,
                         bool lowest_first) {
  std::size_t acc = lat.bottom();
  int count = 0;
  for (;;) {
    std::optional<std::size_t> next;
    for (std::size_t k = 0; k < circ.size(); ++k) {
      const std::size_t c = lowest_first ? circ[k] : circ[circ.size() - 1 - k];
      if (lat.leq(c, x) && !lat.leq(c, acc)) {
        next = c;
        break;
      }
    }
    if (!next) return count;
    acc = lat.join(acc, *next);
    ++count;
  }
}

std::vector<Scalar> rank_from_circuits(const FiniteLattice& lat, const ElementSet& circ) {
  require_crypto_lattice(lat);
  std::vector<Scalar> rho;
  for (std::size_t l = 0; l < lat.size(); ++l) {
    const int k1 = circuit_chain_length(lat, circ, l, true);
    const int k2 = circuit_chain_length(lat, circ, l, false);
    if (k1 != k2) {
      throw HypothesisError("maximal circuit chains below #" + std::to_string(l) +
                            " have different lengths");
    }
    rho.push_back(Scalar::of(lat.height(l) - k1));
  }
  return rho;
}

std::size_t closure(const Latroid& lt, std::size_t x) {
  const FiniteLattice& lat = lt.lat();
  std::size_t acc = x;
  for (std::size_t y = 0; y < lt.size(); ++y) {
    if (lt.rho[lat.join(x, y)] == lt.rho[x]) acc = lat.join(acc, y);
  }
  return acc;
}

ElementSet flats(const Latroid& lt) {
  ElementSet out;
  for (std::size_t x = 0; x < lt.size(); ++x) {
    if (closure(lt, x) == x) out.push_back(x);
  }
  return out;
}

ElementSet hyperplanes(const Latroid& lt) {
  if (lt.u() != 1) throw HypothesisError("hyperplanes need a u = 1 rank function");
  const Scalar target = lt.rho[lt.size() - 1] - Scalar::of(1);
  ElementSet out;
  for (auto x : flats(lt)) {
    if (lt.rho[x] == target) out.push_back(x);
  }
  return out;
}

Scalar gen_weight(const Latroid& lt, const Scalar& a) {
  if (lt.u() != 1) throw HypothesisError("d_a needs a totally ordered (u = 1) codomain");
  std::optional<Rational> best;
  for (std::size_t x = 0; x < lt.size(); ++x) {
    if ((lt.len[x] - lt.rho[x]).value() >= a.value()) {
      if (!best || lt.len[x].value() < *best) best = lt.len[x].value();
    }
  }
  return Scalar(std::vector<Rational>{best.value_or(Rational(0))});
}

std::vector<Scalar> gen_weight_antichain(const Latroid& lt, const Scalar& a) {
  std::vector<Scalar> feasible;
  for (std::size_t x = 0; x < lt.size(); ++x) {
    if (leq(a, lt.len[x] - lt.rho[x])) feasible.push_back(lt.len[x]);
  }
  std::vector<Scalar> out;
  for (const auto& s : feasible) {
    const bool dominated = std::any_of(feasible.begin(), feasible.end(),
                                       [&](const Scalar& t) { return less(t, s); });
    if (!dominated && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace latroid
