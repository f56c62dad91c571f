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

#include "latroid/enumerators.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

#include "latroid/builders.hpp"
#include "latroid/code_latroids.hpp"
#include "latroid/errors.hpp"

namespace latroid {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in polynomial coefficient");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in polynomial coefficient");
  return r;
}

std::int64_t checked_pow(std::int64_t base, std::int64_t e) {
  if (e < 0) throw Error("negative exponent");
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da > db;
  return b < a;
}

ExpPoly::ExpPoly(std::vector<VarGroup> layout) : layout_(std::move(layout)) {
  for (const auto& g : layout_) {
    if (g.size < 0) throw InputError("negative variable group size");
    nvars_ += g.size;
  }
}

int ExpPoly::offset(const std::string& group) const {
  int off = 0;
  for (const auto& g : layout_) {
    if (g.name == group) return off;
    off += g.size;
  }
  throw InputError("polynomial has no variable group '" + group + "'");
}

void ExpPoly::add_term(const Exponents& e, std::int64_t coeff) {
  if (static_cast<int>(e.size()) != nvars_) throw InputError("exponent vector has the wrong width");
  if (std::any_of(e.begin(), e.end(), [](std::int32_t x) { return x < 0; })) {
    throw InputError("negative exponent");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t ExpPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t ExpPoly::sum_of_coefficients() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

void ExpPoly::check_layout(const ExpPoly& o) const {
  if (layout_ != o.layout_) throw InputError("polynomials have different variable layouts");
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
  check_layout(o);
  ExpPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

ExpPoly ExpPoly::operator-(const ExpPoly& o) const {
  check_layout(o);
  ExpPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, checked_mul(c, -1));
  return r;
}

ExpPoly ExpPoly::operator*(const ExpPoly& o) const {
  check_layout(o);
  ExpPoly r(layout_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, checked_mul(ca, cb));
    }
  }
  return r;
}

ExpPoly ExpPoly::set_group_to_one(const std::string& group) const {
  const int off = offset(group);
  int size = 0;
  std::vector<VarGroup> layout;
  for (const auto& g : layout_) {
    if (g.name == group) {
      size = g.size;
    } else {
      layout.push_back(g);
    }
  }
  ExpPoly r(std::move(layout));
  for (const auto& [e, c] : terms_) {
    Exponents f(e.begin(), e.begin() + off);
    f.insert(f.end(), e.begin() + off + size, e.end());
    r.add_term(f, c);
  }
  return r;
}

ExpPoly ExpPoly::remap(std::vector<VarGroup> layout, const std::vector<int>& var_map) const {
  if (static_cast<int>(var_map.size()) != nvars_) throw InputError("variable map has the wrong width");
  ExpPoly r(std::move(layout));
  for (int t : var_map) {
    if (t < 0 || t >= r.nvars_) throw InputError("variable map target out of range");
  }
  for (const auto& [e, c] : terms_) {
    Exponents f(r.nvars_);
    for (int i = 0; i < nvars_; ++i) f[var_map[i]] += e[i];
    r.add_term(f, c);
  }
  return r;
}

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names;
  for (const auto& g : layout_) {
    for (int i = 0; i < g.size; ++i) names.push_back(g.size == 1 ? g.name : g.name + std::to_string(i + 1));
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

nlohmann::json ExpPoly::to_json() const {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& g : layout_) vars.push_back({{"name", g.name}, {"size", g.size}});
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) terms.push_back({{"exponents", e}, {"coefficient", c}});
  return {{"variables", vars}, {"terms", terms}};
}

ExpPoly ExpPoly::from_json(const nlohmann::json& j) {
  try {
    std::vector<VarGroup> layout;
    for (const auto& v : j.at("variables")) {
      layout.push_back({v.at("name").get<std::string>(), v.at("size").get<int>()});
    }
    ExpPoly p(std::move(layout));
    for (const auto& t : j.at("terms")) {
      p.add_term(t.at("exponents").get<Exponents>(), t.at("coefficient").get<std::int64_t>());
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed polynomial: ") + e.what());
  }
}

namespace {

void require_same_ambient(const Code& c, const SupportFn& s) {
  if (!(c.ambient() == s.ambient())) throw InputError("code and support live on different ambients");
}

Exponents to_exponents(const SupportVec& v) { return Exponents(v.begin(), v.end()); }

std::int32_t integral_exponent(const Rational& r, const char* what) {
  if (r.denominator() != 1 || r.numerator() < 0 ||
      r.numerator() > std::numeric_limits<std::int32_t>::max()) {
    throw InputError(std::string(what) + " exponent " + latroid::to_string(r) +
                     " is not a nonnegative integer");
  }
  return static_cast<std::int32_t>(r.numerator());
}

ExpPoly tutte_sum(const Latroid& lt, bool with_z) {
  const FiniteLattice& lat = lt.lat();
  if (!lat.has_points()) throw InputError("Tutte-Whitney functions need a lattice of integer points");
  const int g = static_cast<int>(lat.label(0).size());
  const int w = lt.u();
  const std::size_t top = lat.size() - 1;
  const Label& one = lat.label(top);
  std::vector<VarGroup> layout{{"x", g}};
  if (with_z) layout.push_back({"z", g});
  layout.insert(layout.end(), {{"y", g}, {"u", w}, {"v", w}});
  ExpPoly r(layout);
  for (std::size_t m = 0; m < lat.size(); ++m) {
    const Label& p = lat.label(m);
    Exponents e;
    for (int i = 0; i < g; ++i) e.push_back(static_cast<std::int32_t>(p[i]));
    if (with_z) {
      for (int i = 0; i < g; ++i) e.push_back(static_cast<std::int32_t>(std::min(p[i] + 1, one[i]) - p[i]));
    }
    for (int i = 0; i < g; ++i) e.push_back(static_cast<std::int32_t>(one[i] - p[i]));
    const Scalar du = lt.rho[top] - lt.rho[m];
    const Scalar dv = lt.len[m] - lt.rho[m];
    for (int f = 0; f < w; ++f) e.push_back(integral_exponent(du[f], "u"));
    for (int f = 0; f < w; ++f) e.push_back(integral_exponent(dv[f], "v"));
    r.add_term(e, 1);
  }
  return r;
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

// Layout (x: u, y: u) embedding of a factor polynomial at block offset `off`.
std::vector<int> xy_map(int n, int off, int total) {
  std::vector<int> m;
  for (int j = 0; j < n; ++j) m.push_back(off + j);
  for (int j = 0; j < n; ++j) m.push_back(total + off + j);
  return m;
}

}  // namespace

ExpPoly refined_enumerator(const Code& c, const SupportFn& s) {
  require_same_ambient(c, s);
  const int u = s.u();
  const SupportVec top = s.top();
  ExpPoly r({{"x", u}, {"y", u}});
  for (VecKey k : c.keys()) {
    const SupportVec v = s.eval(k);
    Exponents e = to_exponents(v);
    for (int i = 0; i < u; ++i) e.push_back(top[i] - v[i]);
    r.add_term(e, 1);
  }
  return r;
}

ExpPoly homogeneous_enumerator(const Code& c, const SupportFn& s) {
  const auto dist = weight_distribution(c, s);
  const auto total = static_cast<std::int32_t>(dist.size() - 1);
  ExpPoly r({{"x", 1}, {"y", 1}});
  for (std::int32_t w = 0; w <= total; ++w) r.add_term({w, total - w}, dist[w]);
  return r;
}

std::vector<std::int64_t> weight_distribution(const Code& c, const SupportFn& s) {
  require_same_ambient(c, s);
  std::vector<std::int64_t> dist(static_cast<std::size_t>(norm1(s.top())) + 1);
  for (VecKey k : c.keys()) ++dist[static_cast<std::size_t>(weight(s, k))];
  return dist;
}

std::vector<std::vector<std::int64_t>> generalized_distributions(const Code& c,
                                                                 const SupportFn& s) {
  require_same_ambient(c, s);
  std::vector<std::vector<std::int64_t>> table(
      static_cast<std::size_t>(length_lambda(c)) + 1,
      std::vector<std::int64_t>(static_cast<std::size_t>(norm1(s.top())) + 1));
  for (const auto& d : enumerate_submodules(c)) {
    ++table[static_cast<std::size_t>(length_lambda(d))][static_cast<std::size_t>(code_weight(s, d))];
  }
  return table;
}

ExpPoly generalized_enumerator(const Code& c, const SupportFn& s, int r) {
  const int top = length_lambda(c);
  if (r < 0 || r > top) {
    throw InputError("r must lie in [0, lambda(C)] = [0, " + std::to_string(top) + "]");
  }
  const auto table = generalized_distributions(c, s);
  const auto total = static_cast<std::int32_t>(table[r].size() - 1);
  ExpPoly p({{"x", 1}, {"y", 1}});
  for (std::int32_t w = 0; w <= total; ++w) p.add_term({total - w, w}, table[r][w]);
  return p;
}

std::int64_t dbar_from_distributions(const std::vector<std::vector<std::int64_t>>& table, int r) {
  if (r < 1 || r >= static_cast<int>(table.size())) throw InputError("r out of range");
  for (std::size_t w = 0; w < table[0].size(); ++w) {
    for (std::size_t j = static_cast<std::size_t>(r); j < table.size(); ++j) {
      if (table[j][w] != 0) return static_cast<std::int64_t>(w);
    }
  }
  throw Error("no submodule of length >= " + std::to_string(r));
}

ExpPoly tutte_whitney_R(const Latroid& lt) { return tutte_sum(lt, false); }

ExpPoly tutte_whitney_Rprime(const Latroid& lt) { return tutte_sum(lt, true); }

ExpPoly substitute_tutte(const ExpPoly& rprime, const std::vector<std::int64_t>& v_values) {
  const int ox = rprime.offset("x"), oz = rprime.offset("z"), oy = rprime.offset("y");
  const int ov = rprime.offset("v");
  const int g = oz - ox;
  const int w = rprime.num_vars() - ov;
  if (static_cast<int>(v_values.size()) != w) throw InputError("wrong number of v values");
  ExpPoly r({{"x", g}, {"y", g}});
  for (const auto& [e, coeff] : rprime.terms()) {
    std::int64_t k = coeff;
    for (int f = 0; f < w; ++f) k = checked_mul(k, checked_pow(v_values[f], e[ov + f]));
    Exponents base(2 * static_cast<std::size_t>(g));
    std::vector<int> zs(g);
    for (int i = 0; i < g; ++i) {
      zs[i] = e[oz + i];
      base[i] = e[ox + i];
      base[g + i] = e[oy + i] - zs[i];
      if (base[g + i] < 0) throw Error("y-denominator does not divide the term");
    }
    // Expand prod_i (y_i - x_i)^{z_i}; j[i] counts the x_i picked.
    std::vector<int> j(g, 0);
    while (true) {
      std::int64_t t = k;
      Exponents ex = base;
      for (int i = 0; i < g; ++i) {
        t = checked_mul(t, binomial(zs[i], j[i]));
        if (j[i] % 2) t = -t;
        ex[i] += j[i];
        ex[g + i] += zs[i] - j[i];
      }
      r.add_term(ex, t);
      int i = 0;
      while (i < g && j[i] == zs[i]) j[i++] = 0;
      if (i == g) break;
      ++j[i];
    }
  }
  return r;
}

ExpPoly enumerator_from_tutte(const Code& c) {
  const Pir& ring = c.ring();
  std::vector<std::int64_t> v;
  for (const auto& f : ring.factors()) v.push_back(residue_field_size(f));
  return substitute_tutte(tutte_whitney_Rprime(chain_support_latroid(c)), v);
}

ExpPoly enumerator_product(const Code& c, const SupportFn& s) {
  require_same_ambient(c, s);
  const SplitSupport split = split_support(s);
  const int u = s.u();
  ExpPoly prod({{"x", u}, {"y", u}});
  prod.add_term(Exponents(2 * static_cast<std::size_t>(u)), 1);
  int off = 0;
  for (std::size_t f = 0; f < split.factors.size(); ++f) {
    const SupportFn& sf = split.factors[f];
    const ExpPoly wf = refined_enumerator(c.project(f), sf);
    std::vector<int> map;
    for (int j = 0; j < sf.u(); ++j) map.push_back(split.permutation[off + j]);
    for (int j = 0; j < sf.u(); ++j) map.push_back(u + split.permutation[off + j]);
    prod = prod * wf.remap({{"x", u}, {"y", u}}, map);
    off += sf.u();
  }
  return prod;
}

CorollaryReport pir_tutte_corollary(const Code& c) {
  const Pir& ring = c.ring();
  const int l = static_cast<int>(ring.num_factors());
  const int n = c.n();
  const int g = l * n;
  const std::vector<VarGroup> full{{"x", g}, {"z", g}, {"y", g}, {"u", l}, {"v", l}};
  ExpPoly rprod(full);
  rprod.add_term(Exponents(static_cast<std::size_t>(3 * g + 2 * l)), 1);
  ExpPoly wprod({{"x", g}, {"y", g}});
  wprod.add_term(Exponents(2 * static_cast<std::size_t>(g)), 1);
  for (int f = 0; f < l; ++f) {
    const Code cf = c.project(static_cast<std::size_t>(f));
    const ExpPoly rf = tutte_whitney_Rprime(chain_support_latroid(cf));
    std::vector<int> map;
    for (int block = 0; block < 3; ++block) {
      for (int j = 0; j < n; ++j) map.push_back(block * g + f * n + j);
    }
    map.push_back(3 * g + f);
    map.push_back(3 * g + l + f);
    rprod = rprod * rf.remap(full, map);
    const ExpPoly wf = substitute_tutte(rf, {residue_field_size(ring.factor(f))});
    wprod = wprod * wf.remap({{"x", g}, {"y", g}}, xy_map(n, f * n, g));
  }
  CorollaryReport rep;
  rep.rprime_factors = rprod == tutte_whitney_Rprime(chain_support_latroid(c));
  rep.enumerator_matches = wprod == refined_enumerator(c, SupportFn::chain(c.ambient()));
  return rep;
}

IdentityReport inclusion_exclusion_check(const Code& c) {
  const SupportFn s = SupportFn::chain(c.ambient());
  const FiniteLattice lat = chain_support_lattice(c.ambient());
  std::vector<SupportVec> supps;
  for (VecKey k : c.keys()) supps.push_back(s.eval(k));
  // |C_B| per grid point.
  std::vector<std::int64_t> below(lat.size());
  std::vector<std::int64_t> exact(lat.size());
  for (std::size_t b = 0; b < lat.size(); ++b) {
    const Label& p = lat.label(b);
    for (const auto& v : supps) {
      bool le = true, eq = true;
      for (std::size_t i = 0; i < p.size(); ++i) {
        le = le && v[i] <= p[i];
        eq = eq && v[i] == p[i];
      }
      below[b] += le;
      exact[b] += eq;
    }
  }
  IdentityReport rep;
  for (std::size_t a = 0; a < lat.size(); ++a) {
    const Label& p = lat.label(a);
    std::vector<std::size_t> movable;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] > 0) movable.push_back(i);
    }
    std::int64_t sum = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << movable.size()); ++mask) {
      Label b = p;
      for (std::size_t t = 0; t < movable.size(); ++t) {
        if (mask >> t & 1) --b[movable[t]];
      }
      const std::int64_t term = below[lat.index_of(b)];
      sum += std::popcount(mask) % 2 ? -term : term;
    }
    ++rep.checked;
    if (sum != exact[a]) {
      rep.ok = false;
      rep.failing = p;
      rep.message = "n_C(A) = " + std::to_string(exact[a]) + " but the alternating sum is " +
                    std::to_string(sum);
      return rep;
    }
  }
  return rep;
}

namespace {

// prod_i (b_i ? lead_i : y_i - x_i) on layout (x: u, y: u); lead is x or y.
ExpPoly binomial_side(int u, std::uint32_t b, bool lead_is_x) {
  const std::vector<VarGroup> layout{{"x", u}, {"y", u}};
  ExpPoly p(layout);
  p.add_term(Exponents(2 * static_cast<std::size_t>(u)), 1);
  for (int i = 0; i < u; ++i) {
    ExpPoly f(layout);
    Exponents ex(2 * static_cast<std::size_t>(u)), ey(2 * static_cast<std::size_t>(u));
    ex[i] = 1;
    ey[u + i] = 1;
    if (b >> i & 1) {
      f.add_term(lead_is_x ? ex : ey, 1);
    } else {
      f.add_term(ey, 1);
      f.add_term(ex, -1);
    }
    p = p * f;
  }
  return p;
}

ExpPoly binomial_sum(int u, std::uint32_t b) {
  ExpPoly rhs({{"x", u}, {"y", u}});
  for (std::uint32_t a = 0; a < (1u << u); ++a) {
    if ((a & b) != b) continue;
    Exponents e(2 * static_cast<std::size_t>(u));
    for (int i = 0; i < u; ++i) {
      e[i] = a >> i & 1;
      e[u + i] = 1 - e[i];
    }
    rhs.add_term(e, std::popcount(a) % 2 == std::popcount(b) % 2 ? 1 : -1);
  }
  return rhs;
}

IdentityReport binomial_check(int u, bool lead_is_x) {
  if (u < 0 || u > 16) throw InputError("binomial identity check needs 0 <= u <= 16");
  IdentityReport rep;
  for (std::uint32_t b = 0; b < (1u << u); ++b) {
    const ExpPoly lhs = binomial_side(u, b, lead_is_x);
    const ExpPoly rhs = binomial_sum(u, b);
    ++rep.checked;
    if (!(lhs == rhs)) {
      rep.ok = false;
      for (int i = 0; i < u; ++i) rep.failing.push_back(b >> i & 1);
      rep.message = "binomial identity fails: " + lhs.to_string() + " vs " + rhs.to_string();
      return rep;
    }
  }
  return rep;
}

}  // namespace

IdentityReport binomial_identity_check(int u) { return binomial_check(u, true); }

IdentityReport binomial_identity_check_y_lead(int u) { return binomial_check(u, false); }

}  // namespace latroid
