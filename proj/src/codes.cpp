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

#include "latroid/codes.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "latroid/errors.hpp"

namespace latroid {
namespace {

std::vector<VecKey> sorted_unique(std::unordered_set<VecKey>&& set) {
  std::vector<VecKey> keys(set.begin(), set.end());
  std::sort(keys.begin(), keys.end());
  return keys;
}

// A + B for two key sets closed under addition (so A + B is the sum module).
std::vector<VecKey> sum_keys(const Ambient& amb, const std::vector<VecKey>& a,
                             const std::vector<VecKey>& b) {
  std::unordered_set<VecKey> out;
  out.reserve(a.size() * 2);
  for (VecKey y : b) {
    if (out.count(y)) continue;  // the coset a + y is already present
    for (VecKey x : a) out.insert(amb.add(x, y));
    require_cap(out.size(), caps().codewords, "code size");
  }
  return sorted_unique(std::move(out));
}

std::vector<RingElement> ideal_elements(const Pir& ring, const Ideal& ideal) {
  std::vector<RingElement> out;
  for (std::uint32_t x = 0; x < ring.size(); ++x) {
    if (ring.in_ideal(RingElement{x}, ideal)) out.push_back(RingElement{x});
  }
  return out;
}

}  // namespace

Ambient::Ambient(Pir ring, int n) : ring_(std::move(ring)), n_(n) {
  if (n < 1) throw InputError("ambient length n must be at least 1");
  card_ = 1;
  place_.assign(static_cast<std::size_t>(n), 1);
  for (int i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(card_, std::uint64_t{ring_.size()}, &card_) ||
        card_ > (std::uint64_t{1} << 62)) {
      throw CapExceeded("|R|^n does not fit in 63 bits");
    }
  }
  for (int i = n - 2; i >= 0; --i) place_[i] = place_[i + 1] * ring_.size();
}

VecKey Ambient::pack(const Vector& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw InputError("vector has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(n_));
  }
  VecKey key = 0;
  for (int i = 0; i < n_; ++i) {
    if (v[i].index >= ring_.size()) throw InputError("vector entry outside the ring");
    key += v[i].index * place_[i];
  }
  return key;
}

Vector Ambient::unpack(VecKey key) const {
  Vector v(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) v[i] = entry(key, i);
  return v;
}

VecKey Ambient::add(VecKey a, VecKey b) const {
  VecKey out = 0;
  for (int i = 0; i < n_; ++i) out += ring_.add(entry(a, i), entry(b, i)).index * place_[i];
  return out;
}

VecKey Ambient::scale(RingElement r, VecKey a) const {
  VecKey out = 0;
  for (int i = 0; i < n_; ++i) out += ring_.mul(r, entry(a, i)).index * place_[i];
  return out;
}

VecKey Ambient::neg(VecKey a) const {
  VecKey out = 0;
  for (int i = 0; i < n_; ++i) out += ring_.neg(entry(a, i)).index * place_[i];
  return out;
}

Vector Ambient::from_integers(const std::vector<std::int64_t>& row) const {
  if (static_cast<int>(row.size()) != n_) {
    throw InputError("row has " + std::to_string(row.size()) + " entries, expected " +
                     std::to_string(n_));
  }
  Vector v;
  for (auto x : row) v.push_back(ring_.from_integer(x));
  return v;
}

std::string Ambient::to_string(VecKey key) const {
  std::string s = "(";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += ring_.to_string(entry(key, i));
  }
  return s + ")";
}

Code Code::span(const Ambient& amb, const std::vector<Vector>& generators) {
  std::vector<VecKey> keys{0};
  for (const auto& g : generators) {
    const VecKey gk = amb.pack(g);
    if (std::binary_search(keys.begin(), keys.end(), gk)) continue;
    std::unordered_set<VecKey> multiples;
    for (std::uint32_t r = 0; r < amb.ring().size(); ++r) {
      multiples.insert(amb.scale(RingElement{r}, gk));
    }
    keys = sum_keys(amb, keys, sorted_unique(std::move(multiples)));
  }
  return Code(amb, std::move(keys));
}

Code Code::from_keys(const Ambient& amb, std::vector<VecKey> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  if (keys.empty() || keys.front() != 0) throw InputError("a code must contain the zero vector");
  return Code(amb, std::move(keys));
}

Code Code::zero(const Ambient& amb) { return Code(amb, {0}); }

Code Code::whole(const Ambient& amb) {
  require_cap(amb.cardinality(), caps().codewords, "code size");
  std::vector<VecKey> keys(amb.cardinality());
  for (VecKey k = 0; k < keys.size(); ++k) keys[k] = k;
  return Code(amb, std::move(keys));
}

std::vector<Vector> Code::codewords() const {
  std::vector<Vector> out;
  out.reserve(keys_.size());
  for (VecKey k : keys_) out.push_back(amb_.unpack(k));
  return out;
}

bool Code::contains(VecKey key) const { return std::binary_search(keys_.begin(), keys_.end(), key); }

bool Code::is_subcode_of(const Code& other) const {
  return std::includes(other.keys_.begin(), other.keys_.end(), keys_.begin(), keys_.end());
}

Code Code::intersect(const Code& other) const {
  std::vector<VecKey> out;
  std::set_intersection(keys_.begin(), keys_.end(), other.keys_.begin(), other.keys_.end(),
                        std::back_inserter(out));
  return Code(amb_, std::move(out));
}

Code Code::sum(const Code& other) const { return Code(amb_, sum_keys(amb_, keys_, other.keys_)); }

Code Code::project(std::size_t f) const {
  Ambient fa(ring().factor_ring(f), n());
  std::unordered_set<VecKey> out;
  for (VecKey k : keys_) {
    Vector v = amb_.unpack(k);
    for (auto& x : v) x = ring().project(x, f);
    out.insert(fa.pack(v));
  }
  return Code(fa, sorted_unique(std::move(out)));
}

Code Code::scaled(RingElement r) const {
  std::unordered_set<VecKey> out;
  for (VecKey k : keys_) out.insert(amb_.scale(r, k));
  return Code(amb_, sorted_unique(std::move(out)));
}

Code Code::mapped(const std::vector<RingElement>& matrix) const {
  const auto n = static_cast<std::size_t>(this->n());
  if (matrix.size() != n * n) throw InputError("matrix must be n x n");
  std::vector<VecKey> out;
  out.reserve(keys_.size());
  for (VecKey k : keys_) {
    const Vector v = amb_.unpack(k);
    Vector w(n, ring().zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) w[i] = ring().add(w[i], ring().mul(matrix[i * n + j], v[j]));
    }
    out.push_back(amb_.pack(w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Code(amb_, std::move(out));
}

int exact_log(std::uint64_t value, std::int64_t p) {
  int e = 0;
  const auto up = static_cast<std::uint64_t>(p);
  while (value > 1 && value % up == 0) {
    value /= up;
    ++e;
  }
  if (value != 1) throw InputError("cardinality is not a power of " + std::to_string(p));
  return e;
}

std::vector<int> lambda_factors(const Code& c) {
  std::vector<int> out;
  for (std::size_t f = 0; f < c.ring().num_factors(); ++f) {
    out.push_back(exact_log(c.project(f).size(), c.ring().factor(f).p));
  }
  return out;
}

int length_lambda(const Code& c) {
  int total = 0;
  for (int l : lambda_factors(c)) total += l;
  return total;
}

std::vector<int> mu_factors(const Code& c) {
  std::vector<int> out;
  for (std::size_t f = 0; f < c.ring().num_factors(); ++f) {
    const Code cf = c.project(f);
    const Code alpha_cf = cf.scaled(cf.ring().alpha_power(0, 1));
    if (cf.size() % alpha_cf.size() != 0) throw Error("|C_f| is not divisible by |alpha C_f|");
    out.push_back(exact_log(cf.size() / alpha_cf.size(), c.ring().factor(f).p));
  }
  return out;
}

int mu(const Code& c) {
  const auto m = mu_factors(c);
  return *std::max_element(m.begin(), m.end());
}

int big_m(const Code& c) {
  int total = 0;
  for (int m : mu_factors(c)) total += m;
  return total;
}

std::vector<Code> enumerate_submodules(const Code& c) {
  require_cap(c.size(), caps().submodule_code, "code size for submodule enumeration");
  const Ambient& amb = c.ambient();
  std::set<std::vector<VecKey>> seen;
  std::vector<std::vector<VecKey>> cyclic;
  for (VecKey k : c.keys()) {
    auto keys = Code::span(amb, {amb.unpack(k)}).keys();
    if (seen.insert(keys).second) cyclic.push_back(std::move(keys));
  }
  std::vector<std::vector<VecKey>> family(cyclic.begin(), cyclic.end());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto& z : cyclic) {
      if (std::includes(family[i].begin(), family[i].end(), z.begin(), z.end())) continue;
      auto s = sum_keys(amb, family[i], z);
      if (seen.insert(s).second) {
        family.push_back(std::move(s));
        require_cap(family.size(), caps().lattice, "number of submodules");
      }
    }
  }
  std::sort(family.begin(), family.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Code> out;
  out.reserve(family.size());
  for (auto& keys : family) out.push_back(Code::from_keys(amb, std::move(keys)));
  return out;
}

RectangularModule rectangular_closure(const Code& c) {
  const Pir& ring = c.ring();
  RectangularModule m;
  for (int i = 0; i < c.n(); ++i) {
    Ideal ideal;
    for (std::size_t f = 0; f < ring.num_factors(); ++f) {
      int e = ring.factor(f).k;
      for (VecKey k : c.keys()) e = std::min(e, ring.valuation(c.ambient().entry(k, i), f));
      ideal.exponents.push_back(e);
    }
    m.ideals.push_back(std::move(ideal));
  }
  return m;
}

Code rectangular_code(const Ambient& amb, const RectangularModule& m) {
  if (static_cast<int>(m.ideals.size()) != amb.n()) {
    throw InputError("rectangular module has the wrong number of coordinates");
  }
  std::vector<VecKey> keys{0};
  for (int i = 0; i < amb.n(); ++i) {
    const auto elems = ideal_elements(amb.ring(), m.ideals[i]);
    std::vector<VecKey> next;
    next.reserve(keys.size() * elems.size());
    Vector unit(static_cast<std::size_t>(amb.n()), amb.ring().zero());
    for (VecKey k : keys) {
      for (RingElement x : elems) {
        unit[i] = x;
        next.push_back(amb.add(k, amb.pack(unit)));
      }
    }
    keys = std::move(next);
    require_cap(keys.size(), caps().codewords, "rectangular module size");
  }
  return Code::from_keys(amb, std::move(keys));
}

std::vector<RectangularModule> all_rectangular_modules(const Ambient& amb) {
  const Pir& ring = amb.ring();
  std::vector<RectangularModule> out{RectangularModule{}};
  for (int i = 0; i < amb.n(); ++i) {
    std::vector<std::vector<int>> ideals{{}};
    for (std::size_t f = 0; f < ring.num_factors(); ++f) {
      std::vector<std::vector<int>> next;
      for (const auto& e : ideals) {
        for (int x = 0; x <= ring.factor(f).k; ++x) {
          auto g = e;
          g.push_back(x);
          next.push_back(std::move(g));
        }
      }
      ideals = std::move(next);
    }
    std::vector<RectangularModule> next;
    for (const auto& m : out) {
      for (const auto& e : ideals) {
        auto g = m;
        g.ideals.push_back(Ideal{e});
        next.push_back(std::move(g));
      }
    }
    out = std::move(next);
    require_cap(out.size(), caps().lattice, "number of rectangular modules");
  }
  return out;
}

bool rect_leq(const RectangularModule& a, const RectangularModule& b) {
  for (std::size_t i = 0; i < a.ideals.size(); ++i) {
    for (std::size_t f = 0; f < a.ideals[i].exponents.size(); ++f) {
      if (a.ideals[i].exponents[f] < b.ideals[i].exponents[f]) return false;
    }
  }
  return true;
}

}  // namespace latroid
