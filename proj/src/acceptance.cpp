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


#include "latroid/acceptance.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "latroid/builders.hpp"
#include "latroid/code_latroids.hpp"
#include "latroid/enumerators.hpp"
#include "latroid/errors.hpp"
#include "latroid/fixtures.hpp"
#include "latroid/isometries.hpp"
#include "latroid/latroid.hpp"

namespace latroid {
namespace {

struct Corpus {
  std::vector<Code> codes;          // chain-ring corpus of the Tutte criterion
  std::vector<Code> product_codes;  // Z_6^2
  std::vector<Code> block_codes;    // F_2^3 and F_2^4, dim <= 3
  std::vector<MatrixCode> rank_codes;   // m > n
  std::vector<MatrixCode> vector_rank_codes;  // m = 1: q-matroids
  std::vector<MatrixCode> sum_rank_codes;     // two blocks, equal m > n_i
};

struct NamedLatroid {
  std::string name;
  Latroid lt;
};

std::string describe(const Code& c) {
  std::ostringstream os;
  os << c.ring().name() << "^" << c.n() << " |C|=" << c.size() << " {";
  for (std::size_t i = 0; i < c.keys().size() && i < 4; ++i) {
    os << (i ? ", " : "") << c.ambient().to_string(c.keys()[i]);
  }
  os << (c.keys().size() > 4 ? ", ...}" : "}");
  return os.str();
}

std::string describe(const MatrixCode& c) {
  std::ostringstream os;
  os << "F_" << c.q() << " blocks";
  for (const auto& b : c.blocks()) os << " " << b.m << "x" << b.n;
  os << " dim " << c.dim();
  return os.str();
}

Corpus build_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Corpus k;
  for (const Ambient& amb : {Ambient(Pir::chain(2, 2), 2), Ambient(Pir::chain(2, 3), 1)}) {
    for (Code& c : cyclic_codes(amb)) k.codes.push_back(std::move(c));
  }
  for (const Ambient& amb :
       {Ambient(Pir::chain(2, 2), 2), Ambient(Pir::chain(3, 2), 2), Ambient(Pir::chain(2, 1), 3)}) {
    for (Code& c : distinct_random_codes(amb, 2, 5, rng)) k.codes.push_back(std::move(c));
  }
  const Ambient z6(z6_ring(), 2);
  k.product_codes = distinct_random_codes(z6, 2, 4, rng);
  for (Code& c : distinct_random_codes(z6, 1, 3, rng)) k.product_codes.push_back(std::move(c));
  for (int n : {3, 4}) {
    const Ambient f2(Pir::chain(2, 1), n);
    for (int gens = 1; gens <= 3; ++gens) {
      for (Code& c : distinct_random_codes(f2, gens, 1, rng)) k.block_codes.push_back(std::move(c));
    }
  }
  const std::vector<std::pair<int, Block>> rank_shapes{
      {2, {3, 2}}, {2, {3, 2}}, {3, {3, 2}}, {2, {4, 3}}, {3, {4, 2}}, {2, {4, 2}}};
  for (const auto& [q, b] : rank_shapes) {
    k.rank_codes.push_back(random_matrix_code(q, {b}, 2, rng));
  }
  for (const auto& [q, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 3}, {3, 2}, {2, 4}}) {
    k.vector_rank_codes.push_back(random_matrix_code(q, {Block{1, n}}, 2, rng));
  }
  for (int t = 0; t < 3; ++t) {
    const MatrixCode a = random_matrix_code(2, {Block{3, 1}}, 1, rng);
    const MatrixCode b = random_matrix_code(2, {Block{3, 2}}, 1 + t % 2, rng);
    k.sum_rank_codes.push_back(product_code(a, b));
  }
  return k;
}

std::vector<Code> all_ring_codes(const Corpus& k) {
  std::vector<Code> out = k.codes;
  out.insert(out.end(), k.product_codes.begin(), k.product_codes.end());
  return out;
}

std::vector<NamedLatroid> corpus_latroids(const Corpus& k) {
  std::vector<NamedLatroid> out;
  for (const Code& c : all_ring_codes(k)) {
    const Latroid chain = chain_support_latroid(c);
    out.push_back({"chain support latroid of " + describe(c), chain});
    if (c.ring().num_factors() > 1) {
      out.push_back({"collapsed chain support latroid of " + describe(c), collapse_to_norm(chain)});
    }
    const SubmoduleLattice lat = submodule_lattice(Code::whole(c.ambient()));
    out.push_back({"code latroid of " + describe(c), latroid_from_code(c, lat, lambda_length)});
    if (c.ring().is_chain_ring()) {
      const RectangularLattice rl = rectangular_lattice(c.ambient());
      out.push_back({"rho^supp of " + describe(c), rect_supp_latroid(c, SupportFn::chain(c.ambient()), rl)});
    }
  }
  for (const Code& c : k.block_codes) out.push_back({"block matroid of " + describe(c), block_matroid(c)});
  for (const MatrixCode& c : k.rank_codes) {
    out.push_back({"rank-metric latroid of " + describe(c),
                   rank_metric_latroid(c, subspace_lattice(c.q(), c.blocks()[0].n))});
  }
  for (const MatrixCode& c : k.vector_rank_codes) {
    out.push_back({"q-matroid of " + describe(c), rank_metric_latroid(c, subspace_lattice(c.q(), c.blocks()[0].n))});
  }
  for (const MatrixCode& c : k.sum_rank_codes) {
    out.push_back({"sum-rank latroid (columns) of " + describe(c), sum_rank_latroid(c, SumRankConvention::Column)});
    out.push_back({"sum-rank latroid (rows) of " + describe(c), sum_rank_latroid(c, SumRankConvention::Row)});
  }
  return out;
}

// Accumulates checks; the first failure message is kept.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checked_;
    if (!ok && first_.empty()) first_ = what();
    failed_ += !ok;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checked() const { return checked_; }
  std::string summary(const std::string& counts) const {
    if (ok()) return counts;
    return counts + "; " + std::to_string(failed_) + " failed, first: " + first_;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_;
};

using Body = std::function<std::pair<bool, std::string>(std::uint64_t)>;

std::pair<bool, std::string> tutte_identity(std::uint64_t seed) {
  const Corpus k = build_corpus(seed);
  Tally t;
  for (const Code& c : k.codes) {
    t.check(enumerator_from_tutte(c) == refined_enumerator(c, SupportFn::chain(c.ambient())),
            [&] { return describe(c); });
  }
  const bool enough = k.codes.size() >= 25;
  return {t.ok() && enough, t.summary(std::to_string(k.codes.size()) + " codes, W_C from R' equals W_C")};
}

std::pair<bool, std::string> pir_corollary(std::uint64_t seed) {
  const Corpus k = build_corpus(seed);
  Tally t;
  for (const Code& c : k.product_codes) {
    const CorollaryReport rep = pir_tutte_corollary(c);
    const SupportFn s = SupportFn::chain(c.ambient());
    t.check(rep.ok() && enumerator_product(c, s) == refined_enumerator(c, s), [&] {
      return describe(c) + (rep.rprime_factors ? "" : " (R' does not factor)");
    });
  }
  const bool enough = k.product_codes.size() >= 5;
  return {t.ok() && enough,
          t.summary(std::to_string(k.product_codes.size()) + " Z_6^2 codes, factored R' reproduces W_C")};
}

std::pair<bool, std::string> latroid_axioms(std::uint64_t seed) {
  const auto lts = corpus_latroids(build_corpus(seed));
  Tally t;
  for (const auto& [name, lt] : lts) {
    const LatroidReport rep = validate_latroid(lt);
    t.check(rep.valid, [&] { return name + ": " + rep.message; });
  }
  return {t.ok(), t.summary(std::to_string(lts.size()) + " latroids pass L1-L5")};
}

std::pair<bool, std::string> cryptomorphisms(std::uint64_t seed) {
  const auto lts = corpus_latroids(build_corpus(seed));
  Tally t;
  std::size_t skipped = 0;
  for (const auto& [name, lt] : lts) {
    if (!crypto_applicable(lt)) {
      ++skipped;
      continue;
    }
    const FiniteLattice& lat = lt.lat();
    const ElementSet in = independents(lt), bs = bases(lt), cs = circuits(lt);
    const AxiomReport ai = axioms_I(lat, in), ab = axioms_B(lat, bs), ac = axioms_C(lat, cs);
    t.check(ai.ok && ab.ok && ac.ok, [&] { return name + ": " + ai.message + ab.message + ac.message; });
    t.check(rank_from_independents(lat, in) == lt.rho, [&] { return name + ": rank from independents"; });
    t.check(rank_from_bases(lat, bs) == lt.rho, [&] { return name + ": rank from bases"; });
    t.check(rank_from_circuits(lat, cs) == lt.rho, [&] { return name + ": rank from circuits"; });
  }
  const std::size_t used = lts.size() - skipped;
  return {t.ok() && used > 0,
          t.summary(std::to_string(used) + " latroids round-tripped, " + std::to_string(skipped) +
                    " skipped (length is not the height or lattice not complemented)")};
}

std::pair<bool, std::string> weight_equalities(std::uint64_t seed) {
  const Corpus k = build_corpus(seed);
  Tally t;
  for (const Code& c : all_ring_codes(k)) {
    t.check(latroid_weights_equal_code_weights(c).all_equal, [&] { return "dbar vs latroid: " + describe(c); });
  }
  for (const MatrixCode& c : k.rank_codes) {
    t.check(rank_weights_equal(c).all_equal, [&] { return "rank metric: " + describe(c); });
  }
  for (const MatrixCode& c : k.sum_rank_codes) {
    t.check(sum_rank_weights_equal(c).all_equal, [&] { return "sum-rank: " + describe(c); });
  }
  for (const Code& c : k.block_codes) {
    t.check(block_weights_equal(c).all_equal, [&] { return "block: " + describe(c); });
  }
  const bool enough = k.rank_codes.size() >= 5 && k.block_codes.size() >= 5;
  return {t.ok() && enough,
          t.summary(std::to_string(all_ring_codes(k).size()) + " ring codes, " +
                    std::to_string(k.rank_codes.size()) + " rank-metric, " +
                    std::to_string(k.sum_rank_codes.size()) + " sum-rank, " +
                    std::to_string(k.block_codes.size()) + " block codes")};
}

std::pair<bool, std::string> strict_monotonicity(std::uint64_t seed) {
  const Corpus k = build_corpus(seed);
  Tally t;
  for (const Code& c : all_ring_codes(k)) {
    const SupportFn s = SupportFn::chain(c.ambient());
    const int lambda = length_lambda(c);
    for (int r = 1; r < lambda; ++r) {
      const auto a = code_gen_weights_dbar(c, s, r), b = code_gen_weights_dbar(c, s, r + 1);
      t.check(b > a, [&] { return describe(c) + " r=" + std::to_string(r); });
    }
  }
  // tau gives every nonzero module weight 1, so dbar_1 = dbar_2 on F_2^2.
  const Ambient f2(Pir::chain(2, 1), 2);
  const SupportFn tau = tau_support(f2);
  const Code whole = Code::whole(f2);
  const auto d1 = code_gen_weights_dbar(whole, tau, 1), d2 = code_gen_weights_dbar(whole, tau, 2);
  const bool control = d1 == d2;
  return {t.ok() && control, t.summary(std::to_string(t.checked()) + " strict steps; tau control dbar_1 = " +
                                       std::to_string(d1) + ", dbar_2 = " + std::to_string(d2))};
}

std::pair<bool, std::string> isometry_fixtures(std::uint64_t seed) {
  Tally t;
  const SupportFn s6 = z6_indicator_support(2);
  const RingMatrix m = z6_example_matrix();
  t.check(is_isometry(m, s6), [] { return "Z_6 matrix is not an isometry"; });
  const auto proj = pir_isometry_projections(m, s6);
  const std::vector<std::vector<std::vector<std::int64_t>>> want{{{0, 1}, {1, 0}}, {{2, 0}, {0, 2}}};
  t.check(proj.size() == 2 && proj[0].matrix.to_integers() == want[0] && proj[1].matrix.to_integers() == want[1],
          [] { return "Z_6 factor maps differ from [[0,1],[1,0]] and [[2,0],[0,2]]"; });
  const SplitSupport split = split_support(s6);
  for (const auto& fm : proj) {
    const ChainDecomposition d = decompose_chain_isometry(fm.matrix, split.factors[fm.factor]);
    t.check(d.d * d.p == fm.matrix && d.d.is_diagonal() && d.p.is_permutation(),
            [&] { return "projection " + std::to_string(fm.factor) + " does not decompose"; });
  }
  const Ambient z6(z6_ring(), 2);
  for (const Code& c : {Code::span(z6, {z6.from_integers({1, 0})}), Code::span(z6, {z6.from_integers({1, 2})}),
                        Code::span(z6, {z6.from_integers({3, 2})})}) {
    t.check(equivalence_invariance_check(c, m, s6).ok, [&] { return "Z_6 invariance: " + describe(c); });
  }
  std::mt19937_64 rng(seed ^ 0x8a5cd789635d2dffULL);
  const Ambient a8(Pir::chain(2, 3), 3);
  const SupportFn s8 = SupportFn::chain(a8);
  const auto codes = distinct_random_codes(a8, 1, 4, rng);
  for (int i = 0; i < 20; ++i) {
    const RingMatrix n = random_monomial(a8.ring(), 3, rng);
    t.check(is_isometry(n, s8), [&] { return "random D*P is not an isometry:\n" + n.to_string(); });
    const ChainDecomposition d = decompose_chain_isometry(n, s8);
    t.check(d.d * d.p == n && d.d.is_diagonal() && d.p.is_permutation(),
            [&] { return "D*P round trip failed:\n" + n.to_string(); });
    const Code& c = codes[static_cast<std::size_t>(i) % codes.size()];
    t.check(equivalence_invariance_check(c, n, s8).ok, [&] { return "Z_8 invariance: " + describe(c); });
  }
  return {t.ok(), t.summary("Z_6 example, 20 random D*P over Z_8^3, " + std::to_string(t.checked()) + " checks")};
}

std::pair<bool, std::string> support_validation(std::uint64_t) {
  Tally t;
  for (const Ambient& amb : {Ambient(Pir::chain(2, 2), 2), Ambient(Pir::chain(2, 3), 2), Ambient(Pir::chain(3, 2), 2)}) {
    const SupportFn s = SupportFn::chain(amb);
    t.check(validate_support(s).valid && validate_modular(s).valid,
            [&] { return "chain support on " + amb.ring().name() + " is not modular"; });
  }
  const Ambient z4(Pir::chain(2, 2), 1);
  const SupportReport lee = validate_table(z4, 1, lee_table_z4());
  t.check(!lee.valid && lee.axiom == 2 && lee.v == 1 && lee.r && lee.r->index == 2,
          [&] { return "Lee table: " + lee.message; });
  const Ambient f3(Pir::chain(3, 1), 2);
  const SupportFn tau = tau_support(f3);
  const SupportReport tau_mod = validate_modular(tau);
  t.check(validate_support(tau).valid && !tau_mod.valid, [] { return "tau misclassified"; });
  const Ambient z6(z6_ring(), 1);
  const SupportFn h = SupportFn::hamming(z6);
  const Code m1 = Code::span(z6, {z6.from_integers({2})});
  const Code m2 = Code::span(z6, {z6.from_integers({3})});
  const auto lhs = code_weight(h, m1) + code_weight(h, m2);
  const auto rhs = code_weight(h, m1.sum(m2)) + code_weight(h, m1.intersect(m2));
  t.check(lhs == 2 && rhs == 1, [&] { return "Z_6 Hamming: " + std::to_string(lhs) + " vs " + std::to_string(rhs); });
  return {t.ok(), t.summary("Lee rejected at axiom 2 (r=2, v=1); tau fails axiom " + std::to_string(tau_mod.axiom) +
                            "; Z_6 Hamming " + std::to_string(lhs) + " != " + std::to_string(rhs))};
}

std::pair<bool, std::string> dual_identities(std::uint64_t seed) {
  const auto lts = corpus_latroids(build_corpus(seed));
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  Tally t;
  std::size_t intervals = 0;
  for (const auto& [name, lt] : lts) {
    const Latroid d = dual_latroid(lt);
    t.check(dual_latroid(d) == lt, [&] { return name + ": dual is not an involution"; });
    t.check(validate_latroid(d).valid, [&] { return name + ": dual is not a latroid"; });
    t.check(dual_length_identity(lt), [&] { return name + ": dual length identity"; });
    const FiniteLattice& lat = lt.lat();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < lat.size(); ++a) {
      for (std::size_t b = a; b < lat.size(); ++b) {
        if (lat.leq(a, b)) pairs.emplace_back(a, b);
      }
    }
    // Every interval on small lattices, a seeded sample of 64 otherwise.
    if (pairs.size() > 256) {
      std::shuffle(pairs.begin(), pairs.end(), rng);
      pairs.resize(64);
    }
    for (const auto& [a, b] : pairs) {
      ++intervals;
      t.check(dual_restriction_identity(lt, a, b),
              [&] { return name + ": dual/restriction at " + std::to_string(a) + ", " + std::to_string(b); });
      t.check(validate_latroid(restrict_latroid(lt, a, b)).valid,
              [&] { return name + ": restriction is not a latroid"; });
    }
  }
  std::size_t sums = 0;
  for (std::size_t i = 0; i + 1 < lts.size(); ++i) {
    const Latroid& a = lts[i].lt;
    const Latroid& b = lts[i + 1].lt;
    if (a.u() != b.u() || a.size() * b.size() > 512) continue;
    ++sums;
    t.check(validate_latroid(direct_sum(a, b)).valid,
            [&] { return lts[i].name + " (+) " + lts[i + 1].name + " is not a latroid"; });
  }
  return {t.ok() && sums > 0, t.summary(std::to_string(lts.size()) + " latroids, " + std::to_string(intervals) +
                                        " intervals, " + std::to_string(sums) + " direct sums")};
}

std::pair<bool, std::string> internal_identities(std::uint64_t seed) {
  const Corpus k = build_corpus(seed);
  Tally t;
  std::size_t points = 0;
  for (const Code& c : all_ring_codes(k)) {
    const IdentityReport rep = inclusion_exclusion_check(c);
    points += rep.checked;
    t.check(rep.ok, [&] { return describe(c) + ": " + rep.message; });
  }
  for (int u = 0; u <= 3; ++u) {
    const IdentityReport rep = binomial_identity_check(u);
    t.check(rep.ok, [&] { return rep.message; });
  }
  return {t.ok(), t.summary(std::to_string(points) + " grid points; binomial identity for u <= 3")};
}

struct Criterion {
  const char* name;
  Body body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"Tutte-Whitney identity", tutte_identity},
      {"PIR product corollary", pir_corollary},
      {"latroid axioms", latroid_axioms},
      {"cryptomorphism round trips", cryptomorphisms},
      {"weight equalities", weight_equalities},
      {"strict monotonicity", strict_monotonicity},
      {"isometry fixtures", isometry_fixtures},
      {"support validation", support_validation},
      {"dual and restriction identities", dual_identities},
      {"internal identities", internal_identities},
  };
  return all;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > kNumCriteria) throw InputError("criterion id must be in 1.." + std::to_string(kNumCriteria));
  const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult out;
  out.id = id;
  out.name = c.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    std::tie(out.passed, out.detail) = c.body(seed);
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kNumCriteria; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace latroid
