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


#include "cli_core.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "latroid/acceptance.hpp"
#include "latroid/builders.hpp"
#include "latroid/enumerators.hpp"
#include "latroid/errors.hpp"
#include "latroid/fixtures.hpp"
#include "latroid/isometries.hpp"

namespace latroid::cli {
namespace {

using nlohmann::json;

// An input that parses but violates the support axioms.
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer for " + what + ", got '" + s + "'");
  }
  if (used != s.size()) throw InputError("expected an integer for " + what + ", got '" + s + "'");
  return v;
}

std::vector<std::int64_t> parse_ints(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  std::string tok;
  std::istringstream is(s);
  while (is >> tok) {
    std::replace(tok.begin(), tok.end(), ',', ' ');
    std::istringstream parts(tok);
    std::string p;
    while (parts >> p) out.push_back(parse_int(p, what));
  }
  return out;
}

std::vector<Block> parse_blocks(const std::string& s) {
  std::vector<Block> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    tok = trim(tok);
    const auto x = tok.find('x');
    if (x == std::string::npos) throw InputError("blocks are written m x n, e.g. 3x2, got '" + tok + "'");
    const auto m = parse_int(trim(tok.substr(0, x)), "block rows");
    const auto n = parse_int(trim(tok.substr(x + 1)), "block columns");
    if (m < 1 || n < 1 || m > 8 || n > 8) throw InputError("block sizes must be in 1..8");
    out.push_back(Block{static_cast<int>(m), static_cast<int>(n)});
  }
  if (out.empty()) throw InputError("blocks must not be empty");
  return out;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return latroid::to_string(r);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw InputError("rational must be an integer or a 'p/q' string");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s, "rational"));
  const auto den = parse_int(s.substr(slash + 1), "denominator");
  if (den == 0) throw InputError("zero denominator");
  return Rational(parse_int(s.substr(0, slash), "numerator"), den);
}

json label_json(const FiniteLattice& lat, std::size_t x) { return lat.label(x); }

json labels_json(const FiniteLattice& lat, const ElementSet& xs) {
  json out = json::array();
  for (auto x : xs) out.push_back(label_json(lat, x));
  return out;
}

json support_vec_json(const SupportVec& v) { return v; }

json support_report_json(const SupportReport& r, const Ambient& amb) {
  json j{{"valid", r.valid}, {"message", r.message}};
  if (!r.valid) {
    j["axiom"] = r.axiom;
    j["v"] = amb.to_string(r.v);
    j["w"] = amb.to_string(r.w);
    if (r.r) j["r"] = amb.ring().to_string(*r.r);
    if (r.coordinate >= 0) j["coordinate"] = r.coordinate;
  }
  return j;
}

json latroid_report_json(const LatroidReport& r, const FiniteLattice& lat) {
  json j{{"valid", r.valid}, {"message", r.message}};
  if (!r.valid) {
    j["axiom"] = r.axiom;
    j["a"] = label_json(lat, r.a);
    j["b"] = label_json(lat, r.b);
  }
  return j;
}

json axiom_report_json(const AxiomReport& r) {
  return json{{"ok", r.ok}, {"axiom", r.axiom}, {"message", r.message}, {"witness", r.witness}};
}

json weight_report_json(const WeightReport& r) {
  json rows = json::array();
  for (const auto& w : r.rows) {
    rows.push_back({{"r", w.r},
                    {"code_side", rational_json(w.code_side)},
                    {"latroid_side", rational_json(w.latroid_side)},
                    {"equal", w.equal}});
  }
  return json{{"all_equal", r.all_equal}, {"rows", rows}};
}

json poly_entry(const ExpPoly& p) { return json{{"polynomial", p.to_json()}, {"text", p.to_string()}}; }

json matrix_json(const RingMatrix& m) { return m.to_integers(); }

// ---- problem construction ----

Ambient ring_ambient(const ProblemConfig& cfg) {
  if (cfg.kind != "ring") throw InputError("this command needs a ring code (kind = ring)");
  return Ambient(parse_ring(cfg.ring), cfg.n);
}

Code ring_code(const ProblemConfig& cfg) {
  const Ambient amb = ring_ambient(cfg);
  std::vector<Vector> gens;
  for (const auto& g : cfg.generators) gens.push_back(amb.from_integers(g));
  return Code::span(amb, gens);
}

MatrixCode matrix_code(const ProblemConfig& cfg) {
  if (cfg.kind != "matrix") throw InputError("this command needs a matrix code (kind = matrix)");
  return MatrixCode::from_generators(cfg.q, cfg.blocks, cfg.generators);
}

std::vector<SupportVec> support_table(const ProblemConfig& cfg, const Pir& ring) {
  if (cfg.support_rows.empty()) throw InputError("support = table needs support_row lines");
  const std::size_t u = cfg.support_rows.front().second.size();
  std::vector<SupportVec> table(ring.size());
  std::vector<bool> seen(ring.size());
  for (const auto& [value, row] : cfg.support_rows) {
    if (row.size() != u) throw InputError("support rows differ in width");
    const RingElement r = ring.from_integer(value);
    if (seen[r.index]) throw InputError("support row for " + std::to_string(value) + " given twice");
    seen[r.index] = true;
    table[r.index] = row;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InputError("support table must list every ring element");
  }
  return table;
}

SupportFn build_support(const ProblemConfig& cfg, const Ambient& amb) {
  const std::string& s = cfg.support;
  if (s == "chain") return SupportFn::chain(amb);
  if (s == "hamming") return SupportFn::hamming(amb);
  if (s == "tau") return tau_support(amb);
  if (s == "z6") {
    if (!(amb.ring() == z6_ring())) throw InputError("support = z6 needs ring = 6");
    return z6_indicator_support(amb.n());
  }
  if (s == "table") {
    const auto table = support_table(cfg, amb.ring());
    const int u = static_cast<int>(table.front().size());
    const SupportReport rep = validate_table(Ambient(amb.ring(), 1), u, table);
    if (!rep.valid) throw ValidationFailure("support table is not a support: " + rep.message);
    return SupportFn::standard(amb, table);
  }
  throw InputError("unknown support '" + s + "' (chain, hamming, tau, z6, table)");
}

struct BuiltLatroid {
  std::string lattice;
  Latroid lt;
};

BuiltLatroid build_latroid(const ProblemConfig& cfg) {
  if (cfg.kind == "matrix") {
    const MatrixCode c = matrix_code(cfg);
    std::string name = cfg.lattice;
    if (name.empty()) name = c.blocks().size() == 1 ? "rank" : "sum-rank-column";
    if (name == "rank") {
      if (c.blocks().size() != 1) throw InputError("lattice = rank needs one block");
      return {name, rank_metric_latroid(c, subspace_lattice(c.q(), c.blocks()[0].n))};
    }
    if (name == "sum-rank-column") return {name, sum_rank_latroid(c, SumRankConvention::Column)};
    if (name == "sum-rank-row") return {name, sum_rank_latroid(c, SumRankConvention::Row)};
    throw InputError("unknown matrix lattice '" + name + "' (rank, sum-rank-column, sum-rank-row)");
  }
  const Code c = ring_code(cfg);
  const std::string name = cfg.lattice.empty() ? "chain" : cfg.lattice;
  if (name == "chain") return {name, chain_support_latroid(c)};
  if (name == "chain-norm") return {name, collapse_to_norm(chain_support_latroid(c))};
  if (name == "submodules") {
    return {name, latroid_from_code(c, submodule_lattice(Code::whole(c.ambient())), lambda_length)};
  }
  if (name == "rectangular") {
    return {name, rect_supp_latroid(c, build_support(cfg, c.ambient()), rectangular_lattice(c.ambient()))};
  }
  if (name == "boolean") return {name, block_matroid(c)};
  throw InputError("unknown lattice '" + name + "' (chain, chain-norm, submodules, rectangular, boolean)");
}

// ---- commands ----

Outcome cmd_validate_support(const ProblemConfig& cfg) {
  const Ambient amb = ring_ambient(cfg);
  json r{{"support", cfg.support}};
  if (cfg.support == "table") {
    const auto table = support_table(cfg, amb.ring());
    const Ambient one(amb.ring(), 1);
    const int u = static_cast<int>(table.front().size());
    const SupportReport rep = validate_table(one, u, table);
    r["coordinate_table"] = support_report_json(rep, one);
    if (!rep.valid) {
      r["valid"] = false;
      return {r, kValidationFailure};
    }
  }
  const SupportFn s = build_support(cfg, amb);
  const SupportReport sup = validate_support(s);
  r["valid"] = sup.valid;
  r["axioms"] = support_report_json(sup, amb);
  r["u"] = s.u();
  r["top"] = support_vec_json(s.top());
  if (!sup.valid) return {r, kValidationFailure};
  const SupportReport mod = validate_modular(s);
  r["modular"] = support_report_json(mod, amb);
  return {r, kOk};
}

Outcome cmd_latroid(const ProblemConfig& cfg) {
  const BuiltLatroid b = build_latroid(cfg);
  const LatroidReport rep = validate_latroid(b.lt);
  json r{{"lattice", b.lattice}, {"latroid", latroid_json(b.lt)}, {"validation", latroid_report_json(rep, b.lt.lat())}};
  return {r, rep.valid ? kOk : kValidationFailure};
}

json flags_json(const LatticeFlags& f) {
  return json{{"graded", f.graded},
              {"modular", f.modular},
              {"distributive", f.distributive},
              {"complemented", f.complemented},
              {"relatively_complemented", f.relatively_complemented}};
}

Outcome cmd_axioms(const ProblemConfig& cfg) {
  const BuiltLatroid b = build_latroid(cfg);
  const FiniteLattice& lat = b.lt.lat();
  const LatroidReport rep = validate_latroid(b.lt);
  json r{{"lattice", b.lattice},
         {"size", lat.size()},
         {"lattice_flags", flags_json(lat.flags())},
         {"validation", latroid_report_json(rep, lat)}};
  bool ok = rep.valid;
  const bool crypto = rep.valid && crypto_applicable(b.lt);
  r["set_axioms_applicable"] = crypto;
  if (crypto) {
    const AxiomReport ai = axioms_I(lat, independents(b.lt));
    const AxiomReport ab = axioms_B(lat, bases(b.lt));
    const AxiomReport ac = axioms_C(lat, circuits(b.lt));
    r["independents"] = axiom_report_json(ai);
    r["bases"] = axiom_report_json(ab);
    r["circuits"] = axiom_report_json(ac);
    ok = ok && ai.ok && ab.ok && ac.ok;
  }
  return {r, ok ? kOk : kValidationFailure};
}

Outcome cmd_crypto(const ProblemConfig& cfg) {
  const BuiltLatroid b = build_latroid(cfg);
  if (!crypto_applicable(b.lt)) {
    throw HypothesisError("round trips need length = height on a complemented modular lattice with u = 1");
  }
  const FiniteLattice& lat = b.lt.lat();
  const ElementSet in = independents(b.lt), bs = bases(b.lt), cs = circuits(b.lt);
  const bool ri = rank_from_independents(lat, in) == b.lt.rho;
  const bool rb = rank_from_bases(lat, bs) == b.lt.rho;
  const bool rc = rank_from_circuits(lat, cs) == b.lt.rho;
  json r{{"lattice", b.lattice},
         {"independents", labels_json(lat, in)},
         {"bases", labels_json(lat, bs)},
         {"circuits", labels_json(lat, cs)},
         {"rank_from_independents", ri},
         {"rank_from_bases", rb},
         {"rank_from_circuits", rc}};
  return {r, ri && rb && rc ? kOk : kValidationFailure};
}

Outcome cmd_weights(const ProblemConfig& cfg) {
  if (cfg.kind == "matrix") {
    const MatrixCode c = matrix_code(cfg);
    const WeightReport w = c.blocks().size() == 1 ? rank_weights_equal(c) : sum_rank_weights_equal(c);
    json r{{"metric", c.blocks().size() == 1 ? "rank" : "sum-rank"}, {"check", weight_report_json(w)}};
    json dr = json::array();
    for (const auto& row : w.rows) dr.push_back(rational_json(row.code_side));
    r["m_dr"] = dr;
    return {r, w.all_equal ? kOk : kValidationFailure};
  }
  const Code c = ring_code(cfg);
  const SupportFn s = build_support(cfg, c.ambient());
  json dbar = json::array(), dr = json::array();
  const int lambda = length_lambda(c), m = big_m(c);
  for (int r = 1; r <= lambda; ++r) dbar.push_back(code_gen_weights_dbar(c, s, r));
  for (int r = 1; r <= m; ++r) dr.push_back(code_gen_weights_dr(c, s, r));
  json r{{"support", cfg.support}, {"lambda", lambda}, {"M", m}, {"dbar", dbar}, {"dr", dr}};
  int code = kOk;
  if (cfg.support == "chain") {
    const WeightReport w = latroid_weights_equal_code_weights(c);
    r["latroid_check"] = weight_report_json(w);
    if (!w.all_equal) code = kValidationFailure;
  }
  return {r, code};
}

Outcome cmd_enumerator(const ProblemConfig& cfg) {
  const Code c = ring_code(cfg);
  const SupportFn s = build_support(cfg, c.ambient());
  json r{{"support", cfg.support},
         {"refined", poly_entry(refined_enumerator(c, s))},
         {"homogeneous", poly_entry(homogeneous_enumerator(c, s))},
         {"weight_distribution", weight_distribution(c, s)}};
  if (s.is_standard()) r["generalized_distributions"] = generalized_distributions(c, s);
  return {r, kOk};
}

Outcome cmd_tutte(const ProblemConfig& cfg) {
  const Code c = ring_code(cfg);
  const Latroid lt = chain_support_latroid(c);
  const ExpPoly w = enumerator_from_tutte(c);
  const bool match = w == refined_enumerator(c, SupportFn::chain(c.ambient()));
  json r{{"R", poly_entry(tutte_whitney_R(lt))},
         {"Rprime", poly_entry(tutte_whitney_Rprime(lt))},
         {"W", poly_entry(w)},
         {"matches_enumerator", match}};
  bool ok = match;
  if (c.ring().num_factors() > 1) {
    const CorollaryReport rep = pir_tutte_corollary(c);
    r["product_formula"] = {{"rprime_factors", rep.rprime_factors}, {"enumerator_matches", rep.enumerator_matches}};
    ok = ok && rep.ok();
  }
  return {r, ok ? kOk : kValidationFailure};
}

Outcome cmd_circuits(const ProblemConfig& cfg) {
  const BuiltLatroid b = build_latroid(cfg);
  const FiniteLattice& lat = b.lt.lat();
  json r{{"lattice", b.lattice}, {"circuits", labels_json(lat, circuits(b.lt))}};
  if (b.lt.u() == 1) {
    r["flats"] = labels_json(lat, flats(b.lt));
    r["hyperplanes"] = labels_json(lat, hyperplanes(b.lt));
  }
  return {r, kOk};
}

json decomposition_json(const ChainDecomposition& d) {
  return json{{"D", matrix_json(d.d)}, {"P", matrix_json(d.p)}, {"perm", d.perm}};
}

Outcome cmd_isometry(const ProblemConfig& cfg) {
  const Ambient amb = ring_ambient(cfg);
  if (cfg.matrix.empty()) throw InputError("isometry needs matrix lines");
  const RingMatrix m = RingMatrix::from_integers(amb.ring(), cfg.matrix);
  const SupportFn s = build_support(cfg, amb);
  const bool iso = is_isometry(m, s);
  json r{{"matrix", matrix_json(m)}, {"is_isometry", iso}};
  if (!iso) return {r, kValidationFailure};
  if (amb.ring().is_chain_ring()) {
    r["decomposition"] = decomposition_json(decompose_chain_isometry(m, s));
  } else {
    const SplitSupport split = split_support(s);
    json projs = json::array();
    for (const auto& fm : pir_isometry_projections(m, s)) {
      projs.push_back({{"factor", fm.factor},
                       {"ring", amb.ring().factor_ring(fm.factor).name()},
                       {"matrix", matrix_json(fm.matrix)},
                       {"decomposition", decomposition_json(decompose_chain_isometry(fm.matrix, split.factors[fm.factor]))}});
    }
    r["projections"] = projs;
  }
  if (!cfg.generators.empty()) {
    const EquivalenceReport e = equivalence_invariance_check(ring_code(cfg), m, s);
    r["equivalence"] = {{"ok", e.ok}, {"dr", e.dr1},         {"dr_image", e.dr2}, {"dbar", e.dbar1},
                        {"dbar_image", e.dbar2}, {"distribution", e.dist1}, {"distribution_image", e.dist2}};
    if (!e.ok) return {r, kValidationFailure};
  }
  return {r, kOk};
}

Outcome cmd_selftest(std::uint64_t seed) {
  json rows = json::array();
  int passed = 0;
  for (const CriterionResult& c : run_acceptance(seed)) {
    rows.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    passed += c.passed;
  }
  json r{{"seed", seed}, {"criteria", rows}, {"passed", passed}, {"total", kNumCriteria}};
  return {r, passed == kNumCriteria ? kOk : kValidationFailure};
}

json config_json(const ProblemConfig& cfg) {
  json j{{"kind", cfg.kind}, {"generators", cfg.generators}};
  if (cfg.kind == "ring") {
    j["support"] = cfg.support;
    j["ring"] = cfg.ring;
    j["n"] = cfg.n;
  } else {
    j["q"] = cfg.q;
    json blocks = json::array();
    for (const auto& b : cfg.blocks) blocks.push_back({b.m, b.n});
    j["blocks"] = blocks;
  }
  if (!cfg.lattice.empty()) j["lattice"] = cfg.lattice;
  if (!cfg.matrix.empty()) j["matrix"] = cfg.matrix;
  return j;
}

void flatten(const json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

Pir parse_ring(const std::string& spec) {
  std::string s = trim(spec);
  if (!s.empty() && (s[0] == 'Z' || s[0] == 'z')) s = s.substr(1);
  if (!s.empty() && s[0] == '_') s = s.substr(1);
  const std::int64_t m = parse_int(s, "ring modulus");
  if (m < 2 || m > 65536) throw InputError("ring modulus must be in 2..65536");
  std::vector<ChainRingSpec> factors;
  std::int64_t rest = m;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k) factors.push_back({p, k});
  }
  if (rest > 1) factors.push_back({rest, 1});
  return Pir(factors);
}

ProblemConfig parse_config(const std::string& text) {
  ProblemConfig cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool have_n = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string where = "line " + std::to_string(lineno) + " (" + key + ")";
    if (key == "kind") {
      if (value != "ring" && value != "matrix") throw InputError(where + ": kind is ring or matrix");
      cfg.kind = value;
    } else if (key == "ring") {
      cfg.ring = value;
    } else if (key == "n") {
      const auto n = parse_int(value, where);
      if (n < 1 || n > 16) throw InputError(where + ": n must be in 1..16");
      cfg.n = static_cast<int>(n);
      have_n = true;
    } else if (key == "q") {
      const auto q = parse_int(value, where);
      if (!is_prime(q) || q > 251) throw InputError(where + ": q must be a prime below 256");
      cfg.q = static_cast<int>(q);
    } else if (key == "blocks") {
      cfg.blocks = parse_blocks(value);
    } else if (key == "gen") {
      cfg.generators.push_back(parse_ints(value, where));
    } else if (key == "support") {
      cfg.support = value;
    } else if (key == "support_row") {
      const auto colon = value.find(':');
      if (colon == std::string::npos) throw InputError(where + ": expected <ring value> : <support vector>");
      const auto r = parse_int(trim(value.substr(0, colon)), where);
      std::vector<std::int32_t> row;
      for (auto x : parse_ints(value.substr(colon + 1), where)) row.push_back(static_cast<std::int32_t>(x));
      if (row.empty()) throw InputError(where + ": empty support vector");
      cfg.support_rows.emplace_back(r, row);
    } else if (key == "lattice") {
      cfg.lattice = value;
    } else if (key == "matrix") {
      cfg.matrix.push_back(parse_ints(value, where));
    } else {
      throw InputError(where + ": unknown key");
    }
  }
  if (cfg.kind == "ring") {
    if (cfg.ring.empty()) throw InputError("missing ring");
    if (!have_n) throw InputError("missing n");
    parse_ring(cfg.ring);
    for (const auto& g : cfg.generators) {
      if (static_cast<int>(g.size()) != cfg.n) throw InputError("generator length differs from n");
    }
    for (const auto& row : cfg.matrix) {
      if (static_cast<int>(row.size()) != cfg.n) throw InputError("matrix row length differs from n");
    }
    if (!cfg.matrix.empty() && static_cast<int>(cfg.matrix.size()) != cfg.n) {
      throw InputError("matrix needs n rows");
    }
  } else {
    if (cfg.q == 0) throw InputError("missing q");
    if (cfg.blocks.empty()) throw InputError("missing blocks");
    int len = 0;
    for (const auto& b : cfg.blocks) len += b.m * b.n;
    for (const auto& g : cfg.generators) {
      if (static_cast<int>(g.size()) != len) throw InputError("generator length differs from the block sizes");
    }
    if (!cfg.matrix.empty()) throw InputError("matrix lines apply to ring codes only");
  }
  return cfg;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str());
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate-support", "latroid", "axioms",  "crypto-roundtrip",
                                              "weights",          "enumerator", "tutte", "circuits",
                                              "isometry",         "selftest"};
  return names;
}

Outcome run_command(const std::string& command, const ProblemConfig& cfg, std::uint64_t seed) {
  Outcome o;
  if (command == "validate-support") o = cmd_validate_support(cfg);
  else if (command == "latroid") o = cmd_latroid(cfg);
  else if (command == "axioms") o = cmd_axioms(cfg);
  else if (command == "crypto-roundtrip") o = cmd_crypto(cfg);
  else if (command == "weights") o = cmd_weights(cfg);
  else if (command == "enumerator") o = cmd_enumerator(cfg);
  else if (command == "tutte") o = cmd_tutte(cfg);
  else if (command == "circuits") o = cmd_circuits(cfg);
  else if (command == "isometry") o = cmd_isometry(cfg);
  else if (command == "selftest") o = cmd_selftest(seed);
  else throw InputError("unknown command '" + command + "'");
  json report{{"schema_version", kSchemaVersion}, {"command", command}, {"exit_code", o.exit_code}, {"result", o.report}};
  if (command != "selftest") report["config"] = config_json(cfg);
  o.report = std::move(report);
  return o;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const CapExceeded*>(&e)) return kCapExceeded;
  if (dynamic_cast<const ValidationFailure*>(&e)) return kValidationFailure;
  return kInputError;
}

std::string render_text(const json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

json scalar_json(const Scalar& s) {
  json j = json::array();
  for (const auto& c : s.coords()) j.push_back(rational_json(c));
  return j;
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_array()) throw InputError("scalar must be an array");
  std::vector<Rational> coords;
  for (const auto& c : j) coords.push_back(rational_from_json(c));
  return Scalar(coords);
}

json latroid_json(const Latroid& lt) {
  const FiniteLattice& lat = lt.lat();
  json elems = json::array();
  for (std::size_t i = 0; i < lt.size(); ++i) {
    elems.push_back({{"label", lat.label(i)},
                     {"covers", lat.upper_covers(i)},
                     {"rho", scalar_json(lt.rho[i])},
                     {"len", scalar_json(lt.len[i])}});
  }
  return json{{"u", lt.u()}, {"labels_are_points", lat.has_points()}, {"elements", elems}};
}

Latroid latroid_from_json(const json& j) {
  try {
    const json& elems = j.at("elements");
    const std::size_t n = elems.size();
    if (n == 0) throw InputError("latroid has no elements");
    std::vector<Label> labels;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(elems[i].at("label").get<Label>());
      reach[i][i] = true;
    }
    // Covers point to larger indices, so a reverse sweep closes the order.
    for (std::size_t i = n; i-- > 0;) {
      for (auto c : elems[i].at("covers").get<std::vector<std::size_t>>()) {
        if (c <= i || c >= n) throw InputError("cover indices must increase");
        for (std::size_t k = 0; k < n; ++k) {
          if (reach[c][k]) reach[i][k] = true;
        }
      }
    }
    auto lat = std::make_shared<const FiniteLattice>(FiniteLattice::from_order(
        labels, [&](std::size_t a, std::size_t b) { return static_cast<bool>(reach[a][b]); },
        j.at("labels_are_points").get<bool>()));
    std::vector<Scalar> rho(n), len(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t at = lat->index_of(labels[i]);
      rho[at] = scalar_from_json(elems[i].at("rho"));
      len[at] = scalar_from_json(elems[i].at("len"));
    }
    return make_latroid(std::move(lat), std::move(rho), std::move(len));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed latroid report: ") + e.what());
  }
}

}  // namespace latroid::cli
