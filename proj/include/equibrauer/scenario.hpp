// JSON scenario files: ring, group and algebra/action/grading/cocycle/pair/corpus blocks.
#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "report.hpp"

namespace equibrauer {

inline constexpr int schema_version = 1;

/// Input error tied to a block path such as "algebra" or "corpus.algebras[2].action".
class ScenarioError : public InputError {
 public:
  ScenarioError(std::string block, const std::string& what, json witness = nullptr)
      : InputError("scenario block \"" + block + "\": " + what), block_(std::move(block)), witness_(std::move(witness)) {}
  const std::string& block() const { return block_; }
  const json& witness() const { return witness_; }

 private:
  std::string block_;
  json witness_;
};

struct Caps {
  std::size_t max_dim = 64;
  std::size_t max_group = 24;
};

namespace detail {

/// Runs f, re-raising any library or JSON error as a ScenarioError for `block`.
template <class F>
auto in_block(const std::string& block, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ScenarioError&) {
    throw;
  } catch (const AlgebraError& e) {
    throw ScenarioError(block, e.what(), e.witness());
  } catch (const GroupError& e) {
    throw ScenarioError(block, e.what(), e.witness());
  } catch (const Error& e) {
    throw ScenarioError(block, e.what());
  } catch (const json::exception& e) {
    throw ScenarioError(block, std::string("malformed JSON value: ") + e.what());
  }
}

inline std::size_t element_index(const std::string& key, const FinGroup& g) {
  std::size_t pos = 0;
  std::size_t x = 0;
  try {
    x = std::stoul(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || key.empty()) throw InputError("group element key \"" + key + "\" is not an index");
  if (x >= g.order()) throw InputError("group element " + key + " out of range for order " + std::to_string(g.order()));
  return x;
}

}  // namespace detail

inline FinGroup parse_group(const json& j, const Caps& caps) {
  FinGroup g = [&] {
    if (j.is_string()) return group_by_name(j.get<std::string>());
    if (!j.is_object() || !j.contains("table")) throw InputError("expected a group name or {\"table\": [[...]]}");
    return from_table(j.at("table").get<std::vector<std::vector<std::size_t>>>(), j.value("name", std::string()));
  }();
  if (g.order() > caps.max_group)
    throw InputError("group order " + std::to_string(g.order()) + " exceeds --max-group " + std::to_string(caps.max_group));
  return g;
}

template <class R>
RVec<R> parse_vec(const R& k, const json& j) {
  if (!j.is_array()) throw InputError("expected an array of scalars, got " + j.dump());
  RVec<R> v;
  for (const auto& x : j) v.push_back(k.from_json(x));
  return v;
}

template <class R>
RMat<R> parse_mat(const R& k, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InputError("expected a " + std::to_string(rows) + "-row matrix");
  for (const auto& r : j)
    if (!r.is_array() || r.size() != cols) throw InputError("expected rows of length " + std::to_string(cols));
  return mat_from_json(k, j);
}

template <class R>
Cocycle<R> parse_cocycle(const R& k, const FinGroup& g, const json& j) {
  const std::size_t m = g.order();
  RMat<R> grid = parse_mat(k, j, m, m);
  return Cocycle<R>(g, k, grid.data());
}

template <class R>
DualPair<R> parse_pair(const R& k, const json& j) {
  const std::size_t m = j.at("M").get<std::size_t>(), mp = j.at("Mprime").get<std::size_t>();
  return make_pair(k, m, mp, parse_mat(k, j.at("mu"), mp, m));
}

/// Algebra blocks: {"dim","sc"} structure constants, or one of "matrix", "quaternion",
/// "pair", "group_algebra", "crossed_product", "base". The last three need the group.
template <class R>
struct AlgebraBlock {
  FinAlgebra<R> algebra;
  std::optional<GradedAlgebra<R>> graded;
  std::optional<DualPair<R>> pair;
  std::string kind;
};

template <class R>
AlgebraBlock<R> parse_algebra(const R& k, const json& j, const std::optional<FinGroup>& g, const Caps& caps) {
  if (!j.is_object()) throw InputError("an algebra block must be an object");
  if (j.contains("ring") && parse_ring(j.at("ring").get<std::string>()) != AnyRing(k))
    throw InputError("ring " + j.at("ring").dump() + " differs from the scenario ring " + k.name());
  auto need_group = [&]() -> const FinGroup& {
    if (!g) throw InputError("this algebra kind needs a \"group\" block");
    return *g;
  };
  auto cap = [&](std::size_t n) {
    if (n > caps.max_dim)
      throw InputError("dimension " + std::to_string(n) + " exceeds --max-dim " + std::to_string(caps.max_dim));
  };
  std::optional<FinAlgebra<R>> alg;
  std::optional<GradedAlgebra<R>> graded;
  std::optional<DualPair<R>> pair;
  std::string kind;
  if (j.contains("sc")) {
    kind = "structure";
    const std::size_t n = j.at("dim").get<std::size_t>();
    cap(n);
    const json& sc = j.at("sc");
    if (!sc.is_array() || sc.size() != n) throw InputError("\"sc\" must have dim rows");
    std::vector<std::vector<RVec<R>>> c(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (!sc[a].is_array() || sc[a].size() != n) throw InputError("\"sc\" row " + std::to_string(a) + " must have dim entries");
      for (std::size_t b = 0; b < n; ++b) c[a].push_back(parse_vec(k, sc[a][b]));
    }
    std::optional<RVec<R>> id;
    if (j.contains("identity")) id = parse_vec(k, j.at("identity"));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    alg = make_algebra(k, n, c, id, labels);
  } else if (j.contains("matrix")) {
    kind = "matrix";
    const std::size_t n = j.at("matrix").get<std::size_t>();
    cap(n * n);
    alg = matrix_algebra(k, n);
  } else if (j.contains("quaternion")) {
    kind = "quaternion";
    const json& q = j.at("quaternion");
    if (!q.is_array() || q.size() != 2) throw InputError("\"quaternion\" must be [a, b]");
    alg = quaternion_algebra(k, k.from_json(q[0]), k.from_json(q[1]));
  } else if (j.contains("pair")) {
    kind = "elementary";
    pair = parse_pair(k, j.at("pair"));
    cap(pair->dim());
    alg = elementary_from_pair(*pair).algebra;
  } else if (j.contains("group_algebra")) {
    kind = "group-algebra";
    cap(need_group().order());
    graded = group_algebra(k, *g);
    alg = graded->algebra();
  } else if (j.contains("crossed_product")) {
    kind = "crossed-product";
    cap(need_group().order());
    graded = crossed_product(k, *g, parse_cocycle(k, *g, j.at("crossed_product"))).graded;
    alg = graded->algebra();
  } else if (j.contains("base")) {
    kind = "base";
    alg = base_algebra(k);
  } else {
    throw InputError("unrecognised algebra block (expected sc, matrix, quaternion, pair, group_algebra, "
                     "crossed_product or base)");
  }
  if (j.contains("grading")) {
    const auto& deg = j.at("grading").at("degrees").get<std::vector<std::size_t>>();
    graded = GradedAlgebra<R>(*alg, need_group(), deg);
  }
  return AlgebraBlock<R>{*alg, graded, pair, kind};
}

/// Action blocks: {"trivial": true}, {"inner": {"g": unit}} or {"g": matrix, ...} keyed by
/// element index. The identity may be omitted; every other element is required.
template <class R>
GModuleAlgebra<R> parse_action(const FinAlgebra<R>& a, const FinGroup& g, const json& j, std::string name) {
  const R& k = a.ring();
  const std::size_t n = a.dim(), m = g.order();
  if (!j.is_object()) throw InputError("an action block must be an object");
  if (j.value("trivial", false)) return trivial_g_module(a, g, std::move(name));
  if (j.contains("inner")) {
    if (!a.has_identity()) throw InputError("inner actions need a unital algebra");
    std::vector<std::optional<RVec<R>>> units(m);
    units[g.identity()] = *a.identity();
    for (const auto& [key, v] : j.at("inner").items()) {
      RVec<R> u = parse_vec(k, v);
      if (u.size() != n) throw InputError("unit for element " + key + " must have " + std::to_string(n) + " coordinates");
      units[detail::element_index(key, g)] = u;
    }
    std::vector<RVec<R>> us;
    for (std::size_t x = 0; x < m; ++x) {
      if (!units[x]) throw InputError("no unit given for group element " + std::to_string(x));
      us.push_back(*units[x]);
    }
    return inner_g_module(a, g, us, std::move(name));
  }
  std::vector<std::optional<RMat<R>>> mats(m);
  mats[g.identity()] = identity_mat(k, n);
  for (const auto& [key, v] : j.items()) mats[detail::element_index(key, g)] = parse_mat(k, v, n, n);
  std::vector<RMat<R>> acts;
  for (std::size_t x = 0; x < m; ++x) {
    if (!mats[x]) throw InputError("no matrix given for group element " + std::to_string(x));
    acts.push_back(*mats[x]);
  }
  return GModuleAlgebra<R>(a, g, std::move(acts), std::move(name));
}

template <class R>
struct Scenario {
  R ring;
  json raw;
  Caps caps;
  std::optional<FinGroup> group;
  std::optional<AlgebraBlock<R>> algebra;
  std::optional<GModuleAlgebra<R>> module;
  std::vector<Cocycle<R>> cocycles;
  std::optional<SequenceCorpus<R>> corpus;

  const FinGroup& need_group() const {
    if (!group) throw ScenarioError("group", "this command needs a \"group\" block");
    return *group;
  }
  const AlgebraBlock<R>& need_algebra() const {
    if (!algebra) throw ScenarioError("algebra", "this command needs an \"algebra\" block");
    return *algebra;
  }
  /// The algebra with its action; a missing action block means the trivial action.
  GModuleAlgebra<R> need_module() const {
    if (module) return *module;
    return trivial_g_module(need_algebra().algebra, need_group(), "A");
  }
  /// A Galois object: a graded algebra block, else the first cocycle, else kG.
  GaloisObject<R> need_galois() const {
    if (algebra && algebra->graded) return detail::in_block("algebra", [&] { return require_galois(*algebra->graded); });
    const FinGroup& g = need_group();
    if (!cocycles.empty()) return crossed_product(ring, g, cocycles.front());
    return require_galois(group_algebra(ring, g));
  }
  /// Hashes of the top-level blocks, for the report's "inputs" field.
  json input_hashes() const {
    json h = json::object();
    for (const auto& [key, v] : raw.items()) h[key] = content_hash(v);
    return h;
  }
};

template <class R>
GaloisObject<R> parse_galois_entry(const R& k, const FinGroup& g, const json& j, const Caps& caps) {
  if (j.contains("cocycle")) return crossed_product(k, g, parse_cocycle(k, g, j.at("cocycle")));
  auto b = parse_algebra(k, j.at("algebra"), g, caps);
  if (!b.graded) throw InputError("Galois entries need a grading or a cocycle");
  return require_galois(*b.graded);
}

/// Manifest: {"name", "algebras": [{"name", "algebra", "action"}], "galois": [{"name", "cocycle"} |
/// {"name", "algebra"}], "max_tensor_dim", "max_morita_dim"}.
template <class R>
SequenceCorpus<R> parse_corpus_manifest(const R& k, const FinGroup& g, const json& j, const Caps& caps) {
  SequenceCorpus<R> c{j.value("name", std::string("manifest")), k, g, {}, {}};
  c.max_tensor_dim = j.value("max_tensor_dim", c.max_tensor_dim);
  c.max_morita_dim = j.value("max_morita_dim", c.max_morita_dim);
  const json& algs = j.at("algebras");
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const std::string at = "corpus.algebras[" + std::to_string(i) + "]";
    const json& e = algs[i];
    const std::string name = e.value("name", "A" + std::to_string(i));
    auto b = detail::in_block(at + ".algebra", [&] { return parse_algebra(k, e.at("algebra"), g, caps); });
    auto mod = detail::in_block(at + ".action", [&] {
      return parse_action(b.algebra, g, e.value("action", json{{"trivial", true}}), name);
    });
    detail::in_block(at, [&] {
      if (!is_taylor_azumaya(mod.algebra()).azumaya()) throw InputError(name + " is not Taylor-Azumaya");
    });
    c.algebras.push_back(std::move(mod));
  }
  const json gal = j.value("galois", json::array());
  for (std::size_t i = 0; i < gal.size(); ++i) {
    const std::string at = "corpus.galois[" + std::to_string(i) + "]";
    c.galois.push_back({gal[i].value("name", "B" + std::to_string(i)),
                        detail::in_block(at, [&] { return parse_galois_entry(k, g, gal[i], caps); })});
  }
  return c;
}

inline std::optional<SequenceCorpus<ModRing>> bundled_corpus(const std::string& name) {
  if (name == "C2-GF5") return corpus_c2_gf5();
  if (name == "C3-GF7") return corpus_c3_gf7();
  return std::nullopt;
}

template <class R>
Scenario<R> parse_scenario_as(const R& k, const json& j, const Caps& caps) {
  Scenario<R> s{k, j, caps, {}, {}, {}, {}, {}};
  if (j.contains("group")) s.group = detail::in_block("group", [&] { return parse_group(j.at("group"), caps); });
  json alg;
  if (j.contains("algebra")) alg = j.at("algebra");
  if (j.contains("quaternion")) alg = json{{"quaternion", j.at("quaternion")}};
  if (j.contains("pair")) alg = json{{"pair", j.at("pair")}};
  if (!alg.is_null()) {
    if (j.contains("grading")) alg["grading"] = j.at("grading");
    s.algebra = detail::in_block("algebra", [&] { return parse_algebra(k, alg, s.group, caps); });
  }
  if (j.contains("action")) {
    if (!s.algebra) throw ScenarioError("action", "an action needs an \"algebra\" block");
    s.module = detail::in_block("action", [&] {
      return parse_action(s.algebra->algebra, s.need_group(), j.at("action"), j.value("name", std::string("A")));
    });
  }
  for (const char* key : {"cocycle", "cocycles"}) {
    if (!j.contains(key)) continue;
    detail::in_block(key, [&] {
      const FinGroup& g = s.need_group();
      if (std::string(key) == "cocycle")
        s.cocycles.push_back(parse_cocycle(k, g, j.at(key)));
      else
        for (const auto& c : j.at(key)) s.cocycles.push_back(parse_cocycle(k, g, c));
    });
  }
  if (j.contains("corpus"))
    s.corpus = detail::in_block("corpus", [&] {
      if (j.at("corpus").is_string()) throw InputError("bundled corpora are selected by name only at top level");
      return parse_corpus_manifest(k, s.need_group(), j.at("corpus"), caps);
    });
  return s;
}

/// Checks the schema field and the ring, then parses the blocks over that ring.
/// A bundled corpus ({"corpus": "C2-GF5"}) supplies its own ring and group.
template <class F>
auto with_scenario(const json& j, const Caps& caps, F&& f) {
  if (!j.is_object()) throw ScenarioError("(root)", "a scenario must be a JSON object");
  if (!j.contains("schema")) throw ScenarioError("schema", "missing \"schema\" field");
  if (!j.at("schema").is_number_integer() || j.at("schema").get<int>() != schema_version)
    throw ScenarioError("schema", "unsupported schema " + j.at("schema").dump() + " (expected " +
                                      std::to_string(schema_version) + ")");
  if (j.contains("corpus") && j.at("corpus").is_string()) {
    auto c = detail::in_block("corpus", [&] {
      auto b = bundled_corpus(j.at("corpus").get<std::string>());
      if (!b) throw InputError("unknown bundled corpus " + j.at("corpus").dump() + " (expected C2-GF5 or C3-GF7)");
      return *b;
    });
    Scenario<ModRing> s{c.ring, j, caps, c.group, {}, {}, {}, c};
    return f(s);
  }
  if (!j.contains("ring")) throw ScenarioError("ring", "missing \"ring\" field");
  AnyRing ring = detail::in_block("ring", [&] { return parse_ring(j.at("ring").get<std::string>()); });
  return std::visit([&](const auto& k) { return f(parse_scenario_as(k, j, caps)); }, ring);
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("(file)", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioError("(file)", std::string("JSON parse error: ") + e.what());
  }
}

}  // namespace equibrauer
