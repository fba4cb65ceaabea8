// CLI commands over a parsed scenario; each returns a Report.
#pragma once

#include <string>
#include <type_traits>
#include <vector>

#include "oracle.hpp"
#include "witness.hpp"

namespace equibrauer {

struct RunOptions {
  Caps caps;
  MiyashitaConvention convention = MiyashitaConvention::corrected;
};

namespace detail {

template <class R>
json mats_to_json(const R& k, const std::vector<RMat<R>>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(mat_to_json(k, m));
  return out;
}

template <class R>
json galois_summary(const GaloisObject<R>& s) {
  return {{"algebra", graded_to_json(s.graded)}, {"cocycle", s.cocycle.to_json()}};
}

}  // namespace detail

template <class R>
Report cmd_check_azumaya(const Scenario<R>& s, const RunOptions&) {
  Report r;
  r.command = "check-azumaya";
  const auto& blk = s.need_algebra();
  const auto& a = blk.algebra;
  const R& k = s.ring;
  {
    Timer t(r, "taylor");
    auto ta = is_taylor_azumaya(a);
    r.details["taylor"] = {{"unital", ta.unital},         {"faithful", ta.faithful},
                           {"central", ta.central},       {"projective", ta.projective},
                           {"generator", ta.generator},   {"failed_stage", ta.failed_stage},
                           {"center_dim", ta.center_dim}, {"separability_path", ta.separability_path}};
    r.verdict("taylor_azumaya", ta.azumaya());
    if (!ta.azumaya()) return r;
  }
  Timer t(r, "elementary");
  auto el = is_elementary(a);
  json ej{{"elementary", el.elementary}, {"method", el.method}, {"note", el.note}};
  if (el.elementary) {
    const auto& p = *el.pair;
    ej["pair"] = {{"M", p.m}, {"Mprime", p.mprime}, {"mu", mat_to_json(k, p.mu)}};
    r.certificates.push_back(cert::algebra_iso("E(P) ≅ A", elementary_from_pair(p).algebra, a, *el.iso));
  }
  r.details["elementary"] = ej;
  r.details["brauer_class"] = el.elementary ? "trivial" : "not shown trivial";
  if constexpr (std::is_same_v<R, Rationals>) {
    if (blk.kind == "quaternion") {
      const auto& q = s.raw.contains("quaternion") ? s.raw.at("quaternion") : s.raw.at("algebra").at("quaternion");
      auto sp = is_split_quaternion(k.from_json(q[0]), k.from_json(q[1]));
      r.details["hilbert"] = {{"split", sp.split}, {"symbols", sp.symbols}};
      r.verdict("hilbert_agrees_with_elementary", sp.split == el.elementary);
    }
  }
  return r;
}

template <class R>
Report cmd_multiplier(const Scenario<R>& s, const RunOptions&) {
  Report r;
  r.command = "multiplier";
  const auto& blk = s.need_algebra();
  const R& k = s.ring;
  Timer t(r, "multiplier");
  auto m = multiplier_algebra(blk.algebra);
  bool ids = true;
  for (const auto& b : m.basis) ids = ids && satisfies_multiplier_identities(blk.algebra, b);
  r.verdict("multiplier_identities", ids);
  r.verdict("unital", m.algebra.has_identity());
  auto emb = canonical_embedding(m);
  r.details["dim"] = m.dim();
  r.details["via_identity"] = m.via_identity;
  r.details["embedding_rank"] = emb.rank();
  r.details["algebra"] = algebra_to_json(m.algebra);
  if (blk.pair) {
    auto model = elementary_multiplier_model(*blk.pair);
    auto iso = make_iso(model.ebar, model.multipliers.algebra, model.alpha);
    const bool inverse = iso && mat_mul(k, model.beta, model.alpha) == identity_mat(k, model.ebar.dim()) &&
                         mat_mul(k, model.alpha, model.beta) == identity_mat(k, model.multipliers.dim());
    r.verdict("elementary_model", inverse);
    r.details["ebar_dim"] = model.ebar.dim();
    if (iso) r.certificates.push_back(cert::algebra_iso("α: Ē ≅ M(E(P))", model.ebar, model.multipliers.algebra, model.alpha));
  }
  return r;
}

template <class R>
Report cmd_pi(const Scenario<R>& s, const RunOptions&) {
  Report r;
  r.command = "pi";
  const auto a = s.need_module();
  const R& k = s.ring;
  const FinGroup& g = a.group();
  PiGalois<R> p = [&] {
    Timer t(r, "pi");
    return pi_galois(a);
  }();
  auto cb = is_coboundary(p.object.cocycle);
  r.details["class"] = cb.is_coboundary ? "trivial" : "nontrivial";
  r.details["galois"] = detail::galois_summary(p.object);
  r.details["cocycle"] = p.object.cocycle.to_json();
  r.details["components"] = detail::mats_to_json(k, p.components);
  r.verdict("decomposition_independent", p.decomposition_independent);
  r.verdict("galois", true);
  if (cb.is_coboundary) {
    r.certificates.push_back(cert::coboundary("[π(A)] trivial", p.object.cocycle, *cb.witness));
    auto kg = require_galois(group_algebra(k, g));
    auto cmp = galois_classes_equal(p.object, kg);
    r.certificates.push_back(cert::graded_iso("π(A) ≅ kG", p.object.graded, kg.graded, cmp.iso->matrix));
  }
  {
    Timer t(r, "checks");
    auto bt = balanced_tensor_check(a);
    r.details["balanced_tensor"] = {{"checked", bt.checked}, {"quotient_dim", bt.quotient_dim}, {"note", bt.note}};
    if (bt.checked) r.verdict("balanced_tensor", bt.ok && bt.decomposition_independent);
    auto cc = commutant_check(a, p);
    r.details["commutant"] = {{"checked", cc.checked}, {"dim", cc.commutant_dim}, {"note", cc.note}};
    if (cc.checked) r.verdict("commutant", cc.ok);
    r.verdict("anti_hom_p", anti_hom_p(a, p).ok());
  }
  Timer t(r, "strongly_inner");
  auto si = strongly_inner(a, {false, true});
  r.details["strongly_inner"] = si.strongly_inner();
  r.details["strongly_inner_note"] = si.note;
  r.verdict("inner_iff_trivial", si.strongly_inner() == cb.is_coboundary);
  if (si.witness)
    r.certificates.push_back(
        cert::inner_witness("strongly inner", a.algebra(), g, a.actions(), si.witness->multipliers, si.witness->f));
  return r;
}

template <class R>
Report cmd_h2(const Scenario<R>& s, const RunOptions& o) {
  Report r;
  r.command = "h2";
  const FinGroup& g = s.need_group();
  const R& k = s.ring;
  CohomologyOptions co;
  co.max_group_order = o.caps.max_group;
  auto h = [&] {
    Timer t(r, "smith");
    return detail::in_block("group", [&] { return second_cohomology(g, k, co); });
  }();
  r.details["invariant_factors"] = h.invariant_factors;
  r.details["order"] = h.order();
  json reps = json::array();
  bool nontrivial = true;
  for (const auto& c : h.representatives) {
    reps.push_back(c.to_json());
    nontrivial = nontrivial && !is_coboundary(c).is_coboundary;
  }
  r.details["representatives"] = reps;
  r.verdict("representatives_nontrivial", nontrivial);
  if constexpr (std::is_same_v<R, ModRing>) {
    Timer t(r, "brute_force");
    try {
      auto b = oracle::brute_h2(g, k, 2'000'000);
      r.details["brute_force"] = {{"candidates", b.candidates}, {"order", b.order()}};
      r.verdict("brute_force_agrees", static_cast<std::int64_t>(b.order()) == h.order());
    } catch (const Error& e) {
      r.details["brute_force"] = {{"skipped", e.what()}};
    }
  }
  return r;
}

template <class R>
Report cmd_crossed_product(const Scenario<R>& s, const RunOptions&) {
  Report r;
  r.command = "crossed-product";
  const FinGroup& g = s.need_group();
  if (s.cocycles.empty()) throw ScenarioError("cocycle", "this command needs a \"cocycle\" block");
  const auto& alpha = s.cocycles.front();
  Timer t(r, "crossed");
  auto obj = crossed_product(s.ring, g, alpha);
  r.details["galois"] = detail::galois_summary(obj);
  r.verdict("strongly_graded", is_strongly_graded(obj.graded).strongly_graded);
  r.verdict("galois", galois_check(obj.graded).galois);
  auto back = is_coboundary(obj.cocycle * alpha.inverse());
  r.verdict("cocycle_class_recovered", back.is_coboundary);
  if (back.is_coboundary)
    r.certificates.push_back(cert::coboundary("recovered/input cocycle", obj.cocycle * alpha.inverse(), *back.witness));
  return r;
}

template <class R>
Report cmd_cotensor(const Scenario<R>& s, const RunOptions&) {
  Report r;
  r.command = "cotensor";
  const FinGroup& g = s.need_group();
  std::vector<GaloisObject<R>> objs;
  if (s.algebra && s.algebra->graded) objs.push_back(s.need_galois());
  for (const auto& c : s.cocycles) objs.push_back(crossed_product(s.ring, g, c));
  if (objs.size() < 2) throw ScenarioError("cocycles", "cotensor needs two Galois objects (cocycles or a graded algebra and a cocycle)");
  Timer t(r, "cotensor");
  auto box = cotensor(objs[0], objs[1]);
  auto pointwise = crossed_product(s.ring, g, objs[0].cocycle * objs[1].cocycle);
  auto cmp = galois_classes_equal(box, pointwise);
  r.details["galois"] = detail::galois_summary(box);
  r.verdict("class_is_pointwise_product", cmp.equal);
  if (cmp.equal) r.certificates.push_back(cert::graded_iso("S □ T ≅ crossed(αβ)", box.graded, pointwise.graded, cmp.iso->matrix));
  return r;
}

template <class R>
Report cmd_smash(const Scenario<R>& s, const RunOptions&) {
  Report r;
  r.command = "smash";
  const auto a = s.need_module();
  const R& k = s.ring;
  const FinGroup& g = a.group();
  const std::size_t n = a.dim(), m = g.order();
  Timer t(r, "smash");
  auto sm = smash_product(a);
  bool assoc = true;
  try {
    detail::check_associative(sm.algebra());
  } catch (const AlgebraError& e) {
    assoc = false;
    r.details["associativity_witness"] = e.witness();
  }
  r.verdict("associative", assoc);
  bool emb = true;
  for (std::size_t i = 0; i < n && emb; ++i)
    for (std::size_t j = 0; j < n && emb; ++j)
      emb = sm.algebra().mul(smash_embed(a, a.algebra().basis(i)), smash_embed(a, a.algebra().basis(j))) ==
            smash_embed(a, a.algebra().basis_product(i, j));
  r.verdict("embedding_multiplicative", emb);
  r.details["dim"] = sm.dim();
  r.details["unital"] = sm.algebra().has_identity();
  r.details["algebra"] = graded_to_json(sm);
  bool trivial = true;
  for (std::size_t x = 0; x < m; ++x) trivial = trivial && a.action(x) == identity_mat(k, n);
  if (trivial) {
    // A#kG = A ⊗ kG: a#g at g*n+i, a⊗g at i*m+g
    auto tens = tensor_product(a.algebra(), group_algebra(k, g).algebra());
    RMat<R> p = zero_mat(k, n * m, n * m);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t i = 0; i < n; ++i) p(i * m + x, x * n + i) = k.one();
    const bool iso = make_iso(sm.algebra(), tens, p).has_value();
    r.verdict("trivial_action_is_tensor", iso);
    if (iso) r.certificates.push_back(cert::algebra_iso("A#kG ≅ A⊗kG", sm.algebra(), tens, p));
  }
  return r;
}

template <class R>
Report cmd_split_galois(const Scenario<R>& s, const RunOptions& o) {
  Report r;
  r.command = "split-galois";
  const auto b = s.need_galois();
  Timer t(r, "split");
  auto ds = smash_with_dual(b);
  r.certificates.push_back(cert::algebra_iso("E(B,B,[,]) ≅ B#k^G", elementary_from_pair(ds.pair).algebra,
                                             ds.smash.algebra(), ds.bracket));
  auto rep = split_and_verify(b, o.convention);
  r.details["convention"] = convention_name(o.convention);
  r.details["failed"] = rep.failed;
  r.details["smash_dim"] = ds.smash.dim();
  r.verdict("smash_azumaya", rep.azumaya);
  r.verdict("phi_graded_iso", rep.ok());
  if (rep.ok()) r.certificates.push_back(cert::graded_iso("φ: B ≅ π(B#k^G)", b.graded, rep.pi->object.graded, rep.phi->matrix));
  return r;
}

template <class R>
Report cmd_miyashita(const Scenario<R>& s, const RunOptions& o) {
  Report r;
  r.command = "miyashita";
  const auto b = s.need_galois();
  Timer t(r, "miyashita");
  auto mp = miyashita_properties(b, o.convention);
  r.details["convention"] = convention_name(o.convention);
  r.details["automorphisms"] = mp.automorphisms;
  r.details["first_failure"] = mp.first_failure;
  std::vector<RMat<R>> ops;
  for (std::size_t x = 0; x < b.group().order(); ++x) ops.push_back(miyashita_action(b, x, o.convention));
  r.details["actions"] = detail::mats_to_json(s.ring, ops);
  r.verdict("is_group_action", mp.is_group_action);
  r.verdict("yetter_drinfeld", mp.yetter_drinfeld);
  r.verdict("quantum_commutative", mp.quantum_commutative);
  return r;
}

template <class R>
Report cmd_verify_sequence(const Scenario<R>& s, const RunOptions&) {
  Report r;
  r.command = "verify-sequence";
  if (!s.corpus) throw ScenarioError("corpus", "this command needs a \"corpus\" block");
  Timer t(r, "sequence");
  auto rep = verify_exact_sequence(*s.corpus);
  r.details["corpus"] = s.corpus->name;
  json clauses = json::object();
  for (const auto& c : rep.clauses) {
    clauses[c.clause] = {{"checked", c.checked}, {"skipped", c.skipped}, {"lines", c.lines}, {"failures", c.failures}};
    r.verdict(c.clause, c.pass());
    for (const auto& x : c.certificates) r.certificates.push_back(x);
  }
  r.details["clauses"] = clauses;
  return r;
}

inline const std::vector<std::string>& scenario_commands() {
  static const std::vector<std::string> c{"check-azumaya", "multiplier", "pi",         "h2",
                                          "crossed-product", "cotensor", "smash",      "split-galois",
                                          "miyashita",     "verify-sequence"};
  return c;
}

template <class R>
Report run_scenario_command(const std::string& cmd, const Scenario<R>& s, const RunOptions& o) {
  Report r;
  if (cmd == "check-azumaya") r = cmd_check_azumaya(s, o);
  else if (cmd == "multiplier") r = cmd_multiplier(s, o);
  else if (cmd == "pi") r = cmd_pi(s, o);
  else if (cmd == "h2") r = cmd_h2(s, o);
  else if (cmd == "crossed-product") r = cmd_crossed_product(s, o);
  else if (cmd == "cotensor") r = cmd_cotensor(s, o);
  else if (cmd == "smash") r = cmd_smash(s, o);
  else if (cmd == "split-galois") r = cmd_split_galois(s, o);
  else if (cmd == "miyashita") r = cmd_miyashita(s, o);
  else if (cmd == "verify-sequence") r = cmd_verify_sequence(s, o);
  else throw InputError("unknown command \"" + cmd + "\"");
  r.inputs = s.input_hashes();
  return r;
}

/// Parses the scenario and runs `cmd` on it.
inline Report run_command(const std::string& cmd, const json& scenario, const RunOptions& o) {
  return with_scenario(scenario, o.caps, [&](const auto& s) { return run_scenario_command(cmd, s, o); });
}

inline Report run_verify_witness(const json& doc, const RunOptions& o) {
  Report r;
  r.command = "verify-witness";
  r.inputs["document"] = content_hash(doc);
  auto certs = collect_certificates(doc);
  json checks = json::array();
  for (std::size_t i = 0; i < certs.size(); ++i) {
    auto w = verify_certificate(certs[i], o.caps, "certificates[" + std::to_string(i) + "]");
    checks.push_back({{"kind", w.kind}, {"label", w.label}, {"ok", w.ok}, {"note", w.note}});
    char key[32];
    std::snprintf(key, sizeof key, "certificate_%04zu", i);
    r.verdict(key, w.ok);
  }
  r.details["checks"] = checks;
  r.details["count"] = certs.size();
  return r;
}

inline std::string render_text(const json& report) {
  const json& b = report.at("body");
  std::string out = b.at("command").get<std::string>() + ": " + (b.at("pass").get<bool>() ? "PASS" : "FAIL") + "\n";
  for (const auto& [k, v] : b.at("verdicts").items()) out += "  " + std::string(v.get<bool>() ? "ok    " : "FAILED") + " " + k + "\n";
  for (const auto& [k, v] : b.at("details").items()) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.size() > 100) {
      std::size_t cut = 97;
      while (cut > 0 && (static_cast<unsigned char>(s[cut]) & 0xC0) == 0x80) --cut;  // keep UTF-8 whole
      s = s.substr(0, cut) + "...";
    }
    out += "  " + k + " = " + s + "\n";
  }
  out += "  certificates: " + std::to_string(b.at("certificates").size()) + "\n";
  out += "  body_hash: " + report.at("body_hash").get<std::string>() + "\n";
  return out;
}

}  // namespace equibrauer
