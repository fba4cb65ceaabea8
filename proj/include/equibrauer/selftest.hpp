// Bundled self-test: one scoreboard line per acceptance criterion.
#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "commands.hpp"

namespace equibrauer {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<std::string> lines, failures;
  std::vector<json> certificates;
  std::vector<std::pair<std::string, double>> timings;
  bool pass() const { return failures.empty() && !lines.empty(); }

  void expect(bool ok, const std::string& line) {
    lines.push_back(std::string(ok ? "ok: " : "FAILED: ") + line);
    if (!ok) failures.push_back(line);
  }

  json to_json() const {
    return {{"id", id}, {"title", title}, {"pass", pass()}, {"lines", lines}, {"failures", failures}};
  }
};

struct SelftestOptions {
  MiyashitaConvention convention = MiyashitaConvention::corrected;
  bool determinism = true;  ///< rerun everything and compare report bodies
};

struct SelftestResult {
  std::vector<CriterionResult> criteria;
  Report report;
};

namespace selftest {

using K = ModRing;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline RMat<K> small_rect(const K& k, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& v) {
  RMat<K> m = zero_mat(k, rows, cols);
  for (std::size_t t = 0; t < v.size(); ++t) m(t / cols, t % cols) = k.from_int(v[t]);
  return m;
}

inline void multiplier_model(CriterionResult& c) {
  const K k = ModRing::prime_field(5);
  std::vector<std::pair<std::string, DualPair<K>>> pairs{
      {"(k,k,1)", make_pair(k, 1, 1, small_rect(k, 1, 1, {1}))},
      {"(k²,k,first coordinate)", make_pair(k, 2, 1, small_rect(k, 1, 2, {1, 0}))},
      {"standard k²", standard_pair(k, 2)},
      {"standard k³", standard_pair(k, 3)},
      {"(k³,k²,rank 2)", make_pair(k, 3, 2, small_rect(k, 2, 3, {1, 0, 0, 0, 1, 0}))},
      {"(k²,k³,rank 1)", make_pair(k, 2, 3, small_rect(k, 3, 2, {1, 2, 0, 0, 0, 0}))},
      {"(k²,k²,rank 1)", make_pair(k, 2, 2, small_rect(k, 2, 2, {1, 1, 0, 0}))}};
  for (const auto& [name, p] : pairs) {
    Stopwatch sw;
    auto model = elementary_multiplier_model(p);
    // independent route: solve the multiplier constraints on E(P) directly
    auto direct = multiplier_algebra(model.elementary.algebra, MultiplierMethod::general);
    const bool inv = mat_mul(k, model.alpha, model.beta) == identity_mat(k, model.multipliers.dim()) &&
                     mat_mul(k, model.beta, model.alpha) == identity_mat(k, model.ebar.dim());
    auto iso = make_iso(model.ebar, model.multipliers.algebra, model.alpha);
    c.expect(inv && iso && direct.dim() == model.ebar.dim(),
             name + ": dim Ē = " + std::to_string(model.ebar.dim()) + " = dim M(E) = " + std::to_string(direct.dim()) +
                 ", α∘β = β∘α = id, α multiplicative");
    if (iso) c.certificates.push_back(cert::algebra_iso(name + ": α", model.ebar, model.multipliers.algebra, model.alpha));
    c.timings.emplace_back(name, sw.seconds());
  }
  auto e = elementary_from_pair(pairs[1].second).algebra;
  c.expect(!e.has_identity() && multiplier_algebra(e).dim() == 3, "non-unital (k²,k,first coordinate): dim M(E) = 3");
}

inline GradedAlgebra<K> quadratic_graded(const K& k, std::int64_t c) {
  auto a = algebra_from_products(
      k, 2,
      [&](std::size_t i, std::size_t j) {
        if (i == 1 && j == 1) return RVec<K>{k.from_int(c), 0};
        return unit_vec(k, 2, i + j);
      },
      RVec<K>{1, 0}, true);
  return GradedAlgebra<K>(a, cyclic(2), {0, 1});
}

inline void galois_equivalence(CriterionResult& c) {
  const K f5 = ModRing::prime_field(5), f7 = ModRing::prime_field(7);
  auto kk = algebra_from_products(
      f5, 2, [&](std::size_t i, std::size_t j) { return i == j ? unit_vec(f5, 2, i) : zero_vec(f5, 2); },
      RVec<K>{1, 1}, true);
  std::vector<std::pair<std::string, GradedAlgebra<K>>> corpus{
      {"GF(5)[x]/(x²)", quadratic_graded(f5, 0)},   {"GF(5)[x]/(x²-1)", quadratic_graded(f5, 1)},
      {"GF(5)[x]/(x²-2)", quadratic_graded(f5, 2)}, {"GF(5)[x]/(x²-3)", quadratic_graded(f5, 3)},
      {"GF(5)C2", group_algebra(f5, cyclic(2))},     {"GF(5)C4", group_algebra(f5, cyclic(4))},
      {"GF(7)S3", group_algebra(f7, symmetric3())},
      {"M2 with e12,e21 odd", GradedAlgebra<K>(matrix_algebra(f5, 2), cyclic(2), {0, 1, 1, 0})},
      {"k×k in degree e", GradedAlgebra<K>(kk, cyclic(2), {0, 0})}};
  for (const auto& [name, b] : galois_corpus_v4_gf5()) corpus.push_back({name, b.graded});
  for (const auto& [name, s] : corpus) {
    const bool expected = is_strongly_graded(s).strongly_graded && s.component_dims()[s.group().identity()] == 1;
    auto g = galois_check(s);
    bool exact = true;
    if (g.object) {
      const std::size_t r = g.object->gamma.rows();
      exact = mat_mul(s.ring(), g.object->gamma, g.object->gamma_inverse) == identity_mat(s.ring(), r) &&
              mat_mul(s.ring(), g.object->gamma_inverse, g.object->gamma) == identity_mat(s.ring(), r);
    }
    c.expect(g.galois == expected && exact, name + ": galois " + (g.galois ? "yes" : "no") +
                                                ", strongly graded with dim S_e = 1 " + (expected ? "yes" : "no") +
                                                (g.object ? ", γ·γ⁻¹ = id" : ""));
  }
  c.expect(!galois_check(quadratic_graded(f5, 0)).galois, "x² is the negative case");
  c.expect(galois_check(quadratic_graded(f5, 2)).galois, "x²-2 is the positive case");
}

template <class R>
void pi_trivial_one(CriterionResult& c, const GModuleAlgebra<R>& a) {
  auto p = pi_galois(a);
  auto kg = require_galois(group_algebra(a.ring(), a.group()));
  auto cmp = galois_classes_equal(p.object, kg);
  c.expect(cmp.equal, a.name() + " over " + a.ring().name() + ", " + std::to_string(a.group().order()) +
                          "-element group: π(A) ≅ kG");
  if (cmp.equal) c.certificates.push_back(cert::graded_iso(a.name() + ": π ≅ kG", p.object.graded, kg.graded, cmp.iso->matrix));
}

inline void pi_trivial_actions(CriterionResult& c, const std::vector<const SequenceCorpus<K>*>& corpora) {
  for (const auto* cor : corpora)
    for (const auto& a : cor->algebras)
      pi_trivial_one(c, trivial_g_module(a.algebra(), cor->group, a.name()));
  const Rationals q;
  pi_trivial_one(c, trivial_g_module(quaternion_algebra(q, mpq_class(-1), mpq_class(-1)), cyclic(2), "(-1,-1)"));
  pi_trivial_one(c, trivial_g_module(matrix_algebra(q, 2), cyclic(3), "M2(Q)"));
  const auto v4 = direct_product(cyclic(2), cyclic(2));
  pi_trivial_one(c, trivial_g_module(matrix_algebra(ModRing::prime_field(5), 2), v4, "M2"));
}

inline void nontrivial_pi(CriterionResult& c) {
  Stopwatch sw;
  const K k = ModRing::prime_field(5);
  const FinGroup g = cyclic(2);
  auto a = cyclic_conjugation(k, 2, small_matrix(2, {0, 1, 2, 0}), "M2,u");
  // oracle: End_A^g(A) = {y ↦ y·x : a x = x (g·a)}, solved directly
  EquationSystem<K> sys(k, 4);
  auto m2 = a.algebra();
  for (std::size_t b = 0; b < 4; ++b) {
    RMat<K> op = mat_add(k, m2.left_mult(m2.basis(b)), mat_scale(k, k.neg(k.one()), m2.right_mult(a.act(1, m2.basis(b)))));
    for (std::size_t r = 0; r < 4; ++r) sys.add(op.row(r));
  }
  auto sol = sys.solutions();
  c.expect(sol.size() == 1, "End_A^g(A) is one-dimensional");
  if (sol.size() == 1) {
    const RVec<K> uinv{0, 3, 1, 0};
    auto ratio = detail::ratio(k, sol[0], uinv);
    c.expect(ratio.has_value(), "the solution is a multiple of u⁻¹");
    c.expect(m2.mul(uinv, uinv) == RVec<K>{3, 0, 0, 3}, "(u⁻¹)² = 3");
  }
  c.expect(k.mul(3, k.inv(2)) == 4 && k.mul(2, 2) == 4, "3·2⁻¹ = 4 = 2² is a square mod 5");
  auto p = pi_galois(a);
  c.expect(k.equal(p.object.cocycle.at(1, 1), 3), "π cocycle value α(g,g) = " + k.to_string(p.object.cocycle.at(1, 1)));
  auto two = crossed_product(k, g, Cocycle<K>(g, k, {1, 1, 1, 2}));
  auto cmp = galois_classes_equal(p.object, two);
  c.expect(cmp.equal, "[π(A)] = [crossed product with α(g,g) = 2]");
  if (cmp.equal) c.certificates.push_back(cert::graded_iso("π(M2,u) ≅ crossed(2)", p.object.graded, two.graded, cmp.iso->matrix));
  c.expect(!is_coboundary(p.object.cocycle).is_coboundary, "the class is nontrivial");
  c.expect(!strongly_inner_witness(a).has_value(), "strongly_inner_witness returns none");
  c.timings.emplace_back("M2,u", sw.seconds());
}

inline void inner_iff_trivial(CriterionResult& c, const std::vector<const SequenceCorpus<K>*>& corpora) {
  for (const auto* cor : corpora)
    for (const auto& a : cor->algebras) {
      const bool trivial = is_coboundary(pi_galois(a, {false, true}).object.cocycle).is_coboundary;
      auto w = strongly_inner_witness(a, {false, true});
      const bool ok = trivial == w.has_value() && (!w || verify_inner_witness(a, *w));
      c.expect(ok, cor->name + " " + a.name() + ": [π] " + (trivial ? "trivial" : "nontrivial") + ", witness " +
                       (w ? "found and verified" : "none"));
    }
  auto v = cyclic_conjugation(ModRing::prime_field(5), 2, small_matrix(2, {1, 0, 0, 4}), "M2,v");
  auto w = strongly_inner_witness(v);
  c.expect(w && verify_inner_witness(v, *w), "conjugation by diag(1,-1) has a witness");
  if (w) c.certificates.push_back(cert::inner_witness("M2,v", v.algebra(), v.group(), v.actions(), w->multipliers, w->f));
}

inline void clause_check(CriterionResult& c, const std::string& corpus, const ClauseResult& cl) {
  c.expect(cl.pass() && cl.skipped == 0, corpus + " " + cl.clause + ": " + std::to_string(cl.checked) + " checked, " +
                                             std::to_string(cl.skipped) + " skipped, " +
                                             std::to_string(cl.failures.size()) + " failed");
  for (const auto& f : cl.failures) c.lines.push_back("  " + f);
}

inline void split_all(CriterionResult& c, const std::vector<const SequenceCorpus<K>*>& corpora) {
  Stopwatch sw;
  std::vector<std::pair<std::string, GaloisObject<K>>> objs;
  for (const auto* cor : corpora)
    for (const auto& [name, b] : cor->galois) objs.push_back({cor->name + " " + name, b});
  for (const auto& [name, b] : galois_corpus_v4_gf5()) objs.push_back({"GF(5),C2xC2 " + name, b});
  for (const auto& [name, b] : objs) {
    auto ds = smash_with_dual(b);
    const bool az = is_taylor_azumaya(ds.smash.algebra()).azumaya();
    const bool bracket = make_iso(elementary_from_pair(ds.pair).algebra, ds.smash.algebra(), ds.bracket).has_value();
    auto s = split_and_verify(b);
    c.expect(az && bracket && s.ok(), name + ": B#k^G Taylor-Azumaya, ≅ E(B,B,[,]), φ graded iso" +
                                          (s.ok() ? std::string() : " (" + s.failed + ")"));
    if (s.ok()) c.certificates.push_back(cert::graded_iso(name + ": φ", b.graded, s.pi->object.graded, s.phi->matrix));
  }
  c.timings.emplace_back("total", sw.seconds());
}

inline void h2_oracle(CriterionResult& c) {
  struct Case {
    std::string name;
    FinGroup g;
    K k;
    std::int64_t order;
  };
  const K f3 = ModRing::prime_field(3), f5 = ModRing::prime_field(5), f7 = ModRing::prime_field(7);
  for (const auto& cs : {Case{"C2 over GF(5)", cyclic(2), f5, 2}, Case{"C3 over GF(7)", cyclic(3), f7, 3},
                         Case{"C2xC2 over GF(3)", direct_product(cyclic(2), cyclic(2)), f3, 8}}) {
    auto b = oracle::brute_h2(cs.g, cs.k);
    auto h = second_cohomology(cs.g, cs.k);
    c.expect(h.order() == cs.order && static_cast<std::int64_t>(b.order()) == cs.order,
             cs.name + ": Smith form order " + std::to_string(h.order()) + ", enumeration order " +
                 std::to_string(b.order()) + " over " + std::to_string(b.candidates) + " candidates");
  }
  c.expect(oracle::brute_h2(direct_product(cyclic(2), cyclic(2)), f3).candidates <= 512, "C2xC2 enumeration within 512");
}

inline void brauer_q(CriterionResult& c) {
  const Rationals q;
  auto ham = quaternion_algebra(q, mpq_class(-1), mpq_class(-1));
  c.expect(is_taylor_azumaya(ham).azumaya(), "(-1,-1) is Taylor-Azumaya");
  auto el = is_elementary(ham);
  c.expect(!el.elementary, "(-1,-1) is not elementary");
  c.expect(!is_split_quaternion(-1, -1).split, "(-1,-1) is not split");
  c.expect(morita_equivalent(quaternion_algebra(q, mpq_class(1), mpq_class(1)), matrix_algebra(q, 2)), "(1,1) ~ M2(Q)");
  std::vector<std::pair<mpq_class, mpq_class>> corpus{
      {1, 1},  {-1, -1}, {-1, 3},  {2, -1}, {5, -1},  {3, 5},
      {2, 5},  {2, 3},   {3, -2},  {mpq_class(1, 2), mpq_class(3, 4)}, {-1, 2}, {7, -3}};
  for (const auto& [a, b] : corpus) {
    const bool split = is_split_quaternion(a, b).split;
    const bool zero_divisor = oracle::norm_zero_search(a, b, 10).has_value();
    c.expect(split == zero_divisor, "(" + a.get_str() + "," + b.get_str() + "): Hilbert " +
                                        (split ? "split" : "division") + ", zero-divisor search " +
                                        (zero_divisor ? "found" : "none"));
  }
}

inline void miyashita(CriterionResult& c, MiyashitaConvention conv) {
  const K f7 = ModRing::prime_field(7);
  auto s = require_galois(group_algebra(f7, symmetric3()));
  auto chosen = miyashita_properties(s, conv);
  c.expect(chosen.is_group_action, "kS3, " + convention_name(conv) + ": group action");
  c.expect(chosen.yetter_drinfeld, "kS3, " + convention_name(conv) + ": Yetter-Drinfeld");
  c.expect(chosen.quantum_commutative, "kS3, " + convention_name(conv) + ": quantum commutative" +
                                           (chosen.first_failure.empty() ? "" : " (" + chosen.first_failure + ")"));
  auto lit = miyashita_properties(s, MiyashitaConvention::literal);
  c.expect(!lit.quantum_commutative, "kS3, literal: quantum commutativity fails (pinned)");
}

}  // namespace selftest

namespace detail {

inline std::vector<CriterionResult> run_criteria(const SelftestOptions& opt) {
  using namespace selftest;
  const auto c2 = corpus_c2_gf5(), c3 = corpus_c3_gf7();
  const std::vector<const SequenceCorpus<K>*> both{&c2, &c3};
  std::vector<CriterionResult> out;
  auto run = [&](int id, std::string title, auto&& f) {
    CriterionResult c;
    c.id = id;
    c.title = std::move(title);
    Stopwatch sw;
    try {
      f(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    c.timings.emplace_back("criterion", sw.seconds());
    out.push_back(std::move(c));
  };
  run(1, "multiplier algebra of E(P) matches the (f, f') model", multiplier_model);
  run(2, "galois_check iff strongly graded with dim S_e = 1", galois_equivalence);
  run(3, "π of a trivial action is kG", [&](CriterionResult& c) { pi_trivial_actions(c, both); });
  run(4, "π of M2(GF(5)) under conjugation by u, u² = 2", nontrivial_pi);
  run(5, "trivial π class iff strongly inner witness", [&](CriterionResult& c) { inner_iff_trivial(c, both); });
  std::vector<SequenceReport> seq;
  Stopwatch seq_time;
  for (const auto* cor : both) seq.push_back(verify_exact_sequence(*cor));
  const double seq_seconds = seq_time.seconds();
  run(6, "π(A⊗B) = π(A) □ π(B)", [&](CriterionResult& c) {
    for (std::size_t i = 0; i < both.size(); ++i) clause_check(c, both[i]->name, seq[i].clauses.at(1));
  });
  run(7, "B#k^G splits every Galois object", [&](CriterionResult& c) { split_all(c, both); });
  run(8, "exact sequence verifier on the bundled corpora", [&](CriterionResult& c) {
    for (std::size_t i = 0; i < both.size(); ++i)
      for (const auto& cl : seq[i].clauses) {
        clause_check(c, both[i]->name, cl);
        for (const auto& x : cl.certificates) c.certificates.push_back(x);
      }
    c.timings.emplace_back("verify_exact_sequence", seq_seconds);
  });
  run(9, "H² Smith form against enumeration", h2_oracle);
  run(10, "Br(Q): Hamilton quaternions", brauer_q);
  run(11, "Miyashita convention on kS3", [&](CriterionResult& c) { miyashita(c, opt.convention); });
  return out;
}

inline Report criteria_report(const std::vector<CriterionResult>& cs, const SelftestOptions& opt) {
  Report r;
  r.command = "selftest";
  r.inputs["convention"] = convention_name(opt.convention);
  json crit = json::array();
  for (const auto& c : cs) {
    char key[32];
    std::snprintf(key, sizeof key, "criterion_%02d", c.id);
    r.verdict(key, c.pass());
    crit.push_back(c.to_json());
    for (const auto& x : c.certificates) r.certificates.push_back(x);
    for (const auto& [name, t] : c.timings) r.timings.emplace_back(std::string(key) + "/" + name, t);
  }
  r.details["criteria"] = crit;
  return r;
}

}  // namespace detail

/// Criteria 1-11, then (optionally) a second full run whose body must match byte for byte.
inline SelftestResult run_selftest(const SelftestOptions& opt = {}) {
  SelftestResult out;
  out.criteria = detail::run_criteria(opt);
  out.report = detail::criteria_report(out.criteria, opt);
  if (opt.determinism) {
    selftest::Stopwatch sw;
    CriterionResult c;
    c.id = 12;
    c.title = "two full runs give byte-identical report bodies";
    const std::string first = out.report.body().dump();
    const std::string second = detail::criteria_report(detail::run_criteria(opt), opt).body().dump();
    c.expect(first == second, "body hash " + content_hash(json::parse(first)) + " vs " +
                                  content_hash(json::parse(second)) + ", " + std::to_string(first.size()) + " bytes");
    c.timings.emplace_back("criterion", sw.seconds());
    out.criteria.push_back(c);
    out.report = detail::criteria_report(out.criteria, opt);
  }
  return out;
}

inline std::string scoreboard(const std::vector<CriterionResult>& cs) {
  std::string out;
  for (const auto& c : cs) {
    char head[16];
    std::snprintf(head, sizeof head, "%2d", c.id);
    out += std::string(c.pass() ? "PASS " : "FAIL ") + head + "  " + c.title + "\n";
    for (const auto& f : c.failures) out += "        " + f + "\n";
  }
  return out;
}

}  // namespace equibrauer
