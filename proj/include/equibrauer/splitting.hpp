// Splitting a Galois object B by B#k^G, equivariant Morita equivalence and the
// clause-by-clause check of the exact sequence on a corpus.
#pragma once

#include <string>
#include <vector>

#include "equivariant.hpp"
#include "report.hpp"

namespace equibrauer {

/// A = B#k^G on b_i#p_g (index i*|G| + g), with (a#p_g)(b#p_t) = a b_{gt⁻¹} # p_t and
/// σ·(a#p_h) = a#p_{hσ⁻¹}. The pairing μ(b'_j ⊗ b_i) = (b_j b_i)_e makes A ≅ E(B, B, μ).
template <class R>
struct DualSmash {
  GModuleAlgebra<R> smash;
  DualPair<R> pair;
  RMat<R> bracket;  ///< E(P) -> A, m_i⊗m'_j ↦ [b_i, b_j] = b_i b_j # p_{deg(j)⁻¹}
};

template <class R>
DualSmash<R> smash_with_dual(const GaloisObject<R>& b) {
  const R& k = b.ring();
  const FinGroup& g = b.group();
  const auto& ba = b.algebra();
  const auto& gr = b.graded;
  const std::size_t n = ba.dim(), m = g.order(), N = n * m;
  RVec<R> one = zero_vec(k, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < m; ++x) one[i * m + x] = (*ba.identity())[i];
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < m; ++x) labels.push_back("b" + std::to_string(i) + "#p" + std::to_string(x));
  auto alg = algebra_from_products(
      k, N,
      [&](std::size_t p, std::size_t q) {
        const std::size_t i = p / m, x = p % m, j = q / m, t = q % m;
        RVec<R> out = zero_vec(k, N);
        if (gr.degree(j) != g.mul(x, g.inv(t))) return out;
        for (const auto& term : ba.product(i, j)) out[term.index * m + t] = term.coeff;
        return out;
      },
      one, true, labels);
  std::vector<RMat<R>> act;
  for (std::size_t s = 0; s < m; ++s) {
    RMat<R> a = zero_mat(k, N, N);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t h = 0; h < m; ++h) a(i * m + g.mul(h, g.inv(s)), i * m + h) = k.one();
    act.push_back(std::move(a));
  }
  GModuleAlgebra<R> smash(alg, g, std::move(act), "B#k^G");
  // pairing
  const std::size_t e_idx = gr.component(g.identity())[0];
  const auto one_coeff = k.inv((*ba.identity())[e_idx]);
  RMat<R> mu = zero_mat(k, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) mu(j, i) = k.mul(gr.part(ba.basis_product(j, i), g.identity())[e_idx], one_coeff);
  auto pair = make_pair(k, n, n, mu);
  RMat<R> br = zero_mat(k, N, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t d = g.inv(gr.degree(j));
      for (const auto& term : ba.product(i, j)) br(term.index * m + d, i * n + j) = term.coeff;
    }
  if (!make_iso(elementary_from_pair(pair).algebra, alg, br)) throw Error("smash_with_dual: bracket is not an isomorphism");
  return {std::move(smash), std::move(pair), std::move(br)};
}

template <class R>
struct SplitReport {
  std::string failed;  ///< empty on success
  bool azumaya = false;
  std::optional<PiGalois<R>> pi;
  std::optional<GradedIso<R>> phi;  ///< B -> π(B#k^G)
  bool ok() const { return failed.empty(); }
};

/// B ≅ π(B#k^G) via b_σ ↦ (a ↦ a·Σ_g (g⇀b_σ)#p_g); the map is re-verified as a graded isomorphism.
template <class R>
SplitReport<R> split_and_verify(const GaloisObject<R>& b, MiyashitaConvention conv = MiyashitaConvention::corrected) {
  SplitReport<R> rep;
  const R& k = b.ring();
  const FinGroup& g = b.group();
  const std::size_t n = b.algebra().dim(), m = g.order(), N = n * m;
  auto ds = smash_with_dual(b);
  const auto& a = ds.smash.algebra();
  rep.azumaya = is_taylor_azumaya(a).azumaya();
  if (!rep.azumaya) {
    rep.failed = "B#k^G is not Taylor-Azumaya";
    return rep;
  }
  rep.pi = pi_galois(ds.smash, {false, true});
  std::vector<RMat<R>> miy;
  for (std::size_t x = 0; x < m; ++x) miy.push_back(miyashita_action(b, x, conv));
  RMat<R> phi = zero_mat(k, m, n);
  for (std::size_t i = 0; i < n; ++i) {
    RVec<R> big = zero_vec(k, N);
    for (std::size_t x = 0; x < m; ++x) {
      RVec<R> t = miy[x].col(i);
      for (std::size_t l = 0; l < n; ++l) big[l * m + x] = t[l];
    }
    RMat<R> f = a.right_mult(big);
    const std::size_t s = b.graded.degree(i);
    auto lam = detail::ratio(k, f.data(), rep.pi->components[s].data());
    if (!lam) {
      rep.failed = "image of basis vector " + std::to_string(i) + " is not in End_A^g(A) for its degree";
      return rep;
    }
    phi(s, i) = *lam;
  }
  rep.phi = verify_graded_iso(b.graded, rep.pi->object.graded, phi);
  if (!rep.phi) rep.failed = "φ is not a graded algebra isomorphism";
  return rep;
}

struct EquivariantMoritaReport {
  bool elementary = false;
  bool strongly_inner = false;
  std::string note;
  bool equivalent() const { return elementary && strongly_inner; }
};

/// A ~ B iff A ⊗ B^op with the diagonal action is E(P) for a G-dual pair P,
/// i.e. elementary with a strongly inner action. Inputs must be Taylor-Azumaya.
template <class R>
EquivariantMoritaReport equivariant_morita(const GModuleAlgebra<R>& a, const GModuleAlgebra<R>& b,
                                           bool assume_azumaya = false) {
  if (!assume_azumaya)
    for (const auto* x : {&a, &b})
      if (!is_taylor_azumaya(x->algebra()).azumaya()) throw InputError(x->name() + " is not Taylor-Azumaya");
  EquivariantMoritaReport rep;
  auto c = tensor_g_module(a, opposite_g_module(b));
  auto el = is_elementary(c.algebra());
  rep.elementary = el.elementary;
  if (!el.elementary) {
    rep.note = "A ⊗ B^op is not elementary: " + el.note;
    return rep;
  }
  auto si = strongly_inner(c, {false, true});
  rep.strongly_inner = si.strongly_inner();
  if (!rep.strongly_inner) rep.note = "action on A ⊗ B^op is not strongly inner: " + si.note;
  return rep;
}

template <class R>
struct SequenceCorpus {
  std::string name;
  R ring;
  FinGroup group;
  std::vector<GModuleAlgebra<R>> algebras;  ///< Taylor-Azumaya G-module algebras
  std::vector<std::pair<std::string, GaloisObject<R>>> galois;
  std::size_t max_tensor_dim = 36;  ///< clause (b): larger A ⊗ B are skipped and counted
  std::size_t max_morita_dim = 36;  ///< clause (a): A ⊗ B^op goes through is_elementary, O(dim⁴) memory
};

struct ClauseResult {
  std::string clause;
  std::size_t checked = 0, skipped = 0;
  std::vector<std::string> lines;
  std::vector<std::string> failures;
  std::vector<nlohmann::json> certificates;
  bool pass() const { return failures.empty() && checked > 0; }
};

struct SequenceReport {
  std::vector<ClauseResult> clauses;
  bool pass() const {
    for (const auto& c : clauses)
      if (!c.pass()) return false;
    return !clauses.empty();
  }
};

/// Checks, on the corpus: (a) equivariantly Morita equivalent algebras have equal π classes,
/// (b) π(A ⊗ B) = π(A) □ π(B), (c) every Galois object is split by B#k^G,
/// (d) [π(A)] = 1 exactly when the action is strongly inner, in which case A is equivalent
/// to A with the trivial action and an elementary A carries a G-dual pair.
template <class R>
SequenceReport verify_exact_sequence(const SequenceCorpus<R>& c) {
  SequenceReport rep;
  const std::size_t na = c.algebras.size();
  std::vector<PiGalois<R>> pis;
  for (const auto& a : c.algebras) pis.push_back(pi_galois(a));

  ClauseResult ca;
  ca.clause = "morita-invariance";
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j) {
      const auto& x = c.algebras[i];
      const auto& y = c.algebras[j];
      if (x.dim() * y.dim() > c.max_morita_dim) {
        ++ca.skipped;
        continue;
      }
      auto mr = equivariant_morita(x, y, true);
      if (!mr.equivalent()) continue;
      ++ca.checked;
      auto cmp = galois_classes_equal(pis[i].object, pis[j].object);
      const bool eq = cmp.equal;
      std::string line = x.name() + " ~ " + y.name() + ": π classes " + (eq ? "equal" : "differ");
      ca.lines.push_back(line);
      if (eq) ca.certificates.push_back(cert::graded_iso(line, pis[i].object.graded, pis[j].object.graded, cmp.iso->matrix));
      if (!eq) ca.failures.push_back(line);
    }
  rep.clauses.push_back(std::move(ca));

  ClauseResult cb;
  cb.clause = "multiplicativity";
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i; j < na; ++j) {
      const auto& x = c.algebras[i];
      const auto& y = c.algebras[j];
      if (x.dim() * y.dim() > c.max_tensor_dim) {
        ++cb.skipped;
        continue;
      }
      ++cb.checked;
      auto t = pi_galois(tensor_g_module(x, y), {false, true});
      auto box = cotensor(pis[i].object, pis[j].object);
      auto cmp = galois_classes_equal(t.object, box);
      const bool eq = cmp.equal;
      std::string line = "π(" + x.name() + " ⊗ " + y.name() + ") " + (eq ? "=" : "≠") + " cotensor";
      cb.lines.push_back(line);
      if (eq) cb.certificates.push_back(cert::graded_iso(line, t.object.graded, box.graded, cmp.iso->matrix));
      if (!eq) cb.failures.push_back(line);
    }
  rep.clauses.push_back(std::move(cb));

  ClauseResult cc;
  cc.clause = "surjectivity";
  for (const auto& [name, b] : c.galois) {
    ++cc.checked;
    auto s = split_and_verify(b);
    std::string line = name + ": " + (s.ok() ? "B ≅ π(B#k^G)" : s.failed);
    cc.lines.push_back(line);
    if (s.ok()) cc.certificates.push_back(cert::graded_iso(line, b.graded, s.pi->object.graded, s.phi->matrix));
    if (!s.ok()) cc.failures.push_back(line);
  }
  rep.clauses.push_back(std::move(cc));

  ClauseResult cd;
  cd.clause = "kernel";
  const auto& kk = base_algebra(c.ring);
  auto k_triv = trivial_g_module(kk, c.group, "k");
  for (std::size_t i = 0; i < na; ++i) {
    const auto& a = c.algebras[i];
    ++cd.checked;
    auto cb0 = is_coboundary(pis[i].object.cocycle);
    const bool trivial = cb0.is_coboundary;
    if (trivial) cd.certificates.push_back(cert::coboundary(a.name() + ": [π] trivial", pis[i].object.cocycle, *cb0.witness));
    auto si = strongly_inner(a, {false, true});
    std::string line = a.name() + ": [π] " + (trivial ? "trivial" : "nontrivial");
    bool ok = si.strongly_inner() == trivial;
    if (si.witness)
      cd.certificates.push_back(cert::inner_witness(a.name() + ": strongly inner", a.algebra(), c.group, a.actions(),
                                                    si.witness->multipliers, si.witness->f));
    auto el = is_elementary(a.algebra());
    if (trivial) {
      ok = ok && equivariant_morita(a, trivial_g_module(a.algebra(), c.group), true).equivalent();
      line += ", strongly inner, equivalent to the trivial action";
      if (el.elementary && ok) {
        // transport the action to E(P) and read off a G-dual pair
        const RMat<R>& phi = *el.iso;
        auto phinv = inverse(c.ring, phi);
        std::vector<RMat<R>> act;
        for (std::size_t g = 0; g < c.group.order(); ++g)
          act.push_back(mat_mul(c.ring, *phinv, mat_mul(c.ring, a.action(g), phi)));
        GModuleAlgebra<R> e(elementary_from_pair(*el.pair).algebra, c.group, std::move(act), "E(P)");
        auto w = strongly_inner_witness(e, {false, true});
        ok = ok && w.has_value();
        if (w) {
          recover_pair(*el.pair, e, *w);
          line += ", G-dual pair recovered";
        }
      }
    } else {
      line += ", not strongly inner";
      if (el.elementary) {
        bool not_trivial_class = !equivariant_morita(a, k_triv, true).equivalent();
        ok = ok && not_trivial_class;
        line += not_trivial_class ? ", elementary but not equivalent to k" : ", but equivalent to k";
      }
    }
    cd.lines.push_back(line);
    if (!ok) cd.failures.push_back(line);
  }
  rep.clauses.push_back(std::move(cd));
  return rep;
}

}  // namespace equibrauer
