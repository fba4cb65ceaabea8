// Re-verification of report certificates from their own contents.
#pragma once

#include <string>

#include "scenario.hpp"

namespace equibrauer {

struct WitnessCheck {
  std::string kind, label;
  bool ok = false;
  std::string note;
};

namespace detail {

template <class R>
FinAlgebra<R> cert_algebra(const R& k, const json& j, const Caps& caps) {
  json plain = j;
  plain.erase("grading");
  return parse_algebra(k, plain, std::nullopt, caps).algebra;
}

template <class R>
GradedAlgebra<R> cert_graded(const R& k, const FinGroup& g, const json& j, const Caps& caps) {
  return GradedAlgebra<R>(cert_algebra(k, j, caps), g, j.at("grading").at("degrees").get<std::vector<std::size_t>>());
}

template <class R>
Multiplier<R> cert_multiplier(const R& k, const json& j, std::size_t n) {
  return {parse_mat(k, j.at("rho1"), n, n), parse_mat(k, j.at("rho2"), n, n)};
}

template <class R>
bool check_inner(const R& k, const json& c, const Caps& caps, std::string& note) {
  const FinGroup g = parse_group(c.at("group"), caps);
  const FinAlgebra<R> a = cert_algebra(k, c.at("algebra"), caps);
  const std::size_t n = a.dim(), m = g.order();
  std::vector<RMat<R>> acts;
  for (const auto& x : c.at("action")) acts.push_back(parse_mat(k, x, n, n));
  GModuleAlgebra<R> mod(a, g, acts, "A");
  if (c.at("f").size() != m) throw InputError("\"f\" needs one multiplier per group element");
  std::vector<Multiplier<R>> f;
  for (const auto& x : c.at("f")) f.push_back(cert_multiplier(k, x, n));
  for (std::size_t x = 0; x < m; ++x)
    if (!satisfies_multiplier_identities(a, f[x])) {
      note = "f(" + std::to_string(x) + ") is not a multiplier";
      return false;
    }
  const Multiplier<R> one{identity_mat(k, n), identity_mat(k, n)};
  if (!(f[g.identity()] == one)) {
    note = "f(e) is not the identity multiplier";
    return false;
  }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (!(compose(k, f[x], f[y]) == f[g.mul(x, y)])) {
        note = "f is not multiplicative at (" + std::to_string(x) + "," + std::to_string(y) + ")";
        return false;
      }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t b = 0; b < n; ++b) {
      const RVec<R> v = a.basis(b), gv = mod.act(x, v);
      Multiplier<R> lhs{a.left_mult(gv), a.right_mult(gv)};
      Multiplier<R> rhs = compose(k, compose(k, f[x], Multiplier<R>{a.left_mult(v), a.right_mult(v)}), f[g.inv(x)]);
      if (!(lhs == rhs)) {
        note = "f(g) a f(g⁻¹) ≠ g·a for g = " + std::to_string(x) + ", basis " + std::to_string(b);
        return false;
      }
    }
  return true;
}

template <class R>
bool check_certificate(const R& k, const json& c, const Caps& caps, std::string& note) {
  const std::string kind = c.at("kind").get<std::string>();
  if (kind == "algebra-iso" || kind == "graded-iso") {
    std::optional<FinGroup> g;
    if (kind == "graded-iso") g = parse_group(c.at("group"), caps);
    const FinAlgebra<R> s = cert_algebra(k, c.at("source"), caps), t = cert_algebra(k, c.at("target"), caps);
    const RMat<R> m = parse_mat(k, c.at("matrix"), t.dim(), s.dim());
    if (kind == "algebra-iso") {
      if (!make_iso(s, t, m)) note = "matrix is not an algebra isomorphism";
      return note.empty();
    }
    if (!verify_graded_iso(cert_graded(k, *g, c.at("source"), caps), cert_graded(k, *g, c.at("target"), caps), m))
      note = "matrix is not a graded algebra isomorphism";
    return note.empty();
  }
  if (kind == "coboundary") {
    const FinGroup g = parse_group(c.at("group"), caps);
    const Cocycle<R> alpha = parse_cocycle(k, g, c.at("cocycle"));
    const RVec<R> b = parse_vec(k, c.at("b"));
    if (b.size() != g.order()) throw InputError("\"b\" needs one value per group element");
    for (const auto& x : b)
      if (!k.is_unit(x)) {
        note = "b takes a non-unit value";
        return false;
      }
    if (coboundary(g, k, b).values() != alpha.values()) note = "α ≠ δb";
    return note.empty();
  }
  if (kind == "inner-witness") return check_inner(k, c, caps, note);
  throw InputError("unknown certificate kind \"" + kind + "\"");
}

}  // namespace detail

/// Malformed certificates raise ScenarioError; a well-formed certificate that fails
/// its identities comes back with ok = false and a note.
inline WitnessCheck verify_certificate(const json& c, const Caps& caps, const std::string& block) {
  WitnessCheck out;
  return detail::in_block(block, [&] {
    out.kind = c.at("kind").get<std::string>();
    out.label = c.value("label", std::string());
    AnyRing ring = parse_ring(c.at("ring").get<std::string>());
    out.ok = std::visit([&](const auto& k) { return detail::check_certificate(k, c, caps, out.note); }, ring);
    return out;
  });
}

/// Certificates anywhere in a report: body.certificates, or a bare array or object.
inline std::vector<json> collect_certificates(const json& j) {
  std::vector<json> out;
  if (j.is_array()) {
    for (const auto& c : j) out.push_back(c);
  } else if (j.is_object() && j.contains("kind")) {
    out.push_back(j);
  } else if (j.is_object() && j.contains("body")) {
    for (const auto& c : j.at("body").value("certificates", json::array())) out.push_back(c);
  } else if (j.is_object() && j.contains("certificates")) {
    for (const auto& c : j.at("certificates")) out.push_back(c);
  } else {
    throw ScenarioError("(root)", "no certificates found (expected a report, a certificate or an array of them)");
  }
  return out;
}

}  // namespace equibrauer
