// Deterministic JSON reports and self-contained witness certificates.
#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "graded.hpp"
#include "multiplier.hpp"

namespace equibrauer {

inline constexpr const char* tool_version = "0.1.0";

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// nlohmann::json objects keep keys sorted, so dump() is canonical.
inline std::string content_hash(const nlohmann::json& j) { return hex64(fnv1a(j.dump())); }

using json = nlohmann::json;

inline json group_to_json(const FinGroup& g) { return {{"name", g.name()}, {"table", g.table()}}; }

template <class R>
json algebra_to_json(const FinAlgebra<R>& a) {
  const R& k = a.ring();
  json sc = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(vec_to_json(k, a.basis_product(i, j)));
    sc.push_back(std::move(row));
  }
  json out{{"dim", a.dim()}, {"sc", std::move(sc)}};
  if (a.has_identity()) out["identity"] = vec_to_json(k, *a.identity());
  if (!a.labels().empty()) out["labels"] = a.labels();
  return out;
}

template <class R>
json graded_to_json(const GradedAlgebra<R>& s) {
  json out = algebra_to_json(s.algebra());
  out["grading"] = {{"degrees", s.degrees()}};
  return out;
}

namespace cert {

template <class R>
json graded_iso(const std::string& label, const GradedAlgebra<R>& s, const GradedAlgebra<R>& t, const RMat<R>& m) {
  return {{"kind", "graded-iso"},       {"label", label},
          {"ring", ring_name(s.ring())}, {"group", group_to_json(s.group())},
          {"source", graded_to_json(s)}, {"target", graded_to_json(t)},
          {"matrix", mat_to_json(s.ring(), m)}};
}

template <class R>
json algebra_iso(const std::string& label, const FinAlgebra<R>& s, const FinAlgebra<R>& t, const RMat<R>& m) {
  return {{"kind", "algebra-iso"},        {"label", label},
          {"ring", ring_name(s.ring())},  {"source", algebra_to_json(s)},
          {"target", algebra_to_json(t)}, {"matrix", mat_to_json(s.ring(), m)}};
}

/// α = δb
template <class R>
json coboundary(const std::string& label, const Cocycle<R>& alpha, const std::vector<typename R::value_type>& b) {
  const R& k = alpha.ring();
  json bj = json::array();
  for (const auto& x : b) bj.push_back(k.to_json(x));
  return {{"kind", "coboundary"}, {"label", label}, {"ring", ring_name(k)}, {"group", group_to_json(alpha.group())},
          {"cocycle", alpha.to_json()}, {"b", std::move(bj)}};
}

/// f(g) written out as (ρ1, ρ2) operator pairs on A.
template <class R>
json inner_witness(const std::string& label, const FinAlgebra<R>& a, const FinGroup& g,
                   const std::vector<RMat<R>>& action, const MultiplierAlgebra<R>& mult,
                   const std::vector<RVec<R>>& f) {
  const R& k = a.ring();
  json acts = json::array(), fs = json::array();
  for (const auto& m : action) acts.push_back(mat_to_json(k, m));
  for (const auto& v : f) {
    auto x = mult.element(v);
    fs.push_back({{"rho1", mat_to_json(k, x.rho1)}, {"rho2", mat_to_json(k, x.rho2)}});
  }
  return {{"kind", "inner-witness"}, {"label", label}, {"ring", ring_name(k)}, {"group", group_to_json(g)},
          {"algebra", algebra_to_json(a)}, {"action", std::move(acts)}, {"f", std::move(fs)}};
}

}  // namespace cert

/// body holds everything that must be reproducible; timings sit next to it.
struct Report {
  std::string command;
  json inputs = json::object();
  json verdicts = json::object();  ///< name → bool
  json details = json::object();
  json certificates = json::array();
  std::vector<std::pair<std::string, double>> timings;

  void verdict(const std::string& name, bool v) { verdicts[name] = v; }

  bool pass() const {
    if (verdicts.empty()) return false;
    for (const auto& [k, v] : verdicts.items())
      if (!v.get<bool>()) return false;
    return true;
  }

  json body() const {
    return {{"command", command}, {"tool_version", tool_version}, {"inputs", inputs},      {"verdicts", verdicts},
            {"details", details}, {"certificates", certificates}, {"pass", pass()}};
  }

  json to_json() const {
    json b = body();
    json t = json::object();
    for (const auto& [k, v] : timings) t[k] = v;
    return {{"body", b}, {"body_hash", content_hash(b)}, {"timings", t}};
  }
};

/// Scoped stopwatch appending to Report::timings.
class Timer {
 public:
  Timer(Report& r, std::string name) : r_(r), name_(std::move(name)), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    std::chrono::duration<double> d = std::chrono::steady_clock::now() - t0_;
    r_.timings.emplace_back(name_, d.count());
  }
  Timer(const Timer&) = delete;
  Timer& operator=(const Timer&) = delete;

 private:
  Report& r_;
  std::string name_;
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace equibrauer
