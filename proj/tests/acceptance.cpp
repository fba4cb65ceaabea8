// Acceptance run: the self-test scoreboard plus the runtime bounds, one line per criterion.
#include <chrono>
#include <cstdio>
#include <string>

#include "equibrauer/selftest.hpp"

using namespace equibrauer;

namespace {

double timing(const CriterionResult& c, const std::string& name) {
  for (const auto& [k, v] : c.timings)
    if (k == name) return v;
  return -1;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  auto st = run_selftest();
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  bool all = true;
  for (auto& c : st.criteria) {
    std::string extra;
    if (c.id == 1)
      for (const auto& [k, v] : c.timings)
        if (k != "criterion" && v >= 1.0) c.failures.push_back(k + " took " + std::to_string(v) + " s (bound 1 s)");
    if (c.id == 4 && timing(c, "M2,u") >= 5.0) c.failures.push_back("runtime bound 5 s exceeded");
    if (c.id == 7) {
      const double t = timing(c, "total");
      extra = " [" + std::to_string(t) + " s, bound 30 s]";
      if (t >= 30.0) c.failures.push_back("runtime bound 30 s exceeded");
    }
    if (c.id == 8) {
      extra = " [full selftest " + std::to_string(total) + " s, bound 300 s]";
      if (total >= 300.0) c.failures.push_back("full selftest exceeded 300 s");
    }
    std::printf("criterion %2d: %s  %s%s\n", c.id, c.pass() ? "PASS" : "FAIL", c.title.c_str(), extra.c_str());
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    all = all && c.pass();
  }
  if (st.criteria.size() != 12) {
    std::printf("expected 12 criteria, ran %zu\n", st.criteria.size());
    all = false;
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
