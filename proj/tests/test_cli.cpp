#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "equibrauer/cli.hpp"

using namespace equibrauer;

namespace {

struct Run {
  int code;
  json out;
  std::string text, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r{cli_main(std::move(args), out, err), nullptr, out.str(), err.str()};
  if (!r.text.empty() && r.text.front() == '{') r.out = json::parse(r.text);
  return r;
}

std::string fixture(const std::string& name) { return std::string(EQUIBRAUER_SOURCE_DIR) + "/scenarios/" + name; }

std::string write_temp(const std::string& name, const json& j) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << j.dump();
  return path;
}

json error_of(const Run& r) { return json::parse(r.err).at("error"); }

}  // namespace

TEST(Cli, PiOnConjugationScenario) {
  auto r = run({"pi", "--scenario", fixture("m2_conjugation.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto& d = r.out.at("body").at("details");
  EXPECT_EQ(d.at("class"), "nontrivial");
  EXPECT_EQ(d.at("cocycle")[1][1], 3);
  EXPECT_EQ(d.at("strongly_inner"), false);
}

TEST(Cli, H2OfC2OverGF5) {
  auto r = run({"h2", "--scenario", fixture("h2_c2_gf5.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.at("body").at("details").at("invariant_factors"), json::array({2}));
}

TEST(Cli, VerifySequenceBundledCorpus) {
  auto r = run({"verify-sequence", "--corpus", "C2-GF5"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& [clause, ok] : r.out.at("body").at("verdicts").items()) EXPECT_TRUE(ok.get<bool>()) << clause;
  auto s = run({"verify-sequence", "--scenario", fixture("bundled_c2_gf5.json")});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.out.at("body").at("verdicts"), r.out.at("body").at("verdicts"));
}

TEST(Cli, CorruptedStructureConstantsExitTwoWithWitness) {
  auto r = run({"check-azumaya", "--scenario", fixture("corrupted_sc.json")});
  EXPECT_EQ(r.code, 2);
  auto e = error_of(r);
  EXPECT_EQ(e.at("block"), "algebra");
  EXPECT_EQ(e.at("witness"), json::array({1, 0, 1}));
}

TEST(Cli, ErrorsCarryBlockLocations) {
  json base{{"schema", 1}, {"ring", "GF(5)"}, {"group", "C2"}, {"algebra", {{"matrix", 2}}}};
  json bad_action = base;
  bad_action["action"] = {{"1", json::array({json::array({1, 0}), json::array({0, 1})})}};
  auto r = run({"pi", "--scenario", write_temp("bad_action.json", bad_action)});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(error_of(r).at("block"), "action");

  json bad_schema = base;
  bad_schema["schema"] = 7;
  r = run({"pi", "--scenario", write_temp("bad_schema.json", bad_schema)});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(error_of(r).at("block"), "schema");

  json bad_group = base;
  bad_group["group"] = "D4";
  r = run({"h2", "--scenario", write_temp("bad_group.json", bad_group)});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(error_of(r).at("block"), "group");

  // the transpose is not an automorphism of M2
  json manifest{{"schema", 1}, {"ring", "GF(5)"}, {"group", "C2"},
                {"corpus",
                 {{"algebras", json::array({{{"name", "M2"},
                                             {"algebra", {{"matrix", 2}}},
                                             {"action", {{"1", {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}}}}}})}}}};
  r = run({"verify-sequence", "--scenario", write_temp("bad_manifest.json", manifest)});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(error_of(r).at("block"), "corpus.algebras[0].action");

  r = run({"pi", "--scenario", "/nonexistent/scenario.json"});
  EXPECT_EQ(r.code, 2);
  r = run({"no-such-command"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, CapsAreEnforced) {
  json j{{"schema", 1}, {"ring", "GF(5)"}, {"algebra", {{"matrix", 3}}}};
  const auto path = write_temp("m3.json", j);
  auto r = run({"check-azumaya", "--scenario", path, "--max-dim", "4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(error_of(r).at("message").get<std::string>().find("--max-dim"), std::string::npos);
  EXPECT_EQ(run({"check-azumaya", "--scenario", path}).code, 0);
  json g{{"schema", 1}, {"ring", "GF(5)"}, {"group", "C5"}};
  EXPECT_EQ(run({"h2", "--scenario", write_temp("c5.json", g), "--max-group", "4"}).code, 2);
}

TEST(Cli, ReportsAreDeterministic) {
  auto a = run({"pi", "--scenario", fixture("m2_diagonal.json")});
  auto b = run({"pi", "--scenario", fixture("m2_diagonal.json")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out.at("body").dump(), b.out.at("body").dump());
  EXPECT_EQ(a.out.at("body_hash"), b.out.at("body_hash"));
  EXPECT_EQ(a.out.at("body_hash"), content_hash(a.out.at("body")));
}

TEST(Cli, WitnessesReverify) {
  const std::string report = testing::TempDir() + "diag_report.json";
  auto a = run({"pi", "--scenario", fixture("m2_diagonal.json"), "--out", report});
  ASSERT_EQ(a.code, 0) << a.err;
  const auto& certs = a.out.at("body").at("certificates");
  std::set<std::string> kinds;
  for (const auto& c : certs) kinds.insert(c.at("kind").get<std::string>());
  EXPECT_EQ(kinds, (std::set<std::string>{"coboundary", "graded-iso", "inner-witness"}));
  auto v = run({"verify-witness", "--scenario", report});
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(v.out.at("body").at("details").at("count"), certs.size());

  // tampering with any certificate is caught
  for (std::size_t i = 0; i < certs.size(); ++i) {
    json c = certs[i];
    if (c.at("kind") == "coboundary") c["b"][1] = c["b"][1].get<int>() % 4 + 1;
    if (c.at("kind") == "graded-iso") c["matrix"][0][1] = 1;
    if (c.at("kind") == "inner-witness") c["f"][1]["rho1"][0][0] = 0;
    auto t = run({"verify-witness", "--scenario", write_temp("tampered.json", c)});
    EXPECT_EQ(t.code, 1) << c.at("kind");
  }
}

TEST(Cli, SplitAndSmashCertificates) {
  for (const auto& [cmd, file] : std::vector<std::pair<std::string, std::string>>{
           {"split-galois", "quadratic_x2_minus_2.json"}, {"multiplier", "nonunital_elementary.json"},
           {"cotensor", "cotensor_c2.json"}, {"check-azumaya", "m2_diagonal.json"}}) {
    const std::string report = testing::TempDir() + "r.json";
    auto r = run({cmd, "--scenario", fixture(file), "--out", report});
    ASSERT_EQ(r.code, 0) << cmd << r.err;
    EXPECT_FALSE(r.out.at("body").at("certificates").empty()) << cmd;
    EXPECT_EQ(run({"verify-witness", "--scenario", report}).code, 0) << cmd;
  }
  json triv{{"schema", 1}, {"ring", "GF(5)"}, {"group", "C3"}, {"algebra", {{"matrix", 2}}}, {"action", {{"trivial", true}}}};
  auto s = run({"smash", "--scenario", write_temp("triv.json", triv)});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_TRUE(s.out.at("body").at("verdicts").at("trivial_action_is_tensor").get<bool>());
}

TEST(Cli, MiyashitaConventionFlag) {
  auto good = run({"miyashita", "--scenario", fixture("ks3_gf7.json")});
  EXPECT_EQ(good.code, 0);
  auto bad = run({"miyashita", "--scenario", fixture("ks3_gf7.json"), "--convention", "literal"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.out.at("body").at("verdicts").at("quantum_commutative").get<bool>());
  EXPECT_EQ(run({"miyashita", "--scenario", fixture("ks3_gf7.json"), "--convention", "other"}).code, 2);
}

TEST(Cli, RationalQuaternions) {
  auto r = run({"check-azumaya", "--scenario", fixture("hamilton.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto& d = r.out.at("body").at("details");
  EXPECT_FALSE(d.at("elementary").at("elementary").get<bool>());
  EXPECT_FALSE(d.at("hilbert").at("split").get<bool>());
  json split{{"schema", 1}, {"ring", "Q"}, {"quaternion", {"1/2", "-1/2"}}};
  auto s = run({"check-azumaya", "--scenario", write_temp("q.json", split)});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_TRUE(s.out.at("body").at("details").at("elementary").at("elementary").get<bool>());
}

TEST(Cli, ManifestCorpus) {
  auto r = run({"verify-sequence", "--scenario", fixture("manifest_c2_gf5.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.at("body").at("details").at("corpus"), "small C2 manifest");
}

TEST(Cli, TextOutput) {
  auto r = run({"h2", "--scenario", fixture("h2_c2_gf5.json"), "--text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.text.rfind("h2: PASS", 0), 0u);
  EXPECT_NE(r.text.find("invariant_factors = [2]"), std::string::npos);
}
