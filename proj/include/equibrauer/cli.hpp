// Command-line front end; tools/equibrauer.cpp is a thin wrapper around cli_main.
#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selftest.hpp"

namespace equibrauer {

enum ExitCode { exit_pass = 0, exit_failed = 1, exit_input = 2 };

inline json error_json(const std::string& message, const std::string& block = "", const json& witness = nullptr) {
  json e{{"message", message}};
  if (!block.empty()) e["block"] = block;
  if (!witness.is_null()) e["witness"] = witness;
  return {{"error", e}};
}

/// args excludes the program name. Reports go to `out`, diagnostics to `err`.
inline int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of equivariant Brauer group constructions at desk scale", "equibrauer"};
  std::vector<std::string> commands = scenario_commands();
  commands.push_back("selftest");
  commands.push_back("verify-witness");
  std::string command, scenario_path, out_path, corpus, convention = "corrected";
  RunOptions opt;
  bool as_json = false, as_text = false, skip_determinism = false;
  app.add_option("command", command, "command to run")->required()->check(CLI::IsMember(commands));
  app.add_option("--scenario", scenario_path, "scenario JSON file (for verify-witness: a report or certificate file)");
  app.add_option("--corpus", corpus, "bundled corpus name, in place of --scenario")->check(CLI::IsMember({"C2-GF5", "C3-GF7"}));
  app.add_option("--out", out_path, "write the JSON report here");
  app.add_option("--max-dim", opt.caps.max_dim, "largest algebra dimension accepted from a scenario")->capture_default_str();
  app.add_option("--max-group", opt.caps.max_group, "largest group order accepted from a scenario")->capture_default_str();
  auto* j = app.add_flag("--json", as_json, "print the JSON report (default)");
  app.add_flag("--text", as_text, "print a short text summary")->excludes(j);
  app.add_option("--convention", convention, "Miyashita convention")
      ->check(CLI::IsMember({"corrected", "literal"}))
      ->capture_default_str();
  app.add_flag("--skip-determinism", skip_determinism, "selftest: skip the second run");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << error_json(e.what(), "(command line)").dump(2) << "\n";
    return exit_input;
  }
  opt.convention = parse_convention(convention);

  auto emit = [&](const Report& r, const std::string& text) {
    const json doc = r.to_json();
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) {
        err << error_json("cannot write " + out_path, "--out").dump(2) << "\n";
        return exit_input;
      }
      f << doc.dump(2) << "\n";
    }
    if (as_text)
      out << text;
    else
      out << doc.dump(2) << "\n";
    return r.pass() ? exit_pass : exit_failed;
  };

  try {
    if (command == "selftest") {
      SelftestOptions so;
      so.convention = opt.convention;
      so.determinism = !skip_determinism;
      auto st = run_selftest(so);
      return emit(st.report, scoreboard(st.criteria) + "selftest: " + (st.report.pass() ? "PASS" : "FAIL") + "\n");
    }
    if (scenario_path.empty() && corpus.empty())
      throw ScenarioError("(command line)", command + " needs --scenario <path> or --corpus <name>");
    json doc = corpus.empty() ? load_json_file(scenario_path) : json{{"schema", schema_version}, {"corpus", corpus}};
    Report r = command == "verify-witness" ? run_verify_witness(doc, opt) : run_command(command, doc, opt);
    const json full = r.to_json();
    return emit(r, render_text(full));
  } catch (const ScenarioError& e) {
    err << error_json(e.what(), e.block(), e.witness()).dump(2) << "\n";
    return exit_input;
  } catch (const InputError& e) {
    err << error_json(e.what()).dump(2) << "\n";
    return exit_input;
  } catch (const Error& e) {
    err << error_json(std::string("verification failed: ") + e.what()).dump(2) << "\n";
    return exit_failed;
  }
}

}  // namespace equibrauer
