#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hochbv/commands.hpp"

using namespace hochbv;

int main(int argc, char** argv) {
  CLI::App app{"Hochschild homology, BV structures and duality checks for group algebras"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string group_path, spec_path, out_path;

  auto common = [&](CLI::App* sub, bool group, bool spec) {
    if (group) sub->add_option("--group", group_path, "group definition file (JSON)")->required();
    if (spec) sub->add_option("--spec", spec_path, "graded algebra spec file (JSON)")->required();
    sub->add_option("--ring", cfg.ring, "scalar ring: z, q or f<p>");
    sub->add_option("--max-degree", cfg.max_degree, "highest degree computed");
    sub->add_option("--trunc-k", cfg.trunc_k, "monomial exponent bound for Z^d");
    sub->add_option("--out", out_path, "write the JSON report here");
    sub->add_option("--jobs", cfg.jobs, "worker threads");
    sub->add_flag("--allow-slow", cfg.allow_slow, "allow ranks above 2");
  };
  common(app.add_subcommand("compute", "HH_* and HH^* of k[G]"), true, false);
  common(app.add_subcommand("bv", "duality and BV operator for Z^d"), true, false);
  common(app.add_subcommand("axioms", "BV characterizations on a graded spec"), false, true);
  common(app.add_subcommand("compare-group", "group versus Hochschild comparison squares"), true, false);
  common(app.add_subcommand("cy-check", "Calabi-Yau conditions for k[Z]"), true, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::BadInput);
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.jobs == 0) cfg.jobs = 1;

  try {
    if (!group_path.empty()) cfg.group = read_json_file(group_path);
    if (!spec_path.empty()) cfg.spec = read_json_file(spec_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return static_cast<int>(ExitCode::BadInput);
  }

  const CommandResult res = run_command(cfg);
  const std::string text = res.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return static_cast<int>(ExitCode::BadInput);
    }
    out << text;
    std::cout << render(res.report);
  }
  if (res.code != ExitCode::Ok && res.report["result"].contains("error"))
    std::cerr << res.report["result"]["error"]["message"].get<std::string>() << "\n";
  return static_cast<int>(res.code);
}
