// Command-line front end: parses a workspace file, runs one check command
// and prints the report. Exit codes: 0 all pass, 1 counterexample found,
// 2 inconclusive (Unknown verdicts, no failure), 3 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "piref/cli/commands.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"checkers for logics, translations and refinements over "
               "pi-institutions"};
  app.require_subcommand(0, 0);

  std::string workspace_path;
  std::string command;
  std::vector<std::string> args;
  piref::cli::RunOptions options;

  app.add_option("command", command, "one of: check-closure, check-naturality, "
                 "check-interpretation, check-semi, check-refinement, "
                 "check-syntactic, check-sub, check-local, "
                 "check-local-interpretation, check-conservative, "
                 "check-structural, eval, normalize")
      ->required();
  app.add_option("args", args, "command arguments (names from the workspace)");
  app.add_option("-w,--workspace", workspace_path, "workspace file")
      ->required();
  app.add_option("--seed", options.seed, "corpus seed");
  app.add_option("--size", options.size, "corpus size");
  app.add_option("--depth", options.depth, "sentence depth bound");
  app.add_option("--budget", options.budget, "oracle resource bound");
  app.add_option("--via", options.via, "translation witnessing the check");
  app.add_option("--interpretant", options.interpretant,
                 "candidate interpretant institution");
  app.add_option("--witness", options.witness,
                 "specification discharging an interpretation premise");
  app.add_option("--corpus", options.corpus_name, "named corpus from the "
                 "workspace");
  app.add_option("--report", options.report_path, "write the JSON report "
                 "here");
  app.add_flag("--no-timestamp", options.no_timestamp,
               "omit the timestamp line for byte-stable reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  std::ifstream in(workspace_path);
  if (!in) {
    std::cerr << "error: cannot open workspace '" << workspace_path << "'\n";
    return 3;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  piref::cli::ParseResult parsed =
      piref::cli::parse_workspace(buffer.str());
  if (!parsed.ok()) {
    for (const piref::cli::Diagnostic& d : parsed.diagnostics)
      std::cerr << workspace_path << ":" << piref::cli::to_string(d) << "\n";
    return 3;
  }

  try {
    piref::cli::RunResult result =
        piref::cli::run_command(parsed.workspace, command, args, options);
    std::cout << result.text;
    if (!options.report_path.empty()) {
      std::ofstream out(options.report_path);
      if (!out) {
        std::cerr << "error: cannot write report to '" << options.report_path
                  << "'\n";
        return 3;
      }
      out << result.json.dump(2) << "\n";
    }
    return result.exit_code;
  } catch (const piref::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
