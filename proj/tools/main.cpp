// orthograph: enumerate, classify and verify orthomorphism graphs of small groups.
//
//   orthograph enumerate --group z2xz4 --format cycles
//   orthograph graph --group z2xz4 --format dot --out orth.dot
//   orthograph verify --group z2xz4

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ortho/cli.hpp"

int main(int argc, char** argv) {
  using namespace ortho::cli;

  CLI::App app{"Orthomorphisms and orthomorphism graphs of small finite groups"};
  std::string command;
  std::string format = "text";
  RunConfig config;

  app.add_option("command", command, "enumerate | classify | graph | clique | verify | latin")
      ->required()
      ->check(CLI::IsMember({"enumerate", "classify", "graph", "clique", "verify", "latin"}));
  app.add_option("--group", config.group_spec, "cyclic:N, product:cyclic:A,cyclic:B, z2xz4 or klein")
      ->required();
  app.add_option("--format", format, "text | json | dot | cycles")
      ->check(CLI::IsMember({"text", "json", "dot", "cycles"}));
  app.add_option("--out", config.output_path, "write output to this file");
  app.add_option("--max-order", config.max_order, "largest group order to enumerate")
      ->capture_default_str();
  app.add_option("--jobs", config.jobs, "worker threads (0 = all cores)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  config.command = *parse_command(command);
  config.format = *parse_format(format);
  return run(config, std::cout, std::cerr);
}
