#include <iostream>

#include "CLI11.hpp"
#include "edgering/cli.hpp"

int main(int argc, char** argv) {
  using namespace edgering;
  CLI::App app{"Normality of edge rings of mixed signed, directed graphs"};
  std::string command;
  std::string file;
  std::string cycle1, cycle2;
  std::uint64_t seed = 0;
  RunConfig cfg;

  app.add_option("command", command,
                 "decide | normalize | witness | cycles | connect | augment | oracle | verify")
      ->required();
  app.add_option("file", file, "graph or monomial file (stdin when omitted)");
  app.add_flag("--monomials", cfg.monomials, "input is a list of monomials");
  app.add_flag("--json", cfg.json, "machine-readable output");
  app.add_flag("--odd-only", cfg.odd_only, "cycles: only odd cycles");
  app.add_option("--cycle-cap", cfg.cycle_cap, "maximum number of cycles to enumerate");
  app.add_option("--degree-bound", cfg.degree_bound, "oracle window: max l1 norm");
  app.add_option("--coeff-cap", cfg.coeff_cap, "oracle: max total coefficient (0 = per-vector default)");
  auto* seed_opt = app.add_option("--seed", seed, "use a seeded random graph as input");
  app.add_option("--cycle1", cycle1, "connect: first cycle as a vertex list, e.g. 1,2,3");
  app.add_option("--cycle2", cycle2, "connect: second cycle as a vertex list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto cmd = parse_command(command);
  if (!cmd) {
    std::cerr << "error: unknown command `" << command << "`\n";
    return kExitUsage;
  }
  cfg.command = *cmd;
  if (!file.empty() && file != "-") cfg.input_path = file;
  if (*seed_opt) cfg.seed = seed;
  try {
    if (!cycle1.empty()) cfg.cycle1 = parse_vertex_list(cycle1);
    if (!cycle2.empty()) cfg.cycle2 = parse_vertex_list(cycle2);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(cfg, std::cin, std::cout, std::cerr);
}
