#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "minrank/cli.hpp"

namespace cli = minrank::cli;

int main(int argc, char** argv) {
  CLI::App app{"Spherical pairs of minimal rank: classification and orbit models"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  cfg.budget = cli::default_budget();
  const std::map<std::string, cli::Format> formats{
      {"json", cli::Format::json}, {"dot", cli::Format::dot}, {"text", cli::Format::text}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out, "Write output to PATH");
    sub->add_option("--budget", cfg.budget, "Maximum group size to enumerate (env MINRANK_BUDGET)")
        ->check(CLI::PositiveNumber);
  };

  auto* classify = app.add_subcommand("classify", "Classify pairs up to a rank");
  classify->add_option("--max-rank", cfg.max_rank, "Largest rank of D_g (D_h for diagonal pairs)")->required();
  classify->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  common(classify);

  auto* verify = app.add_subcommand("verify", "Check the orbit model of one pair");
  auto* graph = app.add_subcommand("graph", "Export the orbit graph of one pair");
  auto* poincare = app.add_subcommand("poincare", "Print P_G, P_H and Q for one pair");
  for (auto* sub : {verify, graph, poincare}) {
    sub->add_option("--pair", cfg.pair, "Pair selector: A5_C3, identity:A2, diag:G2 or a JSON spec")->required();
    common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  if (app.got_subcommand(classify)) cfg.command = cli::Command::classify;
  else if (app.got_subcommand(verify)) cfg.command = cli::Command::verify;
  else if (app.got_subcommand(graph)) cfg.command = cli::Command::graph;
  else cfg.command = cli::Command::poincare;

  return cli::run(cfg, std::cout, std::cerr);
}
