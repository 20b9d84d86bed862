#include <iostream>

#include "CLI11.hpp"
#include "krc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"affine crystals B~(2,s) of type D_n(1): build, verify, energies"};
  app.fallthrough();

  krc::RunConfig config;
  app.add_option("--command", config.command,
                 "build|verify|bc-graph|rmatrix|energy|xsum|example "
                 "(alternative to the subcommand form)");
  app.add_option("--n", config.n, "rank of D_n (n >= 4)");
  app.add_option("--s", config.s, "width parameter s >= 1");
  app.add_option("--out", config.out, "output file (default stdout)");
  app.add_option("--budget", config.budget, "vertex/pair budget");
  app.add_option("--format", config.format, "json|dot");
  app.add_option("--factors", config.factors, "tensor length L (xsum)");
  app.add_option("--lambda", config.lambda,
                 "weight: 'k'w2 shorthand or comma-separated coefficients (xsum)");
  app.add_option("--id", config.example_id,
                 "signature|dual|drop|fill|lecouvey-iota (example; default all)");

  for (const char* name :
       {"build", "verify", "bc-graph", "rmatrix", "energy", "xsum", "example"})
    app.add_subcommand(name);

  CLI11_PARSE(app, argc, argv);
  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (config.command.empty()) {
    std::cerr << "{\"error\":\"no command given; use a subcommand or --command\"}\n";
    return 2;
  }
  return krc::run(config, std::cout, std::cerr);
}
