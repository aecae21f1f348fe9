#include "monores/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  monores::RunConfig cfg;
  CLI::App app{"Poincare series, denominators and resolutions for monomial ideals"};
  app.require_subcommand(1);
  std::string format = "table";
  const std::map<std::string, std::string> about{
      {"q", "denominator Q_R of the Poincare series"},
      {"poincare", "truncated Poincare series P_R and the minimal resolution of k"},
      {"deviations", "multigraded deviations of R"},
      {"candidates", "candidate terms of Q from generator subsets"},
      {"verify-lcm", "check that Q is supported on the lcm lattice"},
      {"taylor", "Taylor resolution of S/I"},
      {"scarf", "Scarf complex of I"},
      {"koszul", "Koszul complex and its homology"},
      {"betti", "multigraded Betti numbers of k over R"},
      {"golod", "Golod certificate up to a t-degree"},
      {"golod-generic", "combinatorial Golod test for generic ideals"},
      {"eagon", "Eagon resolution of k for generic ideals"},
      {"lattice-iso", "lcm-lattice isomorphisms between two ideals"},
      {"polarize", "polarization and its lattice map"},
  };
  for (const auto& name : monores::subcommands()) {
    const auto it = about.find(name);
    auto* sub = app.add_subcommand(name, it == about.end() ? "" : it->second);
    sub->add_option("inputs", cfg.inputs, "ideal file(s) in JSON")->required();
    sub->add_option("--tmax", cfg.tmax, "t-degree bound");
    sub->add_option("--nmax", cfg.nmax, "largest deviation index");
    sub->add_option("--imax", cfg.imax, "top homological degree of the Eagon resolution");
    sub->add_option("--tdeg", cfg.tdeg, "t-degree bound for transported denominators");
    sub->add_flag("--transport", cfg.transport, "transport denominators along each isomorphism");
    sub->add_option("--over", cfg.over, "koszul: ring R (= S/I) or S")->check(CLI::IsMember({"R", "S"}));
    sub->add_flag("--check", cfg.check, "run the invariant checks; exit 1 on a violation");
    sub->add_option("--char", cfg.characteristic, "field characteristic (0 or a prime)");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_flag_callback("--json", [&] { format = "json"; }, "same as --format json");
    sub->add_option("--jobs", cfg.jobs, "threads for per-multidegree homology");
    sub->callback([&cfg, name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return monores::kExitInputError;
  }
  cfg.format = format == "json" ? monores::OutputFormat::json : monores::OutputFormat::table;
  return monores::run(cfg, std::cout, std::cerr);
}
