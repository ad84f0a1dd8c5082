#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "crtube/errors.hpp"

int main(int argc, char** argv) {
  using crtube::cli::RunConfig;
  RunConfig cfg;
  std::string backend = "auto";

  CLI::App app{"CR geometry of tube manifolds over cones and orbits"};
  app.require_subcommand(1);
  app.add_option("--backend", backend, "auto, exact-levelset, exact-jet or numeric")
      ->check(CLI::IsMember({"auto", "exact-levelset", "exact-jet", "numeric"}));
  app.add_option("--tol", cfg.tol, "relative tolerance for numeric decisions");
  app.add_option("--max-degree", cfg.max_degree, "largest grading degree the solver may reach");
  app.add_option("--max-k", cfg.max_k, "kernel chain length (default n)");
  app.add_option("--seed", cfg.seed, "sampling seed");
  app.add_flag("--json", cfg.json, "emit a JSON report");

  auto* analyze = app.add_subcommand("analyze", "tangent space, Levi kernel, minimality, nondegeneracy order");
  analyze->add_option("file", cfg.inputs, "presentation JSON")->required()->expected(1);

  auto* hol = app.add_subcommand("hol", "graded algebra of infinitesimal automorphisms");
  hol->add_option("file", cfg.inputs, "presentation JSON")->required()->expected(1);

  auto* compare = app.add_subcommand("compare", "compare invariants of two computed algebras");
  compare->add_option("files", cfg.inputs, "two presentation JSON files")->required()->expected(2);

  auto* endo = app.add_subcommand("endocone", "cone generated by 1, phi, ..., phi^d through a");
  endo->add_option("--phi", cfg.phi_path, "JSON matrix file")->required();
  endo->add_option("--d", cfg.d, "highest power of phi")->required();
  endo->add_option("--a", cfg.a, "base point, comma separated")->required();

  auto* cat = app.add_subcommand("catalog", "built-in examples");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "list shipped entries");
  auto* run = cat->add_subcommand("run", "run one entry, e.g. EY(1/2) or EB --p 2 --q 1 --alpha 3");
  run->add_option("name", cfg.inputs, "entry name")->required()->expected(1);
  run->add_option("--p", cfg.p, "EB: number of plus signs");
  run->add_option("--q", cfg.q, "EB: number of minus signs");
  run->add_option("--alpha", cfg.alpha, "exponent or eigenvalue parameter");
  auto* run_all = cat->add_subcommand("run-all", "run every shipped entry");

  for (auto* sub : {analyze, hol, compare, endo, cat, list, run, run_all}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.backend = crtube::parse_backend(backend);
  } catch (const crtube::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "catalog") cfg.subcommand = cat->get_subcommands().front()->get_name();
  return static_cast<int>(crtube::cli::run(cfg, std::cout, std::cerr));
}
