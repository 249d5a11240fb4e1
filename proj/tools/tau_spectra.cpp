// tau-spectra: operational Tau solver front end.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tau/commands.hpp"

int main(int argc, char** argv) {
  using namespace tau::cli;

  CLI::App app{"Operational Tau method with recurrence-built operational matrices"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  auto* solve = app.add_subcommand("solve", "Solve a problem described by a JSON config");
  solve->add_option("config", config_path, "Problem config (JSON)")->required();
  solve->add_option("-o,--output", out_path, "Output CSV")->required();

  std::vector<std::size_t> degrees;
  std::size_t reference_degree = 600;
  auto* table1 = app.add_subcommand("table1", "Turning-point problem, epsilon = 1e-5");
  table1->add_option("-o,--output", out_path, "Output CSV")->required();
  table1->add_option("--degrees", degrees, "Override the degree columns")->delimiter(',');
  table1->add_option("--reference-degree", reference_degree,
                     "Degree of the Legendre-Tau solution used as reference");
  auto* table2 = app.add_subcommand("table2", "Volterra problem, a = 1.25");
  table2->add_option("-o,--output", out_path, "Output CSV")->required();
  table2->add_option("--degrees", degrees, "Override the degree columns")->delimiter(',');

  unsigned order = 10;
  auto* bessel = app.add_subcommand("bessel", "Bessel boundary-value problem in the Laguerre basis");
  bessel->add_option("-m,--order", order, "Bessel order m");
  bessel->add_option("-o,--output", out_path, "Output directory")->required();
  bessel->add_option("--degrees", degrees, "Tau degrees (ascending)")->delimiter(',');

  std::string basis_spec = "legendre";
  std::string kind = "derivative";
  std::size_t size = 10;
  double lower = -1.0;
  auto* opmatrix = app.add_subcommand("opmatrix", "Dump an operational matrix as CSV triplets");
  opmatrix->add_option("--basis", basis_spec, "jacobi:A,B | legendre | chebyshev | laguerre");
  opmatrix
      ->add_option("--kind", kind,
                   "shift | derivative | integral | volterra | change-of-basis | "
                   "power-shift | power-derivative | power-integral | power-volterra")
      ->required();
  opmatrix->add_option("--size", size, "Matrix size");
  opmatrix->add_option("--lower", lower, "Lower limit for volterra kinds");
  opmatrix->add_option("-o,--output", out_path, "Output CSV")->required();

  std::size_t degree = 100;
  auto* demo = app.add_subcommand("condition-demo",
                                  "Compare recurrence- and similarity-built matrices");
  demo->add_option("-n,--degree", degree, "Tau degree (>= 10)");
  demo->add_option("-o,--output", out_path, "Optional CSV summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }

  if (*solve) return cmd_solve(config_path, out_path, std::cout, std::cerr);
  if (*table1) {
    return cmd_table(Table::One, out_path, {degrees, reference_degree}, std::cout, std::cerr);
  }
  if (*table2) return cmd_table(Table::Two, out_path, {degrees, 600}, std::cout, std::cerr);
  if (*bessel) {
    if (degrees.empty()) degrees = {500, 1000, 1500, 2000};
    return cmd_bessel(order, degrees, out_path, std::cout, std::cerr);
  }
  if (*opmatrix) return cmd_opmatrix(basis_spec, kind, size, lower, out_path, std::cout, std::cerr);
  if (*demo) return cmd_condition_demo(degree, out_path, std::cout, std::cerr);
  return kConfigError;
}
