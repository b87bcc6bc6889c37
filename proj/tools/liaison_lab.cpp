// liaison-lab: run the residuation verifiers or inspect a point configuration.
//
//   liaison-lab run --suite triangular --r-min 3 --r-max 6 --trials 20 --seed 42 --format json --out report.json
//   liaison-lab betti --points pts.json --dmax 5

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "llab/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Residuation experiments for point schemes in the projective plane"};
  app.require_subcommand(1);

  llab::RunConfig config;
  std::string suite = "all", format = "text", out_path;
  int r_min = 0, r_max = 0;
  auto* run = app.add_subcommand("run", "Run verification suites");
  run->add_option("--suite", suite, "triangular | tangential | identities | all");
  auto* r_min_opt = run->add_option("--r-min", r_min, "Smallest r");
  auto* r_max_opt = run->add_option("--r-max", r_max, "Largest r");
  run->add_option("--trials", config.trials, "Trials per (theorem, r)");
  run->add_option("--prime", config.prime, "Field characteristic");
  run->add_option("--seed", config.seed, "Base seed");
  run->add_option("--format", format, "text | json");
  run->add_option("--out", out_path, "Write the report to this file");
  run->add_option("--jobs", config.jobs, "Worker threads for trials");

  std::string points_path;
  int d_max = 0;
  std::uint32_t betti_prime = llab::PrimeField::kDefaultPrime;
  auto* betti = app.add_subcommand("betti", "Betti table and Hilbert profile of a point set");
  betti->add_option("--points", points_path, "JSON array of [x, y, z] integer triples")->required();
  betti->add_option("--dmax", d_max, "Largest degree examined")->required();
  betti->add_option("--prime", betti_prime, "Field characteristic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*betti) return llab::betti_command(points_path, d_max, betti_prime, std::cout, std::cerr);

  llab::RunReport report;
  try {
    config.suite = llab::parse_suite(suite);
    config.format = llab::parse_format(format);
    if (*r_min_opt) config.r_min = r_min;
    if (*r_max_opt) config.r_max = r_max;
    if (!out_path.empty()) config.output_path = out_path;
    report = llab::run_suite(config);
  } catch (const llab::Error& e) {
    report.config = config;
    report.error = e;
  }

  const std::string rendered =
      config.format == llab::Format::Json ? llab::to_json(report).dump(2) + "\n" : llab::to_text(report);
  if (config.output_path) {
    std::ofstream out(*config.output_path);
    if (!out) {
      std::cerr << "error: cannot write " << *config.output_path << "\n";
      return 2;
    }
    out << rendered;
  } else {
    std::cout << rendered;
  }
  if (report.error) std::cerr << "error: " << report.error->what() << "\n";
  return llab::exit_code(report);
}
