// bethe-lab: run identity checks at seeded rational points and report.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bethe/errors.hpp"
#include "bethe/harness.hpp"

int main(int argc, char** argv) {
  using namespace bethe;
  CLI::App app{"Exact identity checks for the O(N) off-shell Bethe ansatz"};
  app.require_subcommand(1);
  CLI::App* check = app.add_subcommand("check", "run a check suite");

  SuiteConfig cfg;
  std::string config_path;
  check->add_option("--config", config_path, "JSON file with config keys; command-line options override it");
  check->add_option("--suite", cfg.suite, "rmatrix, monodromy, pi, bethe, weights, o3, o4 or all");
  check->add_option("--N", cfg.N, "O(N) rank");
  check->add_option("--n", cfg.n, "number of quantum sites");
  check->add_option("--m", cfg.m, "number of creation parameters");
  check->add_option("--seed", cfg.seed, "64-bit seed");
  check->add_option("--samples", cfg.samples, "points per check");
  check->add_option("--precision", cfg.precision, "decimal digits for precision checks");
  check->add_option("--out", cfg.out, "write the JSON report here (stdout when absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw ConfigError("cannot read config file " + config_path);
      nlohmann::json j;
      try {
        f >> j;
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config file is not JSON: ") + e.what());
      }
      SuiteConfig base = SuiteConfig::from_json(j);
      // explicit options win over the file
      for (const char* name : {"--suite", "--N", "--n", "--m", "--seed", "--samples", "--precision", "--out"}) {
        if (check->count(name)) continue;
        std::string k = std::string(name).substr(2);
        if (k == "suite") cfg.suite = base.suite;
        else if (k == "N") cfg.N = base.N;
        else if (k == "n") cfg.n = base.n;
        else if (k == "m") cfg.m = base.m;
        else if (k == "seed") cfg.seed = base.seed;
        else if (k == "samples") cfg.samples = base.samples;
        else if (k == "precision") cfg.precision = base.precision;
        else if (k == "out") cfg.out = base.out;
      }
    }
    std::vector<CheckReport> reports = run_suite(cfg);
    nlohmann::json report = report_json(cfg, reports);
    if (cfg.out.empty())
      std::cout << report.dump(2) << "\n";
    else
      write_report(report, cfg.out);
    for (const auto& r : reports)
      std::cerr << (r.passed == r.attempted ? "PASS " : "FAIL ") << r.name << "  " << r.passed << "/" << r.attempted
                << "  max residual " << r.max_residual << "\n";
    return exit_code(reports);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const SamplingExhausted& e) {
    std::cerr << "sampling error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
