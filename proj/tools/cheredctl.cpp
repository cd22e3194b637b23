#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chered/config.hpp"
#include "chered/report.hpp"

namespace {

int run(const std::string& verb, const std::string& config_path, const std::string& out_path,
        long seed, double tol, int degree) {
  std::ifstream in(config_path);
  if (!in) {
    std::fprintf(stderr, "cheredctl: cannot open config '%s'\n", config_path.c_str());
    return 2;
  }
  std::stringstream ss;
  ss << in.rdbuf();

  try {
    chered::RunConfig cfg = chered::parse_config(ss.str());
    if (seed >= 0) cfg.seed = static_cast<unsigned long>(seed);
    if (tol > 0) cfg.tol = tol;
    if (degree >= 0) cfg.degree = static_cast<unsigned>(degree);

    const auto suites = chered::run_suites(cfg, verb);
    std::fputs(chered::report_human(suites).c_str(), stdout);

    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) {
        std::fprintf(stderr, "cheredctl: cannot write report '%s'\n", out_path.c_str());
        return 2;
      }
      out << chered::report_json(cfg, verb, suites);
    }

    for (const auto& s : suites)
      if (!s.all_pass()) return 1;
    return 0;
  } catch (const chered::ConfigError& e) {
    std::fprintf(stderr, "cheredctl: config error: %s\n", e.what());
    return 2;
  } catch (const chered::Error& e) {
    std::fprintf(stderr, "cheredctl: %s\n", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for rational Cherednik algebra structures"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  long seed = -1;
  double tol = -1;
  int degree = -1;

  app.add_option("--config", config_path, "run configuration file")->required();
  app.add_option("--out", out_path, "write a JSON report to this path");
  app.add_option("--seed", seed, "override the random seed");
  app.add_option("--tol", tol, "override the numerical tolerance");
  app.add_option("--degree", degree, "override the polynomial degree cap");

  static const char* kVerbs[] = {"group", "lattice", "dunkl", "pbw", "modules", "monodromy", "all"};
  static const char* kHelp[] = {
      "group construction, reflections, projector identities",
      "subgroup lattice, Moebius inversion, dimension counts",
      "Dunkl operator commutativity and equivariance",
      "normal ordering: confluence and triangular bases",
      "simple modules, central scalars, Euler grading",
      "numerical monodromy of the KZ connection",
      "every suite in order",
  };
  for (std::size_t i = 0; i < std::size(kVerbs); ++i)
    app.add_subcommand(kVerbs[i], kHelp[i])->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string verb = app.get_subcommands().front()->get_name();
  return run(verb, config_path, out_path, seed, tol, degree);
}
