#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "chered/config.hpp"
#include "chered/report.hpp"

using namespace chered;

TEST_CASE("a full configuration round-trips") {
  const std::string text = R"(# full S3 run
[group]
preset = S3

[params]
orbit0 = 0, 1/2

[monodromy]
orbit0 = 0, 0.1 + 0.2i

degree = 4
tol = 1e-9
seed = 7
)";
  const RunConfig cfg = parse_config(text);
  CHECK(cfg.preset == "S3");
  CHECK(cfg.degree == 4);
  CHECK(cfg.tol == 1e-9);
  CHECK(cfg.seed == 7);

  const ReflectionGroup W = cfg.build_group();
  CHECK(W.size() == 6);
  const ParameterSet k = cfg.exact_params(W);
  REQUIRE(k.by_orbit.size() == 1);
  CHECK(k.by_orbit[0] == std::vector<Rational>{Rational(0), Rational(1, 2)});
  const ComplexParams ck = cfg.complex_params(W);
  CHECK(std::abs(ck.by_orbit[0][1] - Complex(0.1, 0.2)) < 1e-15);
}

TEST_CASE("per-hyperplane keys fold into orbits") {
  const std::string text = R"([group]
preset = B2
[params]
h0 = 0, 1/3
h1 = 0, -2/5
h2 = 0, -2/5
)";
  const RunConfig cfg = parse_config(text);
  const ReflectionGroup W = cfg.build_group();
  const ParameterSet k = cfg.exact_params(W);
  REQUIRE(k.by_orbit.size() == 2);
  const int orbit0 = W.hyperplanes()[0].orbit;
  const int orbit1 = W.hyperplanes()[1].orbit;
  REQUIRE(orbit0 != orbit1);
  CHECK(k.by_orbit[orbit0][1] == Rational(1, 3));
  CHECK(k.by_orbit[orbit1][1] == Rational(-2, 5));
}

TEST_CASE("inconsistent orbit values are rejected with the colliding line") {
  const std::string text = "[group]\npreset = S3\n[params]\nh0 = 0, 1/2\nh1 = 0, 1/3\n";
  const RunConfig cfg = parse_config(text);
  const ReflectionGroup W = cfg.build_group();
  try {
    cfg.exact_params(W);
    FAIL("expected a configuration error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("orbit") != std::string::npos);
    CHECK(e.line == 5);
  }
}

TEST_CASE("generator matrices define the group directly") {
  const RunConfig cfg =
      parse_config("[group]\ngenerator = [0, 1; 1, 0]\ngenerator = [1, 0; 0, -1]\n");
  const ReflectionGroup W = cfg.build_group();
  CHECK(W.size() == 8);
  CHECK(W.reflections().size() == 4);

  const RunConfig cyc = parse_config("[group]\ngenerator = [c(3; 0, 1)]\n");
  CHECK(cyc.build_group().size() == 3);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_config("[group]\npreset = S3\n[params]\norbit0 = 0, c(3; 1\n");
    FAIL("expected a configuration error");
  } catch (const ConfigError& e) {
    CHECK(e.line == 4);
  }

  CHECK_THROWS_AS(parse_config("[bogus]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("degree = 3\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[group]\npreset = S3\ngenerator = [1]\n"), ConfigError);
}

TEST_CASE("auxiliary sections parse") {
  const RunConfig w0 = parse_config("[group]\npreset = S3\n[w0]\nhyperplanes = 0\n");
  CHECK(w0.w0_hyperplanes == std::vector<int>{0});

  const RunConfig fx = parse_config(
      "[group]\npreset = S3\n[irreps.refl]\ngenerator = [0,1;1,0]\ngenerator = [1,0;0,-1]\n");
  REQUIRE(fx.irrep_fixtures.count("refl") == 1);
  CHECK(fx.irrep_fixtures.at("refl").size() == 2);

  const RunConfig cplx =
      parse_config("[group]\npreset = S3\n[monodromy]\norbit0 = -i, 1e-2 - 0.25i\n");
  const ComplexParams ck = cplx.complex_params(cplx.build_group());
  CHECK(std::abs(ck.by_orbit[0][0] - Complex(0, -1)) < 1e-15);
  CHECK(std::abs(ck.by_orbit[0][1] - Complex(0.01, -0.25)) < 1e-15);
}

TEST_CASE("suites run green on the bundled S3 configuration") {
  const std::string text =
      "[group]\npreset = S3\n[params]\norbit0 = 0, 1/2\n"
      "[monodromy]\norbit0 = 0, 0.11 - 0.07i\nseed = 1\n";
  const RunConfig cfg = parse_config(text);

  const auto suites = run_suites(cfg, "group");
  REQUIRE(suites.size() == 1);
  CHECK(suites[0].suite == "group");
  CHECK(suites[0].all_pass());

  CHECK_THROWS_AS(run_suites(cfg, "bogus-verb"), ConfigError);
}

TEST_CASE("reports are valid deterministic JSON") {
  const std::string text =
      "[group]\npreset = G(3,1,1)\n[params]\norbit0 = 0, 1/5, -1/7\n"
      "[monodromy]\norbit0 = 0, 0.13 - 0.04i, -0.08 + 0.06i\nseed = 3\n";
  const RunConfig cfg = parse_config(text);

  const auto s1 = run_suites(cfg, "all");
  const auto s2 = run_suites(cfg, "all");
  const std::string j1 = report_json(cfg, "all", s1);
  const std::string j2 = report_json(cfg, "all", s2);
  CHECK(j1 == j2);

  const nlohmann::json doc = nlohmann::json::parse(j1);
  CHECK(doc.at("tool") == "cheredctl");
  CHECK(doc.at("verb") == "all");
  CHECK(doc.at("pass").is_boolean());
  CHECK(doc.at("config").at("group") == "G(3,1,1)");
  REQUIRE(doc.at("suites").is_array());
  CHECK(doc.at("suites").size() == 6);
  for (const auto& suite : doc.at("suites")) {
    CHECK(suite.at("checks").is_array());
    for (const auto& check : suite.at("checks")) {
      CHECK(check.contains("name"));
      CHECK(check.contains("claim"));
      CHECK(check.contains("pass"));
    }
  }
}

#ifdef CHEREDCTL_PATH

namespace {

int run_cli(const std::string& args) {
  const int status = std::system((std::string(CHEREDCTL_PATH) + " " + args).c_str());
  REQUIRE(status >= 0);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("command line contract: exit codes and report files") {
  const std::string dir = CONFIG_DIR;

  CHECK(run_cli("group --config " + dir + "/s3.cfg >/dev/null") == 0);
  CHECK(run_cli("all --config " + dir + "/g311.cfg --out cli_report.json >/dev/null") == 0);

  std::ifstream in("cli_report.json");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  const nlohmann::json doc = nlohmann::json::parse(ss.str());
  CHECK(doc.at("pass") == true);

  // An impossible tolerance makes numeric checks fail: exit 1.
  CHECK(run_cli("monodromy --config " + dir + "/g311.cfg --tol 1e-30 >/dev/null") == 1);

  // Unreadable or malformed configuration: exit 2.
  CHECK(run_cli("all --config " + dir + "/no_such_file.cfg 2>/dev/null") == 2);
  CHECK(run_cli("all 2>/dev/null") == 2);
  CHECK(run_cli("2>/dev/null") == 2);
}

#endif
