#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kCli = IMETRIC_CLI_PATH;

fs::path work_dir() {
  const fs::path dir = fs::temp_directory_path() / "imetric_cli_test";
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args, const fs::path& stdout_file = {}) {
  std::string cmd = kCli + " " + args;
  if (!stdout_file.empty()) cmd += " > " + stdout_file.string();
  cmd += " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("eval prints the metric value") {
  const fs::path out = work_dir() / "eval.txt";
  CHECK(run_cli("eval --domain ball --metric W --c 1 --x 0,0 --y 0.5,0", out) == 0);
  CHECK(std::stod(slurp(out)) == doctest::Approx(0.53479999673957037).epsilon(1e-14));

  CHECK(run_cli("eval --domain halfspace --metric j --x 0,1 --y 0,3", out) == 0);
  CHECK(std::stod(slurp(out)) == doctest::Approx(std::log(3.0)).epsilon(1e-14));

  CHECK(run_cli("eval --domain ball --metric rho --x 0,0 --y 0.5,0", out) == 0);
  CHECK(std::stod(slurp(out)) == doctest::Approx(std::log(3.0)).epsilon(1e-13));

  // dimension follows the points
  CHECK(run_cli("eval --domain ball --metric j --x 0,0,0 --y 0.5,0,0", out) == 0);
  CHECK(std::stod(slurp(out)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("eval rejects outside points and bad usage") {
  CHECK(run_cli("eval --domain ball --metric j --x 0,0 --y 2,0") == 2);
  CHECK(run_cli("eval --domain ball --metric j --x 0,0") == 2);       // missing --y
  CHECK(run_cli("eval --metric nope --x 0,0 --y 0.1,0") == 2);        // bad enum
  CHECK(run_cli("nonsense") == 2);
}

TEST_CASE("verify emits byte-identical reports for identical argv and seed") {
  const fs::path a = work_dir() / "a.json";
  const fs::path b = work_dir() / "b.json";
  const std::string args = "verify --suite thm1.2 --samples 2000 --seed 7 --out ";
  CHECK(run_cli(args + a.string()) == 0);
  CHECK(run_cli(args + b.string()) == 0);
  const std::string ja = slurp(a);
  CHECK(ja == slurp(b));
  CHECK(!ja.empty());

  const auto doc = nlohmann::json::parse(ja);
  CHECK(doc["config"]["seed"] == 7);
  CHECK(doc["claims"].is_array());
  for (const auto& claim : doc["claims"]) {
    CHECK(claim["n_violations"] == 0);
    CHECK(claim.contains("claim_id"));
    CHECK(claim.contains("max_violation"));
    CHECK(claim.contains("rng_seed"));
    CHECK_FALSE(claim.contains("witness"));  // only present on violation
  }
}

TEST_CASE("verify handles suite selection and domain override") {
  CHECK(run_cli("verify --suite no-such-suite --samples 10") == 2);
  const fs::path out = work_dir() / "wax.json";
  CHECK(run_cli("verify --suite W-metric-axioms --domain ball --samples 500 --seed 3 --out " +
                out.string()) == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["config"]["domain"] == "ball2");
  CHECK(doc["claims"].size() == 4);  // one per c
}

TEST_CASE("verify runs a polygon from a JSON file") {
  const fs::path poly = work_dir() / "square.json";
  {
    std::ofstream f(poly);
    f << "[[0,0],[1,0],[1,1],[0,1]]";
  }
  const fs::path out = work_dir() / "poly_eval.txt";
  CHECK(run_cli("eval --domain polygon --domain-file " + poly.string() +
                    " --metric j --x 0.5,0.5 --y 0.5,0.25",
                out) == 0);
  // d(x) = 0.5, d(y) = 0.25, |x-y| = 0.25 -> log 2
  CHECK(std::stod(slurp(out)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

  CHECK(run_cli("verify --suite thm1.2 --domain polygon --domain-file " + poly.string() +
                " --samples 500") == 0);
  CHECK(run_cli("eval --domain polygon --metric j --x 0.5,0.5 --y 0.5,0.25") == 2);
}

TEST_CASE("counterexample subcommand") {
  const fs::path out = work_dir() / "cex.json";
  CHECK(run_cli("counterexample --c 0.5 --out " + out.string()) == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["counterexample"]["margin"].get<double>() > 1e-9);
  CHECK(doc["counterexample"]["c"] == 0.5);
  CHECK(doc["counterexample"]["x"].size() == 2);

  // no counterexample exists at c = 1
  CHECK(run_cli("counterexample --c 1.0") == 1);
}

TEST_CASE("plot emits ordered CSV curves") {
  const fs::path fig1 = work_dir() / "fig1.csv";
  CHECK(run_cli("plot fig1 --out " + fig1.string()) == 0);
  std::istringstream in(slurp(fig1));
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,lower,F,upper_first,upper_second,upper");
  int rows = 0;
  while (std::getline(in, line)) {
    double t, lower, F, u1, u2, u;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &t, &lower, &F, &u1, &u2,
                        &u) == 6);
    CHECK(lower <= F);
    CHECK(F <= std::min(u1, u2) + 1e-12);
    ++rows;
  }
  CHECK(rows == 512);
  // LF line endings only
  CHECK(slurp(fig1).find('\r') == std::string::npos);

  CHECK(run_cli("plot fig2 --c 2 --out " + (work_dir() / "fig2.csv").string()) == 0);
  CHECK(run_cli("plot fig2") == 2);  // missing --c
}

TEST_CASE("distort subcommand verifies the bounds") {
  const fs::path out = work_dir() / "distort.json";
  CHECK(run_cli("distort --map stretch --K 2 --lambda 2 --samples 2000 --seed 5 --out " +
                out.string()) == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["claims"].size() == 3);  // hyperbolic, transformed, chain
  for (const auto& claim : doc["claims"]) CHECK(claim["n_violations"] == 0);

  CHECK(run_cli("distort --map power --m 2 --lambda 1 --samples 2000 --seed 5 --out " +
                out.string()) == 0);
  CHECK(run_cli("distort --map power --conjugate 0.3,0.4 --samples 1000 --out " +
                out.string()) == 0);
  CHECK(run_cli("distort --map stretch --K 0.5 --samples 10") == 2);
}
