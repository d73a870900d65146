// Command-line front end: metric evaluation, verification campaigns,
// counterexample search, curve-data emission, and distortion checks.
// Exit codes: 0 success, 1 verification violation (or failed search),
// 2 usage or domain errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "imetric/distortion.hpp"
#include "imetric/inequalities.hpp"
#include "imetric/metrics.hpp"
#include "imetric/suites.hpp"

namespace {

using namespace imetric;
using nlohmann::ordered_json;

Point parse_point(const std::string& text) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    coords.push_back(std::stod(item, &pos));
    if (pos != item.size()) throw std::invalid_argument("bad coordinate '" + item + "'");
  }
  if (coords.size() < 2)
    throw std::invalid_argument("points need at least 2 coordinates: '" + text + "'");
  Point p(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) p[i] = coords[i];
  return p;
}

struct DomainArgs {
  std::string kind = "ball";
  std::string file;
  int dim = 2;

  void attach(CLI::App* cmd) {
    cmd->add_option("--domain", kind, "domain kind")
        ->check(CLI::IsMember({"ball", "halfspace", "polygon"}))
        ->capture_default_str();
    cmd->add_option("--domain-file", file, "polygon vertices, JSON [[x,y],...]");
    cmd->add_option("--dim", dim, "dimension of ball/halfspace")->capture_default_str();
  }

  Domain resolve() const {
    if (kind == "ball") return Domain::unit_ball(dim);
    if (kind == "halfspace") return Domain::half_space(dim);
    if (file.empty())
      throw std::invalid_argument("--domain polygon requires --domain-file");
    return Domain::polygon_from_json(file);
  }
};

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << payload;
}

ordered_json tolerances_json(const Tolerances& tol) {
  ordered_json j;
  j["slack"] = tol.slack;
  j["tie"] = tol.tie;
  j["equality"] = tol.equality;
  return j;
}

int emit_reports(const ordered_json& config, const std::vector<VerificationReport>& reps,
                 const std::string& out_path) {
  ordered_json doc;
  doc["config"] = config;
  doc["claims"] = reports_to_json(reps);
  write_output(out_path, doc.dump(2) + "\n");
  int violations = 0;
  for (const auto& r : reps) {
    if (!r.passed()) {
      ++violations;
      std::cerr << "violated: " << r.claim_id << " (n_violations=" << r.n_violations
                << ", max_violation=" << r.max_violation << ")\n";
    }
  }
  return violations == 0 ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"intrinsic metrics of domains: evaluation and verification"};
  app.require_subcommand(1);

  // ---- eval ----
  auto* eval = app.add_subcommand("eval", "evaluate a metric at a pair of points");
  DomainArgs eval_dom;
  eval_dom.attach(eval);
  std::string metric = "W", base = "j", x_text, y_text;
  double eval_c = 1.0;
  std::optional<double> eval_lambda;
  eval->add_option("--metric", metric, "metric to evaluate")
      ->check(CLI::IsMember({"j", "h", "rho", "W"}))
      ->capture_default_str();
  eval->add_option("--base", base, "base metric of W")
      ->check(CLI::IsMember({"j", "rho", "h"}))
      ->capture_default_str();
  eval->add_option("--c", eval_c, "parameter c")->capture_default_str();
  eval->add_option("--lambda", eval_lambda, "alias for c when W rides the hyperbolic base");
  eval->add_option("--x", x_text, "first point, comma-separated")->required();
  eval->add_option("--y", y_text, "second point, comma-separated")->required();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run named verification suites");
  std::string suite = "all", verify_out;
  DomainArgs verify_dom;
  bool verify_dom_set = false;
  SuiteOptions opt;
  verify->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
  verify->add_option("--samples", opt.samples, "random samples per claim")
      ->capture_default_str();
  verify->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  verify->add_option("--slack", opt.tol.slack, "absolute inequality slack")
      ->capture_default_str();
  verify->add_option("--equality-tol", opt.tol.equality, "equality-case tolerance")
      ->capture_default_str();
  verify->add_option("--out", verify_out, "write the JSON report here (default stdout)");
  verify_dom.attach(verify);
  auto* verify_domain_opt = verify->get_option("--domain");
  verify->callback([&] { verify_dom_set = verify_domain_opt->count() > 0; });

  // ---- counterexample ----
  auto* cex = app.add_subcommand("counterexample",
                                 "construct a triangle-inequality violation (c < 1)");
  double cex_c = 0.5;
  std::string cex_out;
  double cex_margin = 1e-6;
  cex->add_option("--c", cex_c, "parameter c of the transformed metric")->required();
  cex->add_option("--target-margin", cex_margin, "required violation margin")
      ->capture_default_str();
  cex->add_option("--out", cex_out, "write the JSON witness here (default stdout)");

  // ---- plot ----
  auto* plot = app.add_subcommand("plot", "emit curve data as CSV");
  std::string which, plot_out;
  std::optional<double> plot_c;
  plot->add_option("figure", which, "fig1 (transform sandwich) or fig2 (envelope)")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2"}));
  plot->add_option("--c", plot_c, "envelope parameter (fig2)");
  plot->add_option("--out", plot_out, "output CSV path (default <figure>.csv)");

  // ---- distort ----
  auto* distort = app.add_subcommand("distort", "check quasiregular distortion bounds");
  std::string map_kind = "stretch";
  int power_m = 2;
  double map_K = 2.0, distort_lambda = 1.0;
  std::string conj_text, distort_out;
  int distort_samples = 100000;
  std::uint64_t distort_seed = 7;
  double distort_slack = Tolerances{}.slack;
  distort->add_option("--map", map_kind, "test map family")
      ->check(CLI::IsMember({"power", "stretch"}))
      ->capture_default_str();
  distort->add_option("--m", power_m, "power exponent")->capture_default_str();
  distort->add_option("--K", map_K, "stretch dilatation")->capture_default_str();
  distort->add_option("--conjugate", conj_text, "conjugate by the automorphism at a_x,a_y");
  distort->add_option("--lambda", distort_lambda, "transform parameter")
      ->capture_default_str();
  distort->add_option("--samples", distort_samples, "random pairs")->capture_default_str();
  distort->add_option("--seed", distort_seed, "RNG seed")->capture_default_str();
  distort->add_option("--slack", distort_slack, "relative slack")->capture_default_str();
  distort->add_option("--out", distort_out, "write the JSON report here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (eval->parsed()) {
    const Point x = parse_point(x_text);
    const Point y = parse_point(y_text);
    DomainArgs d = eval_dom;
    d.dim = static_cast<int>(x.size());
    const Domain dom = d.resolve();
    const double c = eval_lambda.value_or(eval_c);
    double value = 0.0;
    if (metric == "j") {
      value = j_metric(dom, x, y);
    } else if (metric == "h") {
      value = h_metric(dom, c, x, y);
    } else if (metric == "rho") {
      value = base_distance({BaseMetric::Hyperbolic, 1.0, dom}, x, y);
    } else {
      const BaseMetric b = base == "j"     ? BaseMetric::DistanceRatio
                           : base == "rho" ? BaseMetric::Hyperbolic
                                           : BaseMetric::HMetric;
      value = w_metric({b, c, dom}, x, y);
    }
    std::printf("%.17g\n", value);
    return 0;
  }

  if (verify->parsed()) {
    if (verify_dom_set) opt.domain = verify_dom.resolve();
    ordered_json config;
    config["command"] = "verify";
    config["suite"] = suite;
    config["domain"] = opt.domain ? opt.domain->describe() : "default";
    config["samples"] = opt.samples;
    config["seed"] = opt.seed;
    config["tolerances"] = tolerances_json(opt.tol);
    const auto reports = suite == "all" ? run_all_suites(opt) : run_suite(suite, opt);
    return emit_reports(config, reports, verify_out);
  }

  if (cex->parsed()) {
    const auto v = find_triangle_violation(cex_c, cex_margin);  // throws SearchFailure
    ordered_json doc;
    ordered_json config;
    config["command"] = "counterexample";
    config["c"] = cex_c;
    config["target_margin"] = cex_margin;
    doc["config"] = config;
    doc["counterexample"] = v.to_json();
    write_output(cex_out, doc.dump(2) + "\n");
    return 0;
  }

  if (plot->parsed()) {
    const FigureKind kind =
        which == "fig1" ? FigureKind::TransformSandwich : FigureKind::PiecewiseEnvelope;
    if (kind == FigureKind::PiecewiseEnvelope && !plot_c)
      throw std::invalid_argument("plot fig2 requires --c");
    const std::string path = plot_out.empty() ? which + ".csv" : plot_out;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    write_curve_csv(kind, plot_c, out);
    std::cerr << "wrote " << path << "\n";
    return 0;
  }

  if (distort->parsed()) {
    TestMap f = map_kind == "power" ? TestMap::power(power_m)
                                    : TestMap::radial_stretch(map_K);
    if (!conj_text.empty()) {
      const Point a = parse_point(conj_text);
      f = TestMap::mobius_conjugate(std::move(f), Eigen::Vector2d(a[0], a[1]));
    }
    Tolerances tol;
    tol.slack = distort_slack;
    ordered_json config;
    config["command"] = "distort";
    config["map"] = f.describe();
    config["lambda"] = distort_lambda;
    config["samples"] = distort_samples;
    config["seed"] = distort_seed;
    config["tolerances"] = tolerances_json(tol);
    std::vector<VerificationReport> reports;
    reports.push_back(check_hyperbolic_distortion(f, distort_samples, distort_seed, tol));
    reports.push_back(
        check_w_distortion(f, distort_lambda, distort_samples, distort_seed, tol));
    reports.push_back(
        check_w_distortion_chain(f, distort_lambda, distort_samples, distort_seed, tol));
    return emit_reports(config, reports, distort_out);
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const imetric::SearchFailure& e) {
    std::cerr << "search failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
