// normlap: bounds on the sum of powers of normalized-Laplacian eigenvalues.
//
//   normlap bounds --input graph.txt --alpha 0.5 [--format text|csv]
//   normlap experiment --model er|tree --sizes 4,10,20 [--q 0.5] --alpha 0.5 --seed 1 --out rows.csv
//   normlap curves --n 4,10,20,50 --samples 100 --out curves.csv

#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "normlap/normlap.hpp"

namespace {

using normlap::ThetaPolicy;

const std::map<std::string, ThetaPolicy> kPolicies{
    {"auto", ThetaPolicy::automatic},
    {"majorization", ThetaPolicy::majorization},
};

int run_bounds(const std::string& input, double alpha, const std::string& format,
               ThetaPolicy policy) {
  const normlap::Graph g = normlap::read_edge_list_file(input);
  const normlap::BoundReport report = normlap::bound_report(g, alpha, policy);
  std::cout << (format == "csv" ? normlap::format_report_csv(report)
                                : normlap::format_report_text(report));
  return 0;
}

int run_experiment(const normlap::ExperimentConfig& cfg, const std::string& out) {
  const auto rows = normlap::run_experiment(cfg);
  std::ostringstream csv;
  normlap::write_experiment_csv(csv, rows);
  normlap::write_text_file(out, csv.str());
  return 0;
}

int run_curves(const std::vector<int>& ns, int samples, const std::string& out) {
  std::vector<normlap::CurveSample> all;
  for (int n : ns) {
    auto part = normlap::curve_samples(n, samples);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::ostringstream csv;
  normlap::write_curves_csv(csv, all);
  normlap::write_text_file(out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized-Laplacian eigenvalue localization and s*_alpha bounds"};
  app.require_subcommand(1);

  std::string input;
  double alpha = 0.5;
  std::string format = "text";
  ThetaPolicy policy = ThetaPolicy::automatic;
  auto* bounds = app.add_subcommand("bounds", "Bound report for one edge-list graph");
  bounds->add_option("--input", input, "Edge-list file")->required();
  bounds->add_option("--alpha", alpha, "Exponent (not 0 or 1)")->required();
  bounds->add_option("--format", format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));
  bounds->add_option("--theta", policy, "auto (2 on bipartite graphs) or majorization (always Q)")
      ->transform(CLI::CheckedTransformer(kPolicies));

  normlap::ExperimentConfig cfg;
  std::string model = "er";
  std::string out;
  auto* experiment = app.add_subcommand("experiment", "Random-graph table rows as CSV");
  experiment->add_option("--model", model, "er or tree")
      ->required()
      ->check(CLI::IsMember({"er", "tree"}));
  experiment->add_option("--sizes", cfg.sizes, "Comma-separated vertex counts (>= 4)")
      ->required()
      ->delimiter(',');
  experiment->add_option("--q", cfg.q, "ER edge probability");
  experiment->add_option("--alpha", cfg.alpha, "Exponent (not 0 or 1)")->required();
  experiment->add_option("--seed", cfg.seed, "Base seed")->required();
  experiment->add_option("--out", out, "Output CSV path")->required();
  experiment->add_option("--theta", cfg.policy, "auto or majorization")
      ->transform(CLI::CheckedTransformer(kPolicies));

  std::vector<int> curve_ns;
  int samples = 100;
  auto* curves = app.add_subcommand("curves", "P, Q and Q-P over t as CSV");
  curves->add_option("--n", curve_ns, "Comma-separated vertex counts (>= 3)")
      ->required()
      ->delimiter(',');
  curves->add_option("--samples", samples, "t samples per n (>= 2)")->required();
  curves->add_option("--out", out, "Output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bounds) return run_bounds(input, alpha, format, policy);
    if (*experiment) {
      cfg.model = model == "tree" ? normlap::ModelTag::tree : normlap::ModelTag::er;
      return run_experiment(cfg, out);
    }
    if (*curves) return run_curves(curve_ns, samples, out);
  } catch (const normlap::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
