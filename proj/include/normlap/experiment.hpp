#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "normlap/bounds.hpp"
#include "normlap/error.hpp"
#include "normlap/generators.hpp"
#include "normlap/graph.hpp"
#include "normlap/majorization.hpp"

namespace normlap {

enum class ModelTag { er, tree, named };

constexpr const char* to_string(ModelTag m) {
  switch (m) {
    case ModelTag::er: return "er";
    case ModelTag::tree: return "tree";
    case ModelTag::named: return "named";
  }
  return "unknown";
}

inline constexpr std::string_view kExperimentCsvHeader =
    "n,d1,m,s_star,bound_t1_theta,bound_t2_theta_beta,bound_t1_p,err_t1_theta,"
    "err_t2_theta_beta,err_t1_p,theta_source,hypotheses_ok,seed";
inline constexpr std::string_view kCurvesCsvHeader = "n,t,p,q,q_minus_p";

// Placeholder written into the bound/error columns of a complete-graph row.
inline constexpr std::string_view kNotApplicable = "NA";

// One table row. Bounds and errors are absent for complete graphs.
struct ExperimentRow {
  int n = 0;
  int d1 = 0;
  int m = 0;
  double s_star = 0.0;
  std::optional<double> bound_t1_theta;
  std::optional<double> bound_t2_theta_beta;
  std::optional<double> bound_t1_p;
  std::optional<double> err_t1_theta;  // fractions, not percent
  std::optional<double> err_t2_theta_beta;
  std::optional<double> err_t1_p;
  std::string theta_source;  // "Q", "bipartite_two" or "degenerate"
  std::optional<bool> hypotheses_ok;
  ModelTag model = ModelTag::named;
  std::uint64_t seed = 0;
};

inline ExperimentRow make_experiment_row(const BoundReport& r, ModelTag model, std::uint64_t seed) {
  ExperimentRow row;
  row.n = r.n;
  row.d1 = r.d1;
  row.m = r.m;
  row.s_star = r.exact;
  row.model = model;
  row.seed = seed;
  if (r.degenerate) {
    row.theta_source = "degenerate";
    return row;
  }
  row.bound_t1_theta = r.t1_theta().value;
  row.bound_t2_theta_beta = r.t2_theta_beta().value;
  row.bound_t1_p = r.t1_p().value;
  row.err_t1_theta = r.relative_errors[0];
  row.err_t2_theta_beta = r.relative_errors[1];
  row.err_t1_p = r.relative_errors[2];
  row.theta_source = to_string(r.t1_theta().theta_source);
  row.hypotheses_ok = r.t2_theta_beta().hypotheses_ok;
  return row;
}

// Per-size stream: base_seed * 1000 + n.
inline std::uint64_t derive_row_seed(std::uint64_t base_seed, int n) {
  return base_seed * 1000u + static_cast<std::uint64_t>(n);
}

inline Graph generate_model_graph(ModelTag model, int n, double q, std::uint64_t row_seed) {
  switch (model) {
    case ModelTag::er: return generate_er_connected(n, q, row_seed);
    case ModelTag::tree: return generate_random_tree(n, row_seed);
    case ModelTag::named: break;
  }
  throw Error(ErrorCode::InvalidArgument, "named graphs are not generated from a seed");
}

struct ExperimentConfig {
  ModelTag model = ModelTag::er;
  std::vector<int> sizes;
  double q = 0.5;
  double alpha = 0.5;
  std::uint64_t seed = 1;
  ThetaPolicy policy = ThetaPolicy::automatic;
  bool parallel = true;
};

// Rebuilds the graph for a row from its recorded seed and recomputes the row.
inline ExperimentRow regenerate_row(ModelTag model, int n, double q, double alpha,
                                    std::uint64_t row_seed,
                                    ThetaPolicy policy = ThetaPolicy::automatic) {
  const Graph g = generate_model_graph(model, n, q, row_seed);
  return make_experiment_row(bound_report(g, alpha, policy), model, row_seed);
}

// Rows come back in the order of `sizes`, whatever the scheduling.
inline std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.model == ModelTag::named) {
    throw Error(ErrorCode::InvalidArgument, "experiment model must be er or tree");
  }
  for (int n : cfg.sizes) {
    if (n < 4) throw Error(ErrorCode::NTooSmall, "experiment sizes must be >= 4");
  }
  if (cfg.model == ModelTag::er && !(cfg.q > 0.0 && cfg.q <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "q must be in (0, 1]");
  }
  require_valid_alpha(cfg.alpha);

  auto compute = [&cfg](int n) {
    return regenerate_row(cfg.model, n, cfg.q, cfg.alpha, derive_row_seed(cfg.seed, n), cfg.policy);
  };
  std::vector<ExperimentRow> rows;
  rows.reserve(cfg.sizes.size());
  if (!cfg.parallel) {
    for (int n : cfg.sizes) rows.push_back(compute(n));
    return rows;
  }
  std::vector<std::future<ExperimentRow>> pending;
  pending.reserve(cfg.sizes.size());
  for (int n : cfg.sizes) pending.push_back(std::async(std::launch::async, compute, n));
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

// Fixed-format numbers so output bytes do not depend on stream state.
inline std::string format_value(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

inline std::string format_percent(double fraction) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * fraction);
  return buf;
}

inline std::string format_csv_row(const ExperimentRow& row) {
  auto value = [](const std::optional<double>& v) {
    return v ? format_value(*v) : std::string(kNotApplicable);
  };
  auto percent = [](const std::optional<double>& v) {
    return v ? format_percent(*v) : std::string(kNotApplicable);
  };
  std::string out;
  out += std::to_string(row.n) + ',' + std::to_string(row.d1) + ',' + std::to_string(row.m) + ',';
  out += format_value(row.s_star) + ',';
  out += value(row.bound_t1_theta) + ',' + value(row.bound_t2_theta_beta) + ',' +
         value(row.bound_t1_p) + ',';
  out += percent(row.err_t1_theta) + ',' + percent(row.err_t2_theta_beta) + ',' +
         percent(row.err_t1_p) + ',';
  out += row.theta_source + ',';
  out += row.hypotheses_ok ? (*row.hypotheses_ok ? "true" : "false") : std::string(kNotApplicable);
  out += ',' + std::to_string(row.seed);
  return out;
}

inline void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kExperimentCsvHeader << '\n';
  for (const auto& row : rows) out << format_csv_row(row) << '\n';
}

struct CurveSample {
  int n = 0;
  double t = 0.0;
  double P = 0.0;
  double Q = 0.0;
  double diff = 0.0;
};

// `samples` equally spaced t values strictly inside (n/(n-1), n):
// t_k = lo + k (n - lo) / (samples + 1), k = 1..samples.
inline std::vector<CurveSample> curve_samples(int n, int samples) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "curves need n >= 3");
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "curves need at least 2 samples");
  const double lo = static_cast<double>(n) / (n - 1);
  const double step = (n - lo) / (samples + 1);
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int k = 1; k <= samples; ++k) {
    CurveSample s;
    s.n = n;
    s.t = lo + k * step;
    s.P = p_bozkurt(n, s.t);
    s.Q = q_closed_form(n, n + s.t);
    s.diff = s.Q - s.P;
    out.push_back(s);
  }
  return out;
}

inline void write_curves_csv(std::ostream& out, const std::vector<CurveSample>& rows) {
  out << kCurvesCsvHeader << '\n';
  for (const auto& s : rows) {
    out << s.n << ',' << format_value(s.t) << ',' << format_value(s.P) << ','
        << format_value(s.Q) << ',' << format_value(s.diff) << '\n';
  }
}

inline void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open for writing: " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path.string());
}

}  // namespace normlap
