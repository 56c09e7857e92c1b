#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "normlap/error.hpp"
#include "normlap/graph.hpp"
#include "normlap/majorization.hpp"
#include "normlap/spectral.hpp"

namespace normlap {

enum class BoundKind { upper, lower };
enum class BoundTheorem { one, two };
enum class ThetaSource { Q, P, bipartite_two };
enum class BetaSource { none, R };

constexpr const char* to_string(BoundKind k) { return k == BoundKind::upper ? "upper" : "lower"; }
constexpr const char* to_string(BoundTheorem t) { return t == BoundTheorem::one ? "one" : "two"; }
constexpr const char* to_string(ThetaSource s) {
  switch (s) {
    case ThetaSource::Q: return "Q";
    case ThetaSource::P: return "P";
    case ThetaSource::bipartite_two: return "bipartite_two";
  }
  return "unknown";
}
constexpr const char* to_string(BetaSource s) { return s == BetaSource::R ? "R" : "none"; }

// Hypothesis identifier carried in BoundValue::violated. θ >= β is enforced
// as a precondition and complete graphs never reach the two-eigenvalue bound.
inline constexpr const char* kHypThetaBetaSum = "theta_plus_beta_n_minus_2_gt_n";

struct BoundValue {
  double value = 0.0;
  BoundKind kind = BoundKind::upper;
  BoundTheorem theorem = BoundTheorem::one;
  ThetaSource theta_source = ThetaSource::Q;
  BetaSource beta_source = BetaSource::none;
  double theta = 0.0;
  double beta = 0.0;
  bool hypotheses_ok = true;
  std::vector<std::string> violated;
};

// Upper for 0 < α < 1 (Schur-concave sum), lower for α < 0 or α > 1.
inline BoundKind bound_kind_for(double alpha) {
  require_valid_alpha(alpha);
  return (alpha > 0.0 && alpha < 1.0) ? BoundKind::upper : BoundKind::lower;
}

// Prior-literature lower bound on λ_1: 1 + sqrt(t / (n(n-1))).
inline double p_bozkurt(int n, double t) {
  if (n < 2) throw Error(ErrorCode::NTooSmall, "P needs n >= 2");
  const double lo = static_cast<double>(n) / (n - 1);
  if (!(t >= lo * (1.0 - kDegenerateRelTol) && t < n)) {
    throw Error(ErrorCode::InfeasibleT, "t=" + std::to_string(t) + " outside [n/(n-1), n)");
  }
  return 1.0 + std::sqrt(t / (static_cast<double>(n) * (n - 1)));
}

// θ^α + (n-θ)^α / (n-2)^(α-1), valid whenever λ_1 >= θ.
inline BoundValue theorem1_bound(int n, double alpha, double theta,
                                 ThetaSource source = ThetaSource::Q) {
  require_valid_alpha(alpha);
  if (n < 3) throw Error(ErrorCode::NTooSmall, "first-eigenvalue bound needs n >= 3");
  if (!(theta > 0.0 && theta < n)) {
    throw Error(ErrorCode::ThetaOutOfRange, "theta=" + std::to_string(theta) + " outside (0, n)");
  }
  BoundValue out;
  out.value = std::pow(theta, alpha) + std::pow(n - theta, alpha) / std::pow(n - 2.0, alpha - 1.0);
  out.kind = bound_kind_for(alpha);
  out.theorem = BoundTheorem::one;
  out.theta_source = source;
  out.theta = theta;
  return out;
}

// θ^α + β^α + (n-θ-β)^α / (n-3)^(α-1), valid whenever λ_1 >= θ, λ_2 >= β,
// θ >= β and θ + β(n-2) > n on a non-complete graph. The value is returned even
// when the last condition fails; hypotheses_ok/violated record it.
inline BoundValue theorem2_bound(int n, double alpha, double theta, double beta,
                                 ThetaSource source = ThetaSource::Q) {
  require_valid_alpha(alpha);
  if (n < 4) throw Error(ErrorCode::NTooSmall, "two-eigenvalue bound needs n >= 4");
  if (!(beta > 0.0)) {
    throw Error(ErrorCode::ThetaOutOfRange, "beta=" + std::to_string(beta) + " must be positive");
  }
  if (beta > theta) {
    throw Error(ErrorCode::BetaExceedsTheta,
                "beta=" + std::to_string(beta) + " exceeds theta=" + std::to_string(theta));
  }
  if (!(theta + beta < n)) {
    throw Error(ErrorCode::ThetaBetaTooLarge, "theta + beta must be below n");
  }
  BoundValue out;
  out.value = std::pow(theta, alpha) + std::pow(beta, alpha) +
              std::pow(n - theta - beta, alpha) / std::pow(n - 3.0, alpha - 1.0);
  out.kind = bound_kind_for(alpha);
  out.theorem = BoundTheorem::two;
  out.theta_source = source;
  out.beta_source = BetaSource::R;
  out.theta = theta;
  out.beta = beta;
  if (!(theta + beta * (n - 2) > n)) {
    out.hypotheses_ok = false;
    out.violated.emplace_back(kHypThetaBetaSum);
  }
  return out;
}

// How θ is chosen for the Q-based bounds. `automatic` uses θ = 2 on bipartite
// graphs (their λ_1 is exactly 2) and Q otherwise; `majorization` always uses Q.
enum class ThetaPolicy { automatic, majorization };

struct BoundReport {
  int n = 0;
  int m = 0;
  int d1 = 0;
  double alpha = 0.0;
  double exact = 0.0;
  double t = 0.0;
  double b = 0.0;
  std::optional<int> h_star;  // absent for the complete graph
  double P = 0.0;
  double Q = 0.0;
  double R = 0.0;
  GraphClass graph_class;
  bool degenerate = false;     // complete graph: no bounds emitted
  std::vector<BoundValue> bounds;          // [T1(θ), T2(θ, R), T1(P)] when not degenerate
  std::vector<double> relative_errors;     // |bound - exact| / exact, same order

  const BoundValue& t1_theta() const { return bounds.at(0); }
  const BoundValue& t2_theta_beta() const { return bounds.at(1); }
  const BoundValue& t1_p() const { return bounds.at(2); }
};

inline BoundReport bound_report(const Graph& g, double alpha,
                                ThetaPolicy policy = ThetaPolicy::automatic) {
  require_valid_alpha(alpha);
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "bound report needs a connected graph");
  const int n = g.order();
  if (n < 4) throw Error(ErrorCode::NTooSmall, "bound report needs n >= 4");

  BoundReport r;
  r.n = n;
  r.m = static_cast<int>(g.size());
  r.d1 = degree_sequence(g).max();
  r.alpha = alpha;
  r.graph_class = classify(g);
  r.exact = s_alpha_star(spectrum(g), alpha);

  const DerivedScalars scalars = degree_pair_sum(g);
  r.t = scalars.t;
  r.b = scalars.b;

  if (r.graph_class.complete) {
    const double flat = static_cast<double>(n) / (n - 1);
    r.degenerate = true;
    r.P = r.Q = r.R = flat;
    return r;
  }

  r.h_star = h_star(n, r.b, 2);
  r.P = p_bozkurt(n, r.t);
  r.Q = q_closed_form(n, r.b);
  r.R = r_closed_form(n, r.b);

  const bool use_two = policy == ThetaPolicy::automatic && r.graph_class.bipartite;
  const double theta = use_two ? 2.0 : r.Q;
  const ThetaSource source = use_two ? ThetaSource::bipartite_two : ThetaSource::Q;

  r.bounds.push_back(theorem1_bound(n, alpha, theta, source));
  r.bounds.push_back(theorem2_bound(n, alpha, theta, r.R, source));
  r.bounds.push_back(theorem1_bound(n, alpha, r.P, ThetaSource::P));
  for (const BoundValue& bv : r.bounds) {
    r.relative_errors.push_back(std::abs(bv.value - r.exact) / r.exact);
  }
  return r;
}

}  // namespace normlap
