#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "normlap/error.hpp"
#include "normlap/root_finding.hpp"

namespace normlap {

// Lower localization of the h-th largest coordinate over
//
//   { λ ∈ R_+^{n-1} : λ_1 >= ... >= λ_{n-1} >= 0, Σ λ_i = n, Σ λ_i^p = b }.
//
// With p = 2 and b = n + t this set contains the non-zero normalized-Laplacian
// spectrum, so the minimum of λ_h over it is a lower bound on the h-th largest
// eigenvalue.
struct MajorizationInstance {
  int n = 0;
  double b = 0.0;
  int p = 2;
  int h = 1;
};

enum class SolverCase { degenerate, h_equal_1, h_mid, h_beyond };

constexpr const char* to_string(SolverCase c) {
  switch (c) {
    case SolverCase::degenerate: return "degenerate";
    case SolverCase::h_equal_1: return "h_equal_1";
    case SolverCase::h_mid: return "h_mid";
    case SolverCase::h_beyond: return "h_beyond";
  }
  return "unknown";
}

struct SolverResult {
  double delta_star = 0.0;
  SolverCase case_tag = SolverCase::degenerate;
  Interval bracket;       // theorem interval the root was searched in
  double residual = 0.0;  // |f(delta_star)|, 0 for the closed-form cases
};

inline constexpr double kDegenerateRelTol = 1e-12;

namespace detail {

inline double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// n^p / k^(p-1)
inline double level(int n, int p, double k) {
  return ipow(static_cast<double>(n), p) / std::pow(k, p - 1);
}

}  // namespace detail

// b of the all-equal vector (n/(n-1), ..., n/(n-1)); the smallest feasible b.
inline double degenerate_b(int n, int p) { return detail::level(n, p, n - 1); }

inline bool is_degenerate_b(int n, double b, int p) {
  const double d = degenerate_b(n, p);
  return std::abs(b - d) <= kDegenerateRelTol * d;
}

inline bool is_feasible_b(int n, double b, int p) {
  return b >= degenerate_b(n, p) * (1.0 - kDegenerateRelTol) &&
         b < detail::ipow(static_cast<double>(n), p);
}

namespace detail {

inline void require_instance_shape(int n, int p) {
  if (n < 2) throw Error(ErrorCode::NTooSmall, "majorization needs n >= 2");
  if (p < 2) throw Error(ErrorCode::InvalidArgument, "power p must be an integer >= 2");
}

}  // namespace detail

// The unique h* with n^p/(h*+1)^(p-1) < b <= n^p/h*^(p-1), i.e.
// floor((n^p/b)^(1/(p-1))). Values 1..n-1 are returned; h* = n-1 only arises
// when b sits within rounding of the degenerate value from above.
inline int h_star(int n, double b, int p) {
  detail::require_instance_shape(n, p);
  if (is_degenerate_b(n, b, p)) {
    throw Error(ErrorCode::DegenerateB,
                "b equals n^p/(n-1)^(p-1); the degenerate (complete-graph) branch applies");
  }
  if (!is_feasible_b(n, b, p)) {
    throw Error(ErrorCode::InfeasibleB, "b=" + std::to_string(b) + " outside [" +
                                            std::to_string(degenerate_b(n, p)) + ", " +
                                            std::to_string(detail::ipow(n, p)) + ")");
  }
  const double ratio = detail::ipow(static_cast<double>(n), p) / b;
  int h = static_cast<int>(std::floor(std::pow(ratio, 1.0 / (p - 1))));
  h = std::clamp(h, 1, n - 1);

  // Guard the floor against misrounding at exact level boundaries.
  auto within_upper = [&](int k) {
    return b <= detail::level(n, p, k) * (1.0 + kDegenerateRelTol);
  };
  while (h > 1 && !within_upper(h)) --h;
  while (h < n - 1 && within_upper(h + 1)) ++h;

  if (!within_upper(h) || !(b > detail::level(n, p, h + 1) * (1.0 - kDegenerateRelTol))) {
    throw Error(ErrorCode::InfeasibleB,
                "could not bracket b=" + std::to_string(b) + " between levels");
  }
  return h;
}

// f for h = 1:  h* δ^p + (n - h* δ)^p - b
inline double objective_first(int n, double b, int p, int hs, double delta) {
  return hs * detail::ipow(delta, p) + detail::ipow(n - hs * delta, p) - b;
}

// f for 1 < h <= h*+1:  (n-h) δ^p + (n - (n-h) δ)^p / (h-1)^(p-1) - b
inline double objective_mid(int n, double b, int p, int h, double delta) {
  const double rest = n - (n - h) * delta;
  return (n - h) * detail::ipow(delta, p) + detail::ipow(rest, p) / std::pow(h - 1.0, p - 1) - b;
}

// Q: closed-form root of the h = 1 objective at p = 2.
inline double q_closed_form(int n, double b) {
  const int hs = h_star(n, b, 2);
  const double radicand = std::max(0.0, (b * (hs + 1) - static_cast<double>(n) * n) / hs);
  return (n + std::sqrt(radicand)) / (1.0 + hs);
}

// R: closed-form root of the h = 2 objective at p = 2. Accepts the degenerate
// b, where the radicand vanishes and R = n/(n-1).
inline double r_closed_form(int n, double b) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "R needs n >= 3");
  if (!is_feasible_b(n, b, 2)) {
    throw Error(ErrorCode::InfeasibleB, "b=" + std::to_string(b) + " outside [" +
                                            std::to_string(degenerate_b(n, 2)) + ", n^2)");
  }
  if (is_degenerate_b(n, b, 2)) return static_cast<double>(n) / (n - 1);
  const double nn = static_cast<double>(n) * n;
  const double radicand = std::max(0.0, (b * (n - 1) - nn) / (n - 2));
  return (n - std::sqrt(radicand)) / (n - 1);
}

namespace detail {

// Bisection on a theorem interval that is open on the left: the lower end is
// pushed out by 1e-12 n, and the root is clamped back into the interval. The
// bracket is halved down to one ulp since f can be steep (slope ~ n^2).
template <typename F>
double root_in(F&& f, int n, Interval interval) {
  const Interval widened{interval.lower - 1e-12 * n, interval.upper};
  const double root = bisect(f, widened, BisectionOptions{0.0, 200});
  return std::clamp(root, interval.lower, interval.upper);
}

}  // namespace detail

// Bisection route for every case; p = 2 closed forms are not consulted.
inline SolverResult solve_min_lambda_bisection(const MajorizationInstance& inst) {
  const int n = inst.n;
  const int p = inst.p;
  const int h = inst.h;
  const double b = inst.b;
  detail::require_instance_shape(n, p);
  // h = n addresses the structural zero eigenvalue and always lands in the
  // h_beyond case.
  if (h < 1 || h > n) {
    throw Error(ErrorCode::Infeasible, "h=" + std::to_string(h) + " outside 1.." + std::to_string(n));
  }
  const double flat = static_cast<double>(n) / (n - 1);
  SolverResult out;
  if (is_degenerate_b(n, b, p)) {
    out.delta_star = flat;
    out.case_tag = SolverCase::degenerate;
    out.bracket = {flat, flat};
    return out;
  }
  if (!is_feasible_b(n, b, p)) {
    throw Error(ErrorCode::Infeasible, "b=" + std::to_string(b) + " is not attainable for n=" +
                                           std::to_string(n) + ", p=" + std::to_string(p));
  }
  const int hs = h_star(n, b, p);
  if (h == 1) {
    out.case_tag = SolverCase::h_equal_1;
    out.bracket = {static_cast<double>(n) / (hs + 1), static_cast<double>(n) / hs};
    auto f = [&](double d) { return objective_first(n, b, p, hs, d); };
    out.delta_star = detail::root_in(f, n, out.bracket);
    out.residual = std::abs(f(out.delta_star));
  } else if (h <= hs + 1 && h < n) {
    out.case_tag = SolverCase::h_mid;
    out.bracket = {0.0, flat};
    auto f = [&](double d) { return objective_mid(n, b, p, h, d); };
    out.delta_star = detail::root_in(f, n, out.bracket);
    out.residual = std::abs(f(out.delta_star));
  } else {
    out.case_tag = SolverCase::h_beyond;
    out.bracket = {0.0, 0.0};
    out.delta_star = 0.0;
  }
  return out;
}

// Minimum of λ_h over the constraint set. At p = 2 and h in {1, 2} the closed
// forms are returned after cross-checking them against bisection.
inline SolverResult solve_min_lambda(const MajorizationInstance& inst) {
  SolverResult out = solve_min_lambda_bisection(inst);
  if (inst.p != 2 || out.case_tag == SolverCase::degenerate ||
      out.case_tag == SolverCase::h_beyond || inst.h > 2) {
    return out;
  }
  const double closed = inst.h == 1 ? q_closed_form(inst.n, inst.b) : r_closed_form(inst.n, inst.b);
  if (std::abs(closed - out.delta_star) > 1e-9) {
    throw Error(ErrorCode::ConvergenceFailure,
                "closed form " + std::to_string(closed) + " disagrees with bisection root " +
                    std::to_string(out.delta_star));
  }
  out.delta_star = closed;
  const int hs = h_star(inst.n, inst.b, 2);
  out.residual = std::abs(inst.h == 1 ? objective_first(inst.n, inst.b, 2, hs, closed)
                                      : objective_mid(inst.n, inst.b, 2, 2, closed));
  return out;
}

}  // namespace normlap
