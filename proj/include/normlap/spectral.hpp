#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "normlap/error.hpp"
#include "normlap/graph.hpp"

namespace normlap {

// Eigenvalues with |λ| below this are treated as the structural zero.
inline constexpr double kZeroEigenTolerance = 1e-8;

// Dense real symmetric matrix, indexed 0..order-1.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order) : values_(Eigen::MatrixXd::Zero(order, order)) {}

  int order() const noexcept { return static_cast<int>(values_.rows()); }

  double operator()(int i, int j) const { return values_(i, j); }

  // Writes both (i,j) and (j,i) so the matrix stays exactly symmetric.
  void set(int i, int j, double value) {
    values_(i, j) = value;
    values_(j, i) = value;
  }

  const Eigen::MatrixXd& dense() const noexcept { return values_; }

 private:
  Eigen::MatrixXd values_;
};

// Normalized Laplacian I - D^{-1/2} A D^{-1/2}. Row/column i is vertex i+1.
inline SymmetricMatrix normalized_laplacian(const Graph& g) {
  const int n = g.order();
  SymmetricMatrix lap(n);
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) == 0) {
      throw Error(ErrorCode::ZeroDegreeVertex, "vertex " + std::to_string(v) + " is isolated");
    }
    lap.set(v - 1, v - 1, 1.0);
  }
  for (const Edge& e : g.edges()) {
    const double w = -1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v));
    lap.set(e.u - 1, e.v - 1, w);
  }
  return lap;
}

// Eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
  double operator[](std::size_t i) const { return values[i]; }
};

// All eigenvalues of a symmetric matrix via Householder tridiagonalization and
// implicit QL. The smallest eigenvalue is clamped to exactly zero when within
// kZeroEigenTolerance, and any other negative noise above -kZeroEigenTolerance
// is clamped to zero as well.
inline Spectrum spectrum(const SymmetricMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.dense(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure,
                "symmetric eigensolver did not converge for order " + std::to_string(m.order()));
  }
  Spectrum s;
  const auto& ev = solver.eigenvalues();
  s.values.assign(ev.data(), ev.data() + ev.size());
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  for (double& x : s.values)
    if (x < 0.0 && x > -kZeroEigenTolerance) x = 0.0;
  if (!s.values.empty() && std::abs(s.values.back()) < kZeroEigenTolerance) s.values.back() = 0.0;
  return s;
}

inline Spectrum spectrum(const Graph& g) { return spectrum(normalized_laplacian(g)); }

// t = 2 Σ_{edges} 1/(d_u d_v) and the second spectral moment b = n + t.
struct DerivedScalars {
  double t = 0.0;
  double b = 0.0;
};

inline DerivedScalars degree_pair_sum(const Graph& g) {
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    sum += 1.0 / (static_cast<double>(g.degree(e.u)) * g.degree(e.v));
  }
  DerivedScalars out;
  out.t = 2.0 * sum;
  out.b = g.order() + out.t;
  return out;
}

inline void require_valid_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha == 0.0 || alpha == 1.0) {
    throw Error(ErrorCode::InvalidAlpha, "alpha must be finite and not 0 or 1, got " +
                                             std::to_string(alpha));
  }
}

// Σ_{i=1}^{n-1} λ_i^α over the non-zero eigenvalues; the smallest eigenvalue is
// the excluded structural zero.
inline double s_alpha_star(const Spectrum& s, double alpha) {
  require_valid_alpha(alpha);
  if (s.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "spectrum needs at least two eigenvalues");
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double lambda = s[i];
    if (lambda <= kZeroEigenTolerance) {
      throw Error(ErrorCode::UnexpectedZeroEigenvalue,
                  "eigenvalue #" + std::to_string(i + 1) + " = " + std::to_string(lambda) +
                      " is zero; graph is not connected");
    }
    total += std::pow(lambda, alpha);
  }
  return total;
}

struct SpectrumCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
};

struct SpectrumValidation {
  std::vector<SpectrumCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  const SpectrumCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

// Structural identities every normalized-Laplacian spectrum of a connected
// graph satisfies. Failures are reported, not thrown.
inline SpectrumValidation validate_spectrum(const Spectrum& s, const Graph& g) {
  constexpr double kMomentTol = 1e-8;
  constexpr double kUpperTol = 1e-10;
  constexpr double kBipartiteTol = 1e-8;

  SpectrumValidation report;
  const double n = g.order();
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double x : s.values) {
    sum += x;
    sum_sq += x * x;
  }
  const DerivedScalars scalars = degree_pair_sum(g);

  report.checks.push_back({"trace", std::abs(sum - n) <= kMomentTol, std::abs(sum - n)});
  report.checks.push_back(
      {"second_moment", std::abs(sum_sq - scalars.b) <= kMomentTol, std::abs(sum_sq - scalars.b)});
  const double top = s.values.empty() ? 0.0 : s.largest();
  report.checks.push_back({"largest_at_most_two", top <= 2.0 + kUpperTol, std::max(0.0, top - 2.0)});

  const auto zeros = std::count_if(s.values.begin(), s.values.end(),
                                   [](double x) { return std::abs(x) < kZeroEigenTolerance; });
  report.checks.push_back({"single_zero", zeros == 1, static_cast<double>(zeros)});

  bool bipartite = false;
  bool connected = is_connected(g);
  if (connected) bipartite = classify(g).bipartite;
  const bool top_is_two = std::abs(top - 2.0) < kBipartiteTol;
  report.checks.push_back(
      {"two_iff_bipartite", connected && (top_is_two == bipartite), std::abs(top - 2.0)});
  return report;
}

}  // namespace normlap
