#include <cmath>
#include <cstdint>

#include <gtest/gtest.h>

#include "normlap/generators.hpp"
#include "normlap/majorization.hpp"
#include "normlap/root_finding.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace normlap {
namespace {

using testing::CodeOf;

// Frozen from the n = 4 parametric scan (oracle::scan_min_n4) and an
// independent floating-point evaluation of the quadratic roots.
constexpr double kQPath4 = 1.7742918851774316;   // b = 6.5
constexpr double kRPath4 = 0.8923747814892349;   // b = 6.5
constexpr double kQPaw = 1.6220084679281461;     // b = 35/6
constexpr double kRPaw = 1.0446581987385206;     // b = 35/6
constexpr double kCubicPath4 = 1.787530450647817; // b = 11.5, p = 3, h = 1

TEST(HStarTest, Examples) {
  EXPECT_EQ(h_star(4, 6.5, 2), 2);
  EXPECT_EQ(h_star(4, 11.5, 3), 2);
  EXPECT_EQ(CodeOf([] { h_star(4, 16.0 / 3.0, 2); }), ErrorCode::DegenerateB);
  EXPECT_EQ(CodeOf([] { h_star(4, 5.0, 2); }), ErrorCode::InfeasibleB);
  EXPECT_EQ(CodeOf([] { h_star(4, 16.0, 2); }), ErrorCode::InfeasibleB);
  EXPECT_EQ(CodeOf([] { h_star(4, 6.5, 1); }), ErrorCode::InvalidArgument);
}

TEST(HStarTest, ExactLevelBoundaries) {
  // b = n^p / k^(p-1) belongs to h* = k (right-closed interval).
  for (int p : {2, 3}) {
    for (int n = 4; n <= 40; ++n) {
      for (int k = 2; k <= n - 2; ++k) {  // k = 1 is b = n^p, excluded
        const double b = std::pow(n, p) / std::pow(k, p - 1);
        EXPECT_EQ(h_star(n, b, p), k) << "n=" << n << " k=" << k << " p=" << p;
      }
    }
  }
}

TEST(HStarTest, BracketingHoldsForRandomInstances) {
  Rng rng(11);
  for (int i = 0; i < 5000; ++i) {
    const int n = 3 + static_cast<int>(rng.below(120));
    const int p = 2 + static_cast<int>(rng.below(3));
    const double lo = degenerate_b(n, p);
    const double hi = std::pow(n, p);
    const double b = lo + (hi - lo) * (1e-6 + (1 - 2e-6) * rng.uniform01());
    const int hs = h_star(n, b, p);
    ASSERT_GE(hs, 1);
    ASSERT_LE(hs, n - 1);
    EXPECT_LT(std::pow(n, p) / std::pow(hs + 1, p - 1), b);
    EXPECT_LE(b, std::pow(n, p) / std::pow(hs, p - 1) * (1 + 1e-12));
  }
}

TEST(ClosedFormTest, PathAndPaw) {
  EXPECT_NEAR(q_closed_form(4, 6.5), kQPath4, 1e-14);
  EXPECT_NEAR(r_closed_form(4, 6.5), kRPath4, 1e-14);
  EXPECT_NEAR(q_closed_form(4, 35.0 / 6.0), kQPaw, 1e-14);
  EXPECT_NEAR(r_closed_form(4, 35.0 / 6.0), kRPaw, 1e-14);
}

TEST(ClosedFormTest, AgreesWithParametricScanAtNFour) {
  for (double b : {5.5, 35.0 / 6.0, 6.5, 7.0, 8.0, 10.0, 13.0}) {
    EXPECT_NEAR(q_closed_form(4, b), oracle::scan_min_n4(b, 2, 1), 1e-6) << b;
    EXPECT_NEAR(r_closed_form(4, b), oracle::scan_min_n4(b, 2, 2), 1e-6) << b;
  }
}

TEST(ClosedFormTest, CompleteGraphLimit) {
  for (int n = 3; n <= 30; ++n) {
    const double flat = n / (n - 1.0);
    EXPECT_EQ(CodeOf([&] { q_closed_form(n, n * n / (n - 1.0)); }), ErrorCode::DegenerateB);
    EXPECT_NEAR(r_closed_form(n, n * n / (n - 1.0)), flat, 1e-12);
    EXPECT_NEAR(q_closed_form(n, n * n / (n - 1.0) * (1 + 1e-10)), flat, 1e-4);
  }
}

TEST(ClosedFormTest, ROrderedBelowQ) {
  Rng rng(5);
  for (int i = 0; i < 5000; ++i) {
    const int n = 3 + static_cast<int>(rng.below(200));
    const double lo = degenerate_b(n, 2);
    const double b = lo + (n * n - lo) * (1e-9 + (1 - 2e-9) * rng.uniform01());
    const int hs = h_star(n, b, 2);
    const double r = r_closed_form(n, b);
    EXPECT_LE(r, n / (n - 1.0) + 1e-12);
    EXPECT_LE(n / (n - 1.0), static_cast<double>(n) / hs + 1e-12);
    EXPECT_LE(r, q_closed_form(n, b) + 1e-12);
  }
}

TEST(ClosedFormTest, QIncreasesWithinEachHStarSegment) {
  for (int n : {4, 7, 10, 25}) {
    const double lo = degenerate_b(n, 2);
    const double hi = 2.0 * n;  // graph-attainable range of b
    double prev_b = 0.0;
    double prev_q = 0.0;
    int prev_h = -1;
    for (int i = 1; i < 2000; ++i) {
      const double b = lo + (hi - lo) * i / 2000.0;
      const int hs = h_star(n, b, 2);
      const double q = q_closed_form(n, b);
      if (hs == prev_h) {
        EXPECT_GT((q - prev_q) / (b - prev_b), 0.0) << "n=" << n << " b=" << b;
      }
      prev_b = b;
      prev_q = q;
      prev_h = hs;
    }
  }
}

TEST(ClosedFormTest, Errors) {
  EXPECT_EQ(CodeOf([] { r_closed_form(2, 4.0); }), ErrorCode::NTooSmall);
  EXPECT_EQ(CodeOf([] { r_closed_form(5, 6.0); }), ErrorCode::InfeasibleB);
  EXPECT_EQ(CodeOf([] { q_closed_form(5, 26.0); }), ErrorCode::InfeasibleB);
}

TEST(SolveMinLambdaTest, PathInstanceFirstCoordinate) {
  const SolverResult r = solve_min_lambda({4, 6.5, 2, 1});
  EXPECT_EQ(r.case_tag, SolverCase::h_equal_1);
  EXPECT_NEAR(r.delta_star, kQPath4, 1e-12);
  EXPECT_GT(r.delta_star, 4.0 / 3.0);
  EXPECT_LE(r.delta_star, 2.0);
  EXPECT_LT(r.residual, 1e-10 * 6.5);
}

TEST(SolveMinLambdaTest, BeyondHStarIsZero) {
  const SolverResult r = solve_min_lambda({4, 6.5, 2, 4});
  EXPECT_EQ(r.case_tag, SolverCase::h_beyond);
  EXPECT_EQ(r.delta_star, 0.0);
  // n = 10, b = 19: h* = floor(100/19) = 5, so h = 7 is beyond.
  const SolverResult far = solve_min_lambda({10, 19.0, 2, 7});
  EXPECT_EQ(far.case_tag, SolverCase::h_beyond);
  EXPECT_EQ(far.delta_star, 0.0);
  EXPECT_EQ(solve_min_lambda({10, 19.0, 2, 6}).case_tag, SolverCase::h_mid);
}

TEST(SolveMinLambdaTest, CubicInstance) {
  const SolverResult r = solve_min_lambda({4, 11.5, 3, 1});
  EXPECT_EQ(r.case_tag, SolverCase::h_equal_1);
  EXPECT_GT(r.delta_star, 4.0 / 3.0);
  EXPECT_LE(r.delta_star, 2.0);
  EXPECT_NEAR(r.delta_star, kCubicPath4, 1e-10);
  auto f = [](double d) { return 2 * d * d * d + std::pow(4 - 2 * d, 3) - 11.5; };
  EXPECT_NEAR(r.delta_star, oracle::scan_root(f, 4.0 / 3.0 + 1e-12, 2.0), 1e-10);
  EXPECT_NEAR(r.delta_star, oracle::scan_min_n4(11.5, 3, 1), 1e-6);
}

TEST(SolveMinLambdaTest, DegenerateB) {
  for (int p : {2, 3}) {
    const SolverResult r = solve_min_lambda({6, degenerate_b(6, p), p, 3});
    EXPECT_EQ(r.case_tag, SolverCase::degenerate);
    EXPECT_DOUBLE_EQ(r.delta_star, 1.2);
  }
}

TEST(SolveMinLambdaTest, MatchesScanAtNFourAllCoordinates) {
  for (int p : {2, 3}) {
    const double lo = degenerate_b(4, p);
    const double hi = std::pow(4.0, p);
    for (int i = 1; i < 12; ++i) {
      const double b = lo + (hi - lo) * i / 12.0;
      for (int h = 1; h <= 3; ++h) {
        const SolverResult r = solve_min_lambda({4, b, p, h});
        EXPECT_NEAR(r.delta_star, oracle::scan_min_n4(b, p, h), 1e-6)
            << "p=" << p << " b=" << b << " h=" << h;
      }
    }
  }
}

TEST(SolveMinLambdaTest, MatchesScanAtNFive) {
  for (double b : {6.5, 7.0, 8.0, 9.5, 12.0, 17.0}) {
    for (int h = 1; h <= 4; ++h) {
      const SolverResult r = solve_min_lambda({5, b, 2, h});
      EXPECT_NEAR(r.delta_star, oracle::scan_min_n5(b, h), 2.5e-3) << "b=" << b << " h=" << h;
    }
  }
}

TEST(SolveMinLambdaTest, ClosedFormsMatchBisection) {
  Rng rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const int n = 3 + static_cast<int>(rng.below(300));
    const double lo = degenerate_b(n, 2);
    const double b = lo + (n * n - lo) * (1e-9 + (1 - 2e-9) * rng.uniform01());
    for (int h : {1, 2}) {
      const SolverResult bis = solve_min_lambda_bisection({n, b, 2, h});
      const double closed = h == 1 ? q_closed_form(n, b) : r_closed_form(n, b);
      EXPECT_NEAR(bis.delta_star, closed, 1e-9);
      EXPECT_LT(bis.residual, 1e-10 * b);
      EXPECT_GE(bis.delta_star, bis.bracket.lower);
      EXPECT_LE(bis.delta_star, bis.bracket.upper);
    }
  }
}

TEST(SolveMinLambdaTest, Errors) {
  EXPECT_EQ(CodeOf([] { solve_min_lambda({4, 5.0, 2, 1}); }), ErrorCode::Infeasible);
  EXPECT_EQ(CodeOf([] { solve_min_lambda({4, 6.5, 2, 0}); }), ErrorCode::Infeasible);
  EXPECT_EQ(CodeOf([] { solve_min_lambda({4, 6.5, 2, 5}); }), ErrorCode::Infeasible);
  EXPECT_EQ(CodeOf([] { solve_min_lambda({4, 20.0, 2, 1}); }), ErrorCode::Infeasible);
}

TEST(BisectTest, FindsRootAndRejectsBadBracket) {
  const double root = bisect([](double x) { return x * x - 2.0; }, {0.0, 2.0});
  EXPECT_NEAR(root, std::sqrt(2.0), 1e-12);
  EXPECT_EQ(CodeOf([] { bisect([](double x) { return x * x + 1.0; }, {-1.0, 1.0}); }),
            ErrorCode::NoSignChange);
  EXPECT_EQ(bisect([](double x) { return x - 1.0; }, {1.0, 3.0}), 1.0);
}

}  // namespace
}  // namespace normlap
