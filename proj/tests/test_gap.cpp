#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ngas/gap.hpp"
#include "reference.hpp"

using namespace ngas;

namespace {

void expect_coeffs(const std::vector<double>& got, const std::vector<double>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-15) << "index " << i;
}

const std::vector<double> kLambdas{1e-4, 1e-3, 0.01, 0.1, 1.0, 10.0, 100.0, 1e3, 1e4, 1e5, 1e6};

}  // namespace

TEST(GapPolynomial, Coefficients) {
  expect_coeffs(gap_polynomial(make_spec(4, 1, 0.1), 0.5, Phase::SymmetryRestored).coefficients,
                {1, 0, -1, -0.6});
  expect_coeffs(gap_polynomial(make_spec(4, -1, 0.02), 0.5, Phase::SpontaneouslyBroken).coefficients,
                {1, 0, -2, 0.24});
  expect_coeffs(gap_polynomial(make_spec(8, 1, 0.0), 0.5, Phase::SymmetryRestored).coefficients,
                {1, 0, -1, 0, 0, 0});
  EXPECT_EQ(gap_polynomial(make_spec(6, 1, 1), 0.5, Phase::SymmetryRestored).degree(), 4);
  EXPECT_EQ(gap_polynomial(make_spec(8, 1, 1), 0.5, Phase::SymmetryRestored).degree(), 5);
}

TEST(GapPolynomial, UnsupportedCombinations) {
  EXPECT_THROW(gap_polynomial(make_spec(4, 1, 0.1), 0.5, Phase::SpontaneouslyBroken), InvalidArgument);
  EXPECT_THROW(gap_polynomial(make_spec(6, -1, 0.1), 0.5, Phase::SpontaneouslyBroken), InvalidArgument);
}

TEST(SolveGap, QuarticGroundStateAgainstBisection) {
  const double w = solve_gap(make_spec(4, 1, 0.1), 0.5, Phase::SymmetryRestored);
  const double b = ref::bisect([](double v) { return v * v * v - v - 0.6; }, 1.0, 2.0);
  EXPECT_NEAR(w, b, 1e-12);
  EXPECT_NEAR(w, 1.221197, 1e-6);
}

TEST(SolveGap, RationalRoot) {
  EXPECT_NEAR(solve_gap(make_spec(4, 1, 1), 0.5, Phase::SymmetryRestored), 2.0, 1e-14);
}

TEST(SolveGap, BrokenPhaseWeakCouplingLimit) {
  EXPECT_NEAR(solve_gap(make_spec(4, -1, 1e-9), 0.5, Phase::SpontaneouslyBroken), std::sqrt(2.0), 1e-7);
}

TEST(SolveGap, ResidualWithinTolerance) {
  for (int k : {4, 6, 8})
    for (double l : kLambdas)
      for (int n : {0, 3, 40}) {
        const OscillatorSpec spec = make_spec(k, 1, l);
        const GapProblem p = gap_polynomial(spec, n + 0.5, Phase::SymmetryRestored);
        const double w = solve_gap(spec, n + 0.5, Phase::SymmetryRestored);
        EXPECT_GT(w, 0.0);
        EXPECT_LE(std::abs(p(w)), residual_tolerance(p.coefficients, w)) << k << " " << l << " " << n;
      }
}

TEST(CriticalCoupling, FormulaValue) {
  EXPECT_NEAR(critical_coupling(1.0, 0.5), 0.0907218, 1e-7);
  EXPECT_NEAR(critical_coupling(4.0, 0.5), 8.0 * critical_coupling(1.0, 0.5), 1e-14);
}

TEST(CriticalCoupling, DiscriminantOracle) {
  // Largest lambda with a positive root of w^3 - 2|g| w + 6 lambda p: max_w (2|g| w - w^3) = 6 lambda p.
  for (double g : {0.5, 1.0, 3.0})
    for (int n : {0, 1, 5}) {
      const double x = n + 0.5;
      const double p = 5 * x - 1 / (4 * x);
      double best = 0.0;
      const double top = std::sqrt(2 * g);
      for (int i = 1; i < 200000; ++i) {
        const double w = top * i / 200000.0;
        best = std::max(best, 2 * g * w - w * w * w);
      }
      EXPECT_NEAR(critical_coupling(g, x), best / (6 * p), 1e-9 * best);
    }
}

TEST(CriticalCoupling, TangencyAndBounds) {
  const double lc = critical_coupling(1.0, 0.5);
  const double w = solve_gap(make_spec(4, -1, lc), 0.5, Phase::SpontaneouslyBroken);
  EXPECT_NEAR(w, std::sqrt(2.0 / 3.0), 1e-6);
  EXPECT_THROW(solve_gap(make_spec(4, -1, lc * 1.0001), 0.5, Phase::SpontaneouslyBroken), NoPhysicalRoot);
  try {
    solve_gap(make_spec(4, -1, 0.5), 0.5, Phase::SpontaneouslyBroken);
    FAIL();
  } catch (const NoPhysicalRoot& e) {
    EXPECT_NEAR(e.lambda_c(), lc, 1e-15);
  }
  EXPECT_NO_THROW(solve_gap(make_spec(4, -1, lc * 0.9999), 0.5, Phase::SpontaneouslyBroken));
}

TEST(PositiveRealRoots, Examples) {
  const auto r1 = positive_real_roots({1, 0, -1, -6});
  ASSERT_EQ(r1.size(), 1u);
  EXPECT_NEAR(r1[0], 2.0, 1e-14);
  const auto r2 = positive_real_roots({1, 0, -1, 0, -4.5});
  ASSERT_EQ(r2.size(), 1u);
  EXPECT_NEAR(r2[0], std::sqrt((1 + std::sqrt(19.0)) / 2), 1e-13);
  EXPECT_NEAR(r2[0], 1.63690, 1e-5);
  const auto r3 = positive_real_roots({1, 0, -1, 0, 0, 0});
  ASSERT_EQ(r3.size(), 1u);
  EXPECT_NEAR(r3[0], 1.0, 1e-14);
}

TEST(PositiveRealRoots, SeveralRootsSorted) {
  // (w - 0.5)(w - 2)(w - 3)(w + 1)
  const auto r = positive_real_roots({1, -4.5, 3, 5.5, -3});
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], 0.5, 1e-12);
  EXPECT_NEAR(r[1], 2.0, 1e-12);
  EXPECT_NEAR(r[2], 3.0, 1e-12);
  EXPECT_TRUE(positive_real_roots({1, 0, 1}).empty());
}

TEST(GapRoots, SymmetricBranchHasExactlyOnePositiveRoot) {
  for (int k : {4, 6, 8})
    for (double g : {1.0, -1.0})
      for (double l : kLambdas)
        for (int n : {0, 1, 10, 40}) {
          if (k == 8 && g < 0) continue;
          const OscillatorSpec spec = make_spec(k, g, l);
          EXPECT_EQ(positive_real_roots(gap_polynomial(spec, n + 0.5, Phase::SymmetryRestored).coefficients).size(),
                    1u)
              << k << " " << g << " " << l << " " << n;
        }
}

TEST(GapRoots, ClosedFormsAgreeWithRootFinder) {
  for (int k : {4, 6})
    for (double g : {1.0, -1.0, 0.0})
      for (double l : kLambdas)
        for (int n = 0; n <= 40; ++n) {
          const OscillatorSpec spec = make_spec(k, g, l);
          const double x = n + 0.5;
          const double numeric = positive_real_roots(gap_polynomial(spec, x, Phase::SymmetryRestored).coefficients).back();
          const double closed = *closed_form_gap_root(spec, x, Phase::SymmetryRestored);
          EXPECT_NEAR(closed, numeric, 1e-10 * numeric) << k << " " << g << " " << l << " " << n;
        }
}

TEST(GapRoots, BrokenClosedFormAgreesWithRootFinder) {
  for (int n = 0; n <= 40; ++n) {
    const double x = n + 0.5;
    const double lc = critical_coupling(1.0, x);
    for (double frac : {1e-4, 0.01, 0.3, 0.9, 0.999}) {
      const OscillatorSpec spec = make_spec(4, -1.0, frac * lc);
      const double numeric = positive_real_roots(gap_polynomial(spec, x, Phase::SpontaneouslyBroken).coefficients).back();
      const double closed = closed_form::quartic_double_well_broken(1.0, spec.lambda, x);
      EXPECT_NEAR(closed, numeric, 1e-10 * numeric) << n << " " << frac;
      EXPECT_GE(closed, std::sqrt(2.0 / 3.0));
      EXPECT_GT(1.0 - 12.0 * spec.lambda * x / closed, 0.0);  // 4 lambda s^2 > 0
    }
  }
}

TEST(GapRoots, Asymptotics) {
  for (int n : {0, 5}) {
    const double x = n + 0.5, f = x + 1 / (4 * x);
    const double w = solve_gap(make_spec(4, 1, 1e9), x, Phase::SymmetryRestored);
    EXPECT_NEAR(w / std::cbrt(6e9 * f), 1.0, 1e-5);
    EXPECT_NEAR(solve_gap(make_spec(4, 1, 1e-9), x, Phase::SymmetryRestored), 1.0, 1e-7);
  }
}
