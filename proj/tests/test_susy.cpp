#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ngas/oracle.hpp"
#include "ngas/susy.hpp"

using namespace ngas;

TEST(PartnerSpecs, Couplings) {
  const PartnerPair p1 = partner_specs(1);
  EXPECT_EQ(p1.aho.lambda, 0.5);
  EXPECT_EQ(p1.aho.g, 3.0);
  EXPECT_EQ(p1.dwo.g, -3.0);
  EXPECT_EQ(p1.aho.k, 6);
  const PartnerPair p100 = partner_specs(100);
  EXPECT_EQ(p100.aho.lambda, 5000.0);
  EXPECT_EQ(p100.dwo.g, -300.0);
  const PartnerPair p4 = partner_specs(4);
  EXPECT_EQ(p4.aho.lambda, 8.0);
  EXPECT_EQ(p4.aho.g, 12.0);
  EXPECT_THROW(partner_specs(0), InvalidArgument);
  EXPECT_THROW(partner_specs(-1), InvalidArgument);
}

TEST(Ispp, LeadingOrderResiduals) {
  EXPECT_NEAR(ispp_residual(1, 0, Units::Paper), 2.38721 - 1.95608, 2e-5);
  EXPECT_NEAR(ispp_residual(1, 0, Units::Half), 0.5 * ispp_residual(1, 0, Units::Paper), 1e-15);
  EXPECT_NEAR(ispp_residual(1, 10, Units::Paper), 80.0462 - 81.0680, 2e-4);
}

TEST(Ispp, RelativeResidualShrinksWithLevel) {
  const auto rel = [](int n) {
    const PartnerPair p = partner_specs(1);
    return std::abs(ispp_residual(1, n)) / level_solution(p.aho, n).E0;
  };
  EXPECT_GT(rel(0), 0.2);
  EXPECT_LT(rel(40), 0.02);
  EXPECT_LT(rel(40), rel(5));
}

TEST(Ispp, OracleSpectraAreExactlyIsospectral) {
  for (double b : {0.5, 1.0, 3.0}) {
    const PartnerPair p = partner_specs(b);
    const OracleSpectrum aho = exact_levels(p.aho, 10, 1e-12);
    const OracleSpectrum dwo = exact_levels(p.dwo, 11, 1e-12);
    EXPECT_NEAR(2 * dwo.eigenvalues[0], 0.0, 1e-6) << b;
    for (int n = 0; n <= 10; ++n) {
      const double a = aho.eigenvalues[static_cast<std::size_t>(n)];
      const double d = dwo.eigenvalues[static_cast<std::size_t>(n + 1)];
      EXPECT_NEAR(2 * d, 2 * a, 1e-8 * std::max(1.0, a)) << b << " " << n;
    }
  }
}

TEST(Ispp, LeadingOrderMissesExactGroundState) {
  const PartnerPair p = partner_specs(1);
  EXPECT_NEAR(2 * level_solution(p.dwo, 0).E0, 0.3048, 1e-4);
}

TEST(Scaling, ExactLaw) {
  for (double b : {0.25, 1.0, 4.0, 100.0})
    for (int n = 0; n <= 20; ++n) {
      const ScalingResidual r = scaling_residual(b, n);
      const PartnerPair p = partner_specs(b);
      EXPECT_LT(std::abs(r.aho) / level_solution(p.aho, n).E0, 1e-10) << b << " " << n;
      EXPECT_LT(std::abs(r.dwo) / level_solution(p.dwo, n).E0, 1e-10) << b << " " << n;
    }
  EXPECT_EQ(scaling_residual(1, 3).aho, 0.0);
  const PartnerPair p1 = partner_specs(1), p4 = partner_specs(4);
  EXPECT_NEAR(level_solution(p4.aho, 0).E0, 2 * level_solution(p1.aho, 0).E0, 1e-12);
}

TEST(Scaling, LeadingOrderEnergiesPositive) {
  for (double b : {0.1, 1.0, 10.0, 100.0})
    for (int n = 0; n <= 20; ++n) {
      const PartnerPair p = partner_specs(b);
      EXPECT_GT(level_solution(p.dwo, n).E0, 0.0);
      EXPECT_GT(level_solution(p.aho, n).E0, 0.0);
    }
}

TEST(Wavefunction, PointValues) {
  const double g14 = std::tgamma(0.25);
  EXPECT_NEAR(g14, 3.62561, 1e-5);
  EXPECT_NEAR(ground_wavefunction(WavefunctionKind::SusyExact, 100, {0.0})[0], std::pow(800.0, 0.125) / std::sqrt(g14),
              1e-14);
  EXPECT_NEAR(ground_wavefunction(WavefunctionKind::SusyExact, 100, {0.0})[0], 1.21114, 1e-5);
  const double w2 = (-300 + std::sqrt(540000.0)) / 2;
  EXPECT_NEAR(susy_ngas_frequency(100), std::sqrt(w2), 1e-11);
  EXPECT_NEAR(susy_ngas_frequency(100), 14.7453, 1e-4);
  const double w = std::sqrt(w2);
  const std::vector<double> lo = ground_wavefunction(WavefunctionKind::NgasLo, 100, {0.0, 0.1});
  EXPECT_NEAR(lo[0], std::pow(w / M_PI, 0.25), 1e-13);
  EXPECT_NEAR(lo[1], std::pow(w / M_PI, 0.25) * std::exp(-0.5 * w * 0.01), 1e-13);
  EXPECT_THROW(ground_wavefunction(WavefunctionKind::NgasLo, 1, {NAN}), InvalidArgument);
  EXPECT_EQ(parse_wavefunction_kind("susy_exact"), WavefunctionKind::SusyExact);
  EXPECT_THROW(parse_wavefunction_kind("other"), InvalidArgument);
}

TEST(Wavefunction, Normalized) {
  for (double b : {0.25, 1.0, 100.0}) {
    const double span = 12 * susy_wider_sigma(b);
    EXPECT_NEAR(normalization(WavefunctionKind::SusyExact, b, -span, span), 1.0, 1e-8);
    EXPECT_NEAR(normalization(WavefunctionKind::NgasLo, b, -span, span), 1.0, 1e-8);
  }
}

TEST(Wavefunction, QuarticGaussianIntegralOracle) {
  // Integral of exp(-beta f^4) over the line is Gamma(1/4) beta^(-1/4) / 2.
  const double beta = 0.5 * 7.0;
  const double v = detail::integrate([&](double f) { return std::exp(-beta * f * f * f * f); }, -6.0, 6.0);
  EXPECT_NEAR(v, 0.5 * std::tgamma(0.25) * std::pow(beta, -0.25), 1e-12);
}

TEST(WavefunctionDistance, OverlapIsScaleInvariant) {
  const WavefunctionDistance d1 = wavefunction_distance(1.0, -6.0, 6.0);
  EXPECT_GT(d1.overlap, 0.9);
  EXPECT_LT(d1.overlap, 1.0);
  EXPECT_NEAR(d1.l2_distance, std::sqrt(2 - 2 * d1.overlap), 1e-9);
  for (double b : {0.25, 4.0, 100.0}) {
    const double span = 10 * susy_wider_sigma(b);
    const WavefunctionDistance d = wavefunction_distance(b, -span, span);
    EXPECT_NEAR(d.overlap, d1.overlap, 1e-8) << b;
    EXPECT_NEAR(d.l2_distance, d1.l2_distance, 1e-8) << b;
  }
}

TEST(WavefunctionDistance, RejectsNarrowGrid) {
  const double need = 4 * susy_wider_sigma(100);
  EXPECT_THROW(wavefunction_distance(100, -0.5 * need, 0.5 * need), InvalidArgument);
  EXPECT_NO_THROW(wavefunction_distance(100, -need, need));
  std::vector<double> grid;
  for (int i = 0; i <= 800; ++i) grid.push_back(-2.0 + 0.005 * i);
  EXPECT_NO_THROW(wavefunction_distance(100, grid));
  EXPECT_THROW(wavefunction_distance(100, std::vector<double>{0.0}), InvalidArgument);
}

TEST(WavefunctionDistance, IdenticalStates) {
  const GroundWavefunction a(WavefunctionKind::NgasLo, 2.0);
  const double overlap = detail::integrate([&](double f) { return a(f) * a(f); }, -10, 10);
  EXPECT_NEAR(overlap, 1.0, 1e-10);
}
