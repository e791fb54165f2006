#pragma once

// Gap equations for the effective frequency w.  All polynomials are in w with
// coefficients highest degree first; g is the signed quadratic coefficient.
//
//   quartic, s = 0         w^3 - g w - 6 lambda f(x)              = 0
//   quartic, broken phase  w^3 + 2 g w + 6 lambda p(x)            = 0   (g < 0)
//   sextic,  s = 0         w^4 - g w^2 - (15 lambda / 4)(5 + 4x^2) = 0
//   octic,   s = 0         w^5 - g w^3 - 35 lambda h(x)            = 0

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "ngas/error.hpp"
#include "ngas/model.hpp"
#include "ngas/polynomial.hpp"

namespace ngas {

struct GapProblem {
  OscillatorSpec spec;
  double x = 0.5;
  Phase phase = Phase::SymmetryRestored;
  std::vector<double> coefficients;  // highest degree first

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  double operator()(double w) const { return evaluate(coefficients, w); }
};

// Largest coupling for which the broken-phase cubic w^3 - 2|g| w + 6 lambda p(x)
// still has a real positive root: (2|g|/3)^{3/2} / (3 p(x)).
inline double critical_coupling(double g_magnitude, double x) {
  if (!(g_magnitude > 0.0))
    throw InvalidArgument(detail::concat("critical_coupling needs |g| > 0, got ", g_magnitude));
  const double p = 5.0 * x - 1.0 / (4.0 * x);
  return std::pow(2.0 * g_magnitude / 3.0, 1.5) / (3.0 * p);
}

inline GapProblem gap_polynomial(const OscillatorSpec& spec, double x, Phase phase) {
  validate(spec);
  const double g = spec.g;
  const double l = spec.lambda;
  GapProblem problem{spec, x, phase, {}};
  if (phase == Phase::SpontaneouslyBroken) {
    if (spec.k != 4 || g >= 0.0)
      throw InvalidArgument(
          "broken-phase gap polynomial exists only for the quartic double well (k = 4, g < 0)");
    const double p = 5.0 * x - 1.0 / (4.0 * x);
    problem.coefficients = {1.0, 0.0, 2.0 * g, 6.0 * l * p};
    return problem;
  }
  switch (spec.k) {
    case 4: {
      const double f = x + 1.0 / (4.0 * x);
      problem.coefficients = {1.0, 0.0, -g, -6.0 * l * f};
      break;
    }
    case 6:
      problem.coefficients = {1.0, 0.0, -g, 0.0, -3.75 * l * (5.0 + 4.0 * x * x)};
      break;
    case 8: {
      const double h = x * x * x + 3.5 * x + 9.0 / (16.0 * x);
      problem.coefficients = {1.0, 0.0, -g, 0.0, 0.0, -35.0 * l * h};
      break;
    }
  }
  return problem;
}

// Closed-form roots.  These are independent of positive_real_roots and are
// used to cross-check it.
namespace closed_form {

// w^3 - g w - q = 0 with g > 0, q > 0 (Cardano with r = 4g^3 / 27q^2; the
// trigonometric branch when r > 1, i.e. three real roots).
inline double quartic_single_well(double g, double lambda, double x) {
  const double f = x + 1.0 / (4.0 * x);
  const double q = 6.0 * lambda * f;
  if (g == 0.0) return std::cbrt(q);
  if (lambda == 0.0) return std::sqrt(g);
  const double r = g * g * g / (243.0 * lambda * lambda * f * f);
  if (r <= 1.0) {
    const double root = std::sqrt(1.0 - r);
    // 1 - sqrt(1 - r) rewritten to avoid cancellation when r is small.
    const double minus = r / (1.0 + root);
    return std::cbrt(3.0 * lambda * f) * (std::cbrt(1.0 + root) + std::cbrt(minus));
  }
  const double amp = 2.0 * std::sqrt(g / 3.0);
  const double arg = std::clamp(1.0 / std::sqrt(r), -1.0, 1.0);
  return amp * std::cos(std::acos(arg) / 3.0);
}

// w^3 + |g| w - 6 lambda f = 0 (symmetric phase of the double well).
inline double quartic_double_well_symmetric(double g_magnitude, double lambda, double x) {
  const double f = x + 1.0 / (4.0 * x);
  const double r = g_magnitude * g_magnitude * g_magnitude / (243.0 * lambda * lambda * f * f);
  const double root = std::sqrt(1.0 + r);
  const double a = std::cbrt(root + 1.0);
  const double b = std::cbrt(r / (root + 1.0));  // root - 1 without cancellation
  // a - b with a^3 - b^3 = 2.
  return std::cbrt(3.0 * lambda * f) * 2.0 / (a * a + a * b + b * b);
}

// Larger positive root of w^3 - 2|g| w + 6 lambda p = 0, continuous with
// sqrt(2|g|) at lambda = 0.  Defined for lambda <= critical_coupling.
inline double quartic_double_well_broken(double g_magnitude, double lambda, double x) {
  const double lc = critical_coupling(g_magnitude, x);
  if (lambda > lc)
    throw NoPhysicalRoot(detail::concat("broken phase requires lambda <= lambda_c = ", lc,
                                        ", got ", lambda),
                         lc);
  const double ratio = std::min(1.0, lambda / lc);
  return 2.0 * std::sqrt(2.0 * g_magnitude / 3.0) *
         std::cos(std::numbers::pi / 6.0 + std::asin(ratio) / 3.0);
}

// w^4 - g w^2 - c = 0, c = (15 lambda / 4)(5 + 4x^2): quadratic in w^2.
inline double sextic_symmetric(double g, double lambda, double x) {
  const double c = 3.75 * lambda * (5.0 + 4.0 * x * x);
  double w2;
  if (g >= 0.0) {
    w2 = 0.5 * (g + std::sqrt(g * g + 4.0 * c));
  } else {
    // (-|g| + sqrt(g^2 + 4c)) / 2 written without cancellation.
    w2 = 2.0 * c / (-g + std::sqrt(g * g + 4.0 * c));
  }
  return std::sqrt(w2);
}

}  // namespace closed_form

// Closed form for the requested branch when one exists (none for the octic).
inline std::optional<double> closed_form_gap_root(const OscillatorSpec& spec, double x,
                                                  Phase phase) {
  validate(spec);
  if (phase == Phase::SpontaneouslyBroken) {
    if (spec.k != 4 || spec.g >= 0.0) return std::nullopt;
    return closed_form::quartic_double_well_broken(-spec.g, spec.lambda, x);
  }
  switch (spec.k) {
    case 4:
      if (spec.g >= 0.0) return closed_form::quartic_single_well(spec.g, spec.lambda, x);
      return closed_form::quartic_double_well_symmetric(-spec.g, spec.lambda, x);
    case 6:
      return closed_form::sextic_symmetric(spec.g, spec.lambda, x);
    default:
      return std::nullopt;
  }
}

// Physical gap root.  The symmetric branches have exactly one positive root;
// the broken quartic branch takes the larger of its two.
inline double solve_gap(const OscillatorSpec& spec, double x, Phase phase) {
  const GapProblem problem = gap_polynomial(spec, x, phase);
  if (phase == Phase::SpontaneouslyBroken) {
    const double lc = critical_coupling(-spec.g, x);
    if (spec.lambda > lc)
      throw NoPhysicalRoot(detail::concat("broken phase of the quartic double well requires "
                                          "lambda <= lambda_c = ",
                                          lc, ", got lambda = ", spec.lambda),
                           lc);
  }
  const std::vector<double> roots = positive_real_roots(problem.coefficients);
  if (roots.empty()) {
    const double lc = spec.g < 0.0 && spec.k == 4 ? critical_coupling(-spec.g, x) : 0.0;
    throw NoPhysicalRoot(detail::concat("gap polynomial has no positive root (k = ", spec.k,
                                        ", g = ", spec.g, ", lambda = ", spec.lambda, ")"),
                         lc);
  }
  return roots.back();
}

}  // namespace ngas
