#pragma once

// Leading-order solution for a single level: the interaction lambda f^k is
// replaced by lambda (A f^2 - B f + C) with equal expectation value in the
// level's own state, and (s, w) are fixed by stationarity of <H>.  The
// effective Hamiltonian is then H0 = p^2/2 + w^2 (f - s)^2 / 2 + h0.

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "ngas/error.hpp"
#include "ngas/gap.hpp"
#include "ngas/model.hpp"

namespace ngas {

struct PotentialParams {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

struct EffectiveSolution {
  OscillatorSpec spec;
  int n = 0;
  Phase phase = Phase::SymmetryRestored;
  double w = 1.0;
  double s = 0.0;     // reported as +sqrt(s_sq); the two minima are mirror images
  double s_sq = 0.0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double h0 = 0.0;
  double E0 = 0.0;

  double x() const { return static_cast<double>(n) + 0.5; }
  // Eigenvalue of this level's H0 for Fock state m.
  double unperturbed_level(int m) const { return w * (static_cast<double>(m) + 0.5) + h0; }
};

// A = -(w^2/x) d<f^k>/dw, which is what w^2 = g + 2 lambda A reduces to on
// the gap equation.  B = w^2 s / lambda, C closes <f^k> = A<f^2> - B<f> + C.
inline PotentialParams potential_params(const OscillatorSpec& spec, double s, double w, double x) {
  const double s2 = s * s;
  const double y = 1.0 + 4.0 * x * x;
  PotentialParams out;
  switch (spec.k) {
    case 4:
      out.A = 6.0 * s2 + 3.0 * (x + 1.0 / (4.0 * x)) / w;
      break;
    case 6:
      out.A = 15.0 * s2 * s2 + 45.0 * s2 * y / (4.0 * w * x) +
              (15.0 / 8.0) * (5.0 + 4.0 * x * x) / (w * w);
      break;
    case 8: {
      if (s != 0.0) throw InvalidArgument("octic potential parameters require s = 0");
      const double h = x * x * x + 3.5 * x + 9.0 / (16.0 * x);
      out.A = 35.0 * h / (2.0 * w * w * w);
      break;
    }
    default:
      throw InvalidArgument(detail::concat("unsupported anharmonic power ", spec.k));
  }
  out.B = (s == 0.0) ? 0.0 : w * w * s / spec.lambda;
  out.C = moment(spec.k, s, w, x) - out.A * moment(2, s, w, x) + out.B * s;
  return out;
}

// s^2 of the broken phase at frequency w.
//   quartic: 4 lambda s^2 = |g| - 12 lambda x / w
//   sextic:  s^4 + (10x/w) s^2 + 15(1+4x^2)/(8w^2) + g/(6 lambda) = 0, larger root
inline double ssb_displacement(const OscillatorSpec& spec, double x, double w) {
  if (!(spec.g < 0.0)) throw InvalidArgument("broken phase requires g < 0");
  if (!(w > 0.0)) throw InvalidArgument("frequency w must be > 0");
  if (!(spec.lambda > 0.0)) throw InvalidArgument("broken phase requires lambda > 0");
  const double l = spec.lambda;
  if (spec.k == 4) {
    const double s2 = (-spec.g - 12.0 * l * x / w) / (4.0 * l);
    if (s2 < 0.0)
      throw NoSSBSolution(detail::concat("no broken-phase displacement at w = ", w,
                                         ": |g| < 12 lambda x / w"));
    return s2;
  }
  if (spec.k == 6) {
    const double half_b = 5.0 * x / w;
    const double c = 15.0 * (1.0 + 4.0 * x * x) / (8.0 * w * w) + spec.g / (6.0 * l);
    const double disc = half_b * half_b - c;
    if (disc < 0.0)
      throw NoSSBSolution(detail::concat("sextic ground-state equation has complex s^2 at w = ", w));
    // -half_b + sqrt(half_b^2 - c), rewritten as -c / (half_b + sqrt(...)).
    const double s2 = -c / (half_b + std::sqrt(disc));
    if (s2 < 0.0)
      throw NoSSBSolution(
          detail::concat("sextic ground-state equation has no non-negative s^2 at w = ", w));
    return s2;
  }
  throw InvalidArgument("broken phase is only defined for k = 4 and k = 6");
}

inline EffectiveSolution assemble_solution(const OscillatorSpec& spec, int n, Phase phase, double w,
                                           double s_sq) {
  EffectiveSolution sol;
  sol.spec = spec;
  sol.n = n;
  sol.phase = phase;
  sol.w = w;
  sol.s_sq = s_sq;
  sol.s = std::sqrt(s_sq);
  const double x = sol.x();
  const PotentialParams abc = potential_params(spec, sol.s, w, x);
  sol.A = abc.A;
  sol.B = abc.B;
  sol.C = abc.C;
  sol.h0 = spec.lambda * abc.C - 0.5 * w * w * s_sq;
  sol.E0 = w * x + sol.h0;
  return sol;
}

namespace detail {

// Full sextic gap equation with s^2 eliminated through the ground-state equation:
//   w^4 - w^2 (g + 30 lambda s^4) - (45/2) lambda s^2 w (1+4x^2)/x - (15 lambda/4)(5+4x^2).
inline double sextic_broken_gap(const OscillatorSpec& spec, double x, double w, double s2) {
  const double l = spec.lambda;
  return w * w * w * w - w * w * (spec.g + 30.0 * l * s2 * s2) -
         22.5 * l * s2 * w * (1.0 + 4.0 * x * x) / x - 3.75 * l * (5.0 + 4.0 * x * x);
}

// Stationary points of <H> with s != 0 for the sextic double well.  The
// admissible w start where the constant term of the s^2 quadratic turns
// negative; roots of the reduced gap equation are bracketed on a log grid.
inline std::vector<EffectiveSolution> sextic_broken_solutions(const OscillatorSpec& spec, int n) {
  const double x = static_cast<double>(n) + 0.5;
  const double g_abs = -spec.g;
  const double l = spec.lambda;
  const double w_min = std::sqrt(45.0 * l * (1.0 + 4.0 * x * x) / (4.0 * g_abs));
  const double scale = std::max({w_min, std::sqrt(g_abs),
                                 std::pow(3.75 * l * (5.0 + 4.0 * x * x), 0.25)});
  const double w_max = 16.0 * scale;

  auto reduced = [&](double w) -> std::optional<double> {
    try {
      const double s2 = ssb_displacement(spec, x, w);
      return sextic_broken_gap(spec, x, w, s2);
    } catch (const NoSSBSolution&) {
      return std::nullopt;
    }
  };

  std::vector<EffectiveSolution> out;
  constexpr int kSamples = 4000;
  const double ratio = std::pow(w_max / w_min, 1.0 / kSamples);
  double w_prev = w_min * (1.0 + 1e-12);
  std::optional<double> f_prev = reduced(w_prev);
  for (int i = 1; i <= kSamples; ++i) {
    const double w_next = w_min * std::pow(ratio, i);
    const std::optional<double> f_next = reduced(w_next);
    if (f_prev && f_next && ((*f_prev < 0.0) != (*f_next < 0.0))) {
      double lo = w_prev, hi = w_next, f_lo = *f_prev;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const std::optional<double> fm = reduced(mid);
        if (!fm) break;
        if ((*fm < 0.0) == (f_lo < 0.0)) {
          lo = mid;
          f_lo = *fm;
        } else {
          hi = mid;
        }
      }
      const double w = 0.5 * (lo + hi);
      const double s2 = ssb_displacement(spec, x, w);
      if (s2 > 0.0) out.push_back(assemble_solution(spec, n, Phase::SpontaneouslyBroken, w, s2));
    }
    w_prev = w_next;
    f_prev = f_next;
  }
  return out;
}

}  // namespace detail

// Solution restricted to one phase.  Throws when that phase does not exist.
inline EffectiveSolution level_solution_in_phase(const OscillatorSpec& spec, int n, Phase phase) {
  validate(spec);
  const LevelFactors lf = level_factors(n);
  if (phase == Phase::SymmetryRestored) {
    const double w = solve_gap(spec, lf.x, phase);
    return assemble_solution(spec, n, phase, w, 0.0);
  }
  if (spec.g >= 0.0) throw InvalidArgument("broken phase requires g < 0");
  if (spec.k == 4) {
    const double w = solve_gap(spec, lf.x, phase);
    const double s2 = ssb_displacement(spec, lf.x, w);
    return assemble_solution(spec, n, phase, w, s2);
  }
  if (spec.k == 6) {
    std::vector<EffectiveSolution> candidates = detail::sextic_broken_solutions(spec, n);
    if (candidates.empty())
      throw NoSSBSolution(detail::concat("sextic double well has no broken-phase solution at lambda = ",
                                         spec.lambda, ", n = ", n));
    EffectiveSolution best = candidates.front();
    for (const EffectiveSolution& c : candidates)
      if (c.E0 < best.E0) best = c;
    return best;
  }
  throw InvalidArgument("broken phase is only defined for k = 4 and k = 6");
}

// Every phase that has a solution for this level, symmetric phase first.
inline std::vector<EffectiveSolution> phase_candidates(const OscillatorSpec& spec, int n) {
  std::vector<EffectiveSolution> out{level_solution_in_phase(spec, n, Phase::SymmetryRestored)};
  if (spec.g < 0.0) {
    try {
      out.push_back(level_solution_in_phase(spec, n, Phase::SpontaneouslyBroken));
    } catch (const NumericalFailure&) {
    }
  }
  return out;
}

// The realized phase is the one with the lower leading-order energy.
inline EffectiveSolution level_solution(const OscillatorSpec& spec, int n) {
  const std::vector<EffectiveSolution> candidates = phase_candidates(spec, n);
  EffectiveSolution best = candidates.front();
  for (const EffectiveSolution& c : candidates)
    if (c.E0 < best.E0) best = c;
  return best;
}

inline EffectiveSolution level_solution(const OscillatorSpec& spec, int n,
                                        std::optional<Phase> phase) {
  return phase ? level_solution_in_phase(spec, n, *phase) : level_solution(spec, n);
}

// Energy from the closed-form level formulas, using only the gap root.
inline double lo_energy_closed_form(const OscillatorSpec& spec, int n, Phase phase) {
  const double x = level_factors(n).x;
  const double g = spec.g;
  if (phase == Phase::SpontaneouslyBroken && spec.k != 4)
    throw InvalidArgument("closed-form broken-phase energy exists only for the quartic double well");
  const double w = solve_gap(spec, x, phase);
  switch (spec.k) {
    case 4:
      if (phase == Phase::SpontaneouslyBroken)
        return (x / 4.0) * (3.0 * w - 2.0 * g / w) - g * g / (16.0 * spec.lambda);
      return (x / 4.0) * (3.0 * w + g / w);
    case 6:
      return (x / 3.0) * (2.0 * w + g / w);
    default:
      return (x / 8.0) * (5.0 * w + 3.0 * g / w);
  }
}

// Quartic double-well energy measured from the bottom of the classical wells.
inline double well_referenced_energy(const OscillatorSpec& spec, double E0) {
  if (spec.k != 4 || !(spec.g < 0.0))
    throw InvalidArgument("well-referenced energy is defined only for the quartic double well");
  return E0 + spec.g * spec.g / (16.0 * spec.lambda);
}

// lambda <n| f^k - V(f) |n>; zero by construction of C.
inline double cea_residual(const EffectiveSolution& sol) {
  const double x = sol.x();
  const double mk = moment(sol.spec.k, sol.s, sol.w, x);
  return sol.spec.lambda * (mk - sol.A * moment(2, sol.s, sol.w, x) + sol.B * sol.s - sol.C);
}

}  // namespace ngas
