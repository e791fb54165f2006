#pragma once

// Vacuum structure of the single-well quartic oscillator: the Bogoliubov
// angle relating the free (w0 = sqrt g) and dressed (w) vacua, the density
// of free quanta in the dressed vacuum, and the two effective potentials.

#include <cmath>
#include <string_view>

#include "ngas/error.hpp"
#include "ngas/gap.hpp"
#include "ngas/model.hpp"
#include "ngas/spectrum.hpp"

namespace ngas {

enum class PotentialKind { Ngas, Perturbative };

inline PotentialKind parse_potential_kind(std::string_view s) {
  if (s == "ngas") return PotentialKind::Ngas;
  if (s == "perturbative") return PotentialKind::Perturbative;
  throw InvalidArgument(detail::concat("unknown effective-potential kind '", s,
                                       "' (expected ngas or perturbative)"));
}

struct VacuumStructure {
  double lambda = 0.0;
  double g = 1.0;
  double w = 1.0;
  double w0 = 1.0;
  double alpha = 0.0;
  double n0 = 0.0;
  double E0 = 0.0;
  double E0_pert = 0.0;
};

namespace detail {

inline void check_vacuum_args(double g, double w) {
  if (!(g > 0.0))
    throw InvalidArgument(detail::concat("vacuum analysis needs g > 0 (w0 = sqrt g), got g = ", g));
  if (!(w > 0.0)) throw InvalidArgument(detail::concat("frequency w must be > 0, got ", w));
}

}  // namespace detail

inline double bogoliubov_alpha(double g, double w) {
  detail::check_vacuum_args(g, w);
  return 0.5 * std::log(std::sqrt(g) / w);
}

// sinh^2(alpha)
inline double condensate_density(double g, double w) {
  const double s = std::sinh(bogoliubov_alpha(g, w));
  return s * s;
}

// (w/w0 + w0/w - 2) / 4 = (w - w0)^2 / (4 w w0)
inline double condensate_density_rational(double g, double w) {
  detail::check_vacuum_args(g, w);
  const double w0 = std::sqrt(g);
  const double d = w - w0;
  return d * d / (4.0 * w * w0);
}

// Ground-state energy as a function of a fixed displacement s, for
// H = p^2/2 + f^2/2 + lambda f^4.
//   ngas:          w/4 + (1 + 12 lambda s^2)/(4w) + 3 lambda/(4 w^2) + s^2/2 + lambda s^4,
//                  w the positive root of w^3 - w (1 + 12 lambda s^2) - 6 lambda
//   perturbative:  1/2 + 3 lambda (s^2 + 1/4) + s^2/2 + lambda s^4
inline double effective_potential(double lambda, double s, PotentialKind kind) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw InvalidArgument(detail::concat("coupling lambda must be >= 0, got ", lambda));
  const double s2 = s * s;
  const double classical = 0.5 * s2 + lambda * s2 * s2;
  if (kind == PotentialKind::Perturbative) return 0.5 + 3.0 * lambda * (s2 + 0.25) + classical;
  const double m2 = 1.0 + 12.0 * lambda * s2;
  const double w = closed_form::quartic_single_well(m2, lambda, 0.5);
  return w / 4.0 + m2 / (4.0 * w) + 3.0 * lambda / (4.0 * w * w) + classical;
}

inline double perturbative_ground_energy(double lambda, double g = 1.0) {
  return std::sqrt(g) / 2.0 + 3.0 * lambda / (4.0 * g);
}

inline VacuumStructure vacuum_structure(double lambda, double g = 1.0) {
  const OscillatorSpec spec = make_spec(4, g, lambda);
  if (!(g > 0.0)) throw InvalidArgument("vacuum analysis needs g > 0");
  const EffectiveSolution sol = level_solution(spec, 0);
  VacuumStructure v;
  v.lambda = lambda;
  v.g = g;
  v.w = sol.w;
  v.w0 = std::sqrt(g);
  v.alpha = bogoliubov_alpha(g, sol.w);
  v.n0 = condensate_density(g, sol.w);
  v.E0 = sol.E0;
  v.E0_pert = perturbative_ground_energy(lambda, g);
  return v;
}

// E0 - E0_pert for g = 1; E0 = (3w + 1/w)/8 at the ground-state gap root.
inline double stability_gap(double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("stability_gap needs lambda > 0");
  const double w = closed_form::quartic_single_well(1.0, lambda, 0.5);
  return (3.0 * w + 1.0 / w) / 8.0 - perturbative_ground_energy(lambda);
}

}  // namespace ngas
