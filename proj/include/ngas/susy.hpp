#pragma once

// Sextic SUSY partners from the super-potential W = b f^3:
//   V(+/-) = (W^2 +/- W')/2 = (b^2/2) f^6 +/- (3b/2) f^2,
// i.e. lambda = b^2/2, g = +3b (aho) and g = -3b (dwo).  The dwo partner has
// an exact zero-energy ground state proportional to exp(-b f^4 / 4).

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string_view>
#include <vector>

#include "ngas/error.hpp"
#include "ngas/gap.hpp"
#include "ngas/model.hpp"
#include "ngas/spectrum.hpp"

namespace ngas {

// half: H = p^2/2 + V.  paper: the reference normalisation H = p^2 + 2V,
// twice ours.
enum class Units { Half, Paper };

inline std::string_view to_string(Units u) { return u == Units::Half ? "half" : "paper"; }
inline double unit_factor(Units u) { return u == Units::Half ? 1.0 : 2.0; }

struct PartnerPair {
  double b = 1.0;
  OscillatorSpec aho;
  OscillatorSpec dwo;
};

inline PartnerPair partner_specs(double b) {
  if (!(b > 0.0) || !std::isfinite(b))
    throw InvalidArgument(detail::concat("super-potential coefficient b must be > 0, got ", b));
  const double lambda = 0.5 * b * b;
  return {b, make_spec(6, 3.0 * b, lambda), make_spec(6, -3.0 * b, lambda)};
}

// E(dwo, n+1) - E(aho, n) at leading order.  Exact SUSY makes this zero.
inline double ispp_residual(double b, int n, Units units = Units::Half) {
  const PartnerPair pair = partner_specs(b);
  return unit_factor(units) * (level_solution(pair.dwo, n + 1).E0 - level_solution(pair.aho, n).E0);
}

struct ScalingResidual {
  double aho = 0.0;
  double dwo = 0.0;
};

// E(b) - sqrt(b) E(1) for both partners.
inline ScalingResidual scaling_residual(double b, int n, Units units = Units::Half) {
  const PartnerPair pb = partner_specs(b);
  const PartnerPair p1 = partner_specs(1.0);
  const double root_b = std::sqrt(b);
  const double u = unit_factor(units);
  return {u * (level_solution(pb.aho, n).E0 - root_b * level_solution(p1.aho, n).E0),
          u * (level_solution(pb.dwo, n).E0 - root_b * level_solution(p1.dwo, n).E0)};
}

enum class WavefunctionKind { SusyExact, NgasLo };

inline std::string_view to_string(WavefunctionKind k) {
  return k == WavefunctionKind::SusyExact ? "susy_exact" : "ngas_lo";
}

inline WavefunctionKind parse_wavefunction_kind(std::string_view s) {
  if (s == "susy_exact") return WavefunctionKind::SusyExact;
  if (s == "ngas_lo") return WavefunctionKind::NgasLo;
  throw InvalidArgument(detail::concat("unknown wavefunction kind '", s,
                                       "' (expected susy_exact or ngas_lo)"));
}

// Leading-order ground-state frequency of the dwo partner.
inline double susy_ngas_frequency(double b) {
  const PartnerPair pair = partner_specs(b);
  return closed_form::sextic_symmetric(pair.dwo.g, pair.dwo.lambda, 0.5);
}

class GroundWavefunction {
 public:
  GroundWavefunction(WavefunctionKind kind, double b) : kind_(kind), b_(b) {
    partner_specs(b);
    if (kind == WavefunctionKind::SusyExact) {
      norm_ = std::pow(8.0 * b, 0.125) / std::sqrt(std::tgamma(0.25));
    } else {
      w_ = susy_ngas_frequency(b);
      norm_ = std::pow(w_ / std::numbers::pi, 0.25);
    }
  }

  double operator()(double f) const {
    if (kind_ == WavefunctionKind::SusyExact) return norm_ * std::exp(-0.25 * b_ * f * f * f * f);
    return norm_ * std::exp(-0.5 * w_ * f * f);
  }

  // Standard deviation of |psi|^2.
  double sigma() const {
    if (kind_ == WavefunctionKind::SusyExact)
      return std::sqrt(std::tgamma(0.75) / std::tgamma(0.25) * std::sqrt(2.0 / b_));
    return 1.0 / std::sqrt(2.0 * w_);
  }

  WavefunctionKind kind() const { return kind_; }
  double b() const { return b_; }
  double frequency() const { return w_; }

 private:
  WavefunctionKind kind_;
  double b_;
  double w_ = 0.0;
  double norm_ = 1.0;
};

inline std::vector<double> ground_wavefunction(WavefunctionKind kind, double b,
                                               const std::vector<double>& grid) {
  const GroundWavefunction psi(kind, b);
  std::vector<double> out;
  out.reserve(grid.size());
  for (double f : grid) {
    if (!std::isfinite(f)) throw InvalidArgument("wavefunction grid must be finite");
    out.push_back(psi(f));
  }
  return out;
}

namespace detail {

template <typename F>
double integrate(F&& fn, double lo, double hi) {
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(fn, lo, hi, 15, 1e-13, &error);
  if (!(error <= 1e-10 * std::max(1.0, std::abs(value))))
    throw NotConverged(concat("quadrature error estimate ", error, " exceeds tolerance"), error);
  return value;
}

}  // namespace detail

// Largest of the two density widths.
inline double susy_wider_sigma(double b) {
  return std::max(GroundWavefunction(WavefunctionKind::SusyExact, b).sigma(),
                  GroundWavefunction(WavefunctionKind::NgasLo, b).sigma());
}

inline double normalization(WavefunctionKind kind, double b, double lo, double hi) {
  const GroundWavefunction psi(kind, b);
  return detail::integrate([&](double f) { return psi(f) * psi(f); }, lo, hi);
}

struct WavefunctionDistance {
  double overlap = 0.0;
  double l2_distance = 0.0;
};

// Overlap and L2 distance of the exact and leading-order ground states on
// [lo, hi], which must cover +/- 4 sigma of the wider density.
inline WavefunctionDistance wavefunction_distance(double b, double lo, double hi) {
  const GroundWavefunction exact(WavefunctionKind::SusyExact, b);
  const GroundWavefunction lo_state(WavefunctionKind::NgasLo, b);
  const double need = 4.0 * std::max(exact.sigma(), lo_state.sigma());
  if (!(lo <= -need && hi >= need))
    throw InvalidArgument(detail::concat("grid [", lo, ", ", hi, "] must span at least +/-", need,
                                         " (4 sigma of the wider density)"));
  WavefunctionDistance d;
  d.overlap = detail::integrate([&](double f) { return exact(f) * lo_state(f); }, lo, hi);
  const double sq = detail::integrate(
      [&](double f) {
        const double diff = exact(f) - lo_state(f);
        return diff * diff;
      },
      lo, hi);
  d.l2_distance = std::sqrt(std::max(0.0, sq));
  return d;
}

inline WavefunctionDistance wavefunction_distance(double b, const std::vector<double>& grid) {
  if (grid.size() < 2) throw InvalidArgument("grid needs at least two points");
  const auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
  return wavefunction_distance(b, *lo, *hi);
}

}  // namespace ngas
