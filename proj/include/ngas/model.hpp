#pragma once

// Oscillator Hamiltonians H = p^2/2 + g f^2/2 + lambda f^k and the Fock-state
// moments of the shifted field that every other module is built on.

#include <cmath>
#include <sstream>
#include <string>
#include <string_view>

#include "ngas/error.hpp"

namespace ngas {

enum class Phase { SymmetryRestored, SpontaneouslyBroken };

inline std::string_view to_string(Phase phase) {
  return phase == Phase::SymmetryRestored ? "SR" : "SSB";
}

// H = p^2/2 + (g/2) f^2 + lambda f^k.  g < 0 is a double well.
struct OscillatorSpec {
  int k = 4;
  double g = 1.0;
  double lambda = 0.0;

  bool is_double_well() const noexcept { return g < 0.0; }
};

namespace detail {

template <typename... Args>
std::string concat(const Args&... args) {
  std::ostringstream os;
  os.precision(10);
  (os << ... << args);
  return os.str();
}

}  // namespace detail

// Throws InvalidArgument unless the spec is one of the supported Hamiltonians.
// lambda == 0 is the free oscillator and is only meaningful for g > 0.
inline void validate(const OscillatorSpec& spec) {
  if (spec.k != 4 && spec.k != 6 && spec.k != 8)
    throw InvalidArgument(detail::concat("anharmonic power k must be 4, 6 or 8, got ", spec.k));
  if (!std::isfinite(spec.g) || !std::isfinite(spec.lambda))
    throw InvalidArgument("g and lambda must be finite");
  if (spec.lambda < 0.0)
    throw InvalidArgument(detail::concat("coupling lambda must be >= 0, got ", spec.lambda));
  if (spec.g < 0.0 && spec.k == 8)
    throw InvalidArgument("the octic double well is not supported");
  if (spec.lambda == 0.0 && spec.g <= 0.0)
    throw InvalidArgument(
        "lambda = 0 requires g > 0: the double well has no free-oscillator limit");
}

inline OscillatorSpec make_spec(int k, double g, double lambda) {
  OscillatorSpec spec{k, g, lambda};
  validate(spec);
  return spec;
}

// Per-level combinatorial factors, x = n + 1/2.
struct LevelFactors {
  int n = 0;
  double x = 0.5;
  double f = 1.0;  // x + 1/(4x)
  double p = 2.0;  // 5x - 1/(4x)
  double h = 3.0;  // x^3 + 7x/2 + 9/(16x)
};

inline LevelFactors level_factors(int n) {
  if (n < 0) throw InvalidArgument(detail::concat("level n must be >= 0, got ", n));
  LevelFactors lf;
  lf.n = n;
  lf.x = static_cast<double>(n) + 0.5;
  const double x = lf.x;
  lf.f = x + 1.0 / (4.0 * x);
  lf.p = 5.0 * x - 1.0 / (4.0 * x);
  lf.h = x * x * x + 3.5 * x + 9.0 / (16.0 * x);
  return lf;
}

// <n| f^k |n> for the oscillator eigenstate with frequency w centred at s.
// Only the powers that appear in the supported Hamiltonians are provided;
// the eighth moment is only available at s = 0.
inline double moment(int k, double s, double w, double x) {
  if (!(w > 0.0)) throw InvalidArgument(detail::concat("frequency w must be > 0, got ", w));
  const double s2 = s * s;
  const double xw = x / w;
  switch (k) {
    case 1:
      return s;
    case 2:
      return s2 + xw;
    case 3:
      return s * (s2 + 3.0 * xw);
    case 4:
      return s2 * s2 + 6.0 * s2 * xw + (3.0 + 12.0 * x * x) / (8.0 * w * w);
    case 6:
      return s2 * s2 * s2 + 15.0 * s2 * s2 * xw + 45.0 * s2 * (1.0 + 4.0 * x * x) / (8.0 * w * w) +
             0.625 * (x / (w * w * w)) * (5.0 + 4.0 * x * x);
    case 8: {
      if (s != 0.0) throw InvalidArgument("eighth moment is only available for s = 0");
      const double h = x * x * x + 3.5 * x + 9.0 / (16.0 * x);
      return 35.0 * x * h / (8.0 * w * w * w * w);
    }
    default:
      throw InvalidArgument(detail::concat("moment of order ", k, " is not provided"));
  }
}

// <n|H|n> in the shifted-oscillator state (s, w, x).
inline double hamiltonian_average(const OscillatorSpec& spec, double s, double w, double x) {
  const double mk = moment(spec.k, s, w, x);
  return 0.5 * w * x + 0.5 * spec.g * (s * s + x / w) + spec.lambda * mk;
}

}  // namespace ngas
