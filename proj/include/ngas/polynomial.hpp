#pragma once

// Real polynomials (coefficients highest degree first) and an isolating
// positive-root finder.  Roots are isolated by splitting (0, cauchy_bound]
// at the positive critical points, which are found recursively from the
// derivative, so every monotone piece holds at most one root.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "ngas/error.hpp"

namespace ngas {

inline double evaluate(std::span<const double> coeffs, double w) {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * w + c;
  return acc;
}

inline std::vector<double> derivative(std::span<const double> coeffs) {
  std::vector<double> out;
  const std::size_t degree = coeffs.empty() ? 0 : coeffs.size() - 1;
  for (std::size_t i = 0; i < degree; ++i)
    out.push_back(coeffs[i] * static_cast<double>(degree - i));
  return out;
}

// Tolerance on |p(w)| accepted as a root: 1e-12 relative to the leading term.
inline double residual_tolerance(std::span<const double> coeffs, double w) {
  const double lead = coeffs.front() * std::pow(w, static_cast<double>(coeffs.size() - 1));
  return 1e-12 * std::max(1.0, std::abs(lead));
}

// Upper bound on the modulus of every root.
inline double cauchy_bound(std::span<const double> coeffs) {
  double m = 0.0;
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    m = std::max(m, std::abs(coeffs[i] / coeffs.front()));
  return 1.0 + m;
}

namespace detail {

// Root of p in [lo, hi] given p(lo) and p(hi) of opposite sign.  Newton steps
// that leave the bracket are replaced by bisection.
inline double bracketed_newton(std::span<const double> coeffs, std::span<const double> slope,
                               double lo, double hi) {
  double f_lo = evaluate(coeffs, lo);
  double w = 0.5 * (lo + hi);
  for (int iter = 0; iter < 400; ++iter) {
    const double fw = evaluate(coeffs, w);
    if (fw == 0.0) return w;
    if ((fw < 0.0) == (f_lo < 0.0)) {
      lo = w;
      f_lo = fw;
    } else {
      hi = w;
    }
    const double dfw = evaluate(slope, w);
    double next = (dfw != 0.0) ? w - fw / dfw : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - w);
    w = next;
    const bool small_step = step <= 1e-13 * std::abs(w);
    if (small_step && std::abs(evaluate(coeffs, w)) <= residual_tolerance(coeffs, w)) return w;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w)) return w;
  }
  return w;
}

}  // namespace detail

// All roots in (0, inf), ascending.  Double roots are reported once.
inline std::vector<double> positive_real_roots(std::span<const double> coeffs) {
  std::size_t first = 0;
  while (first < coeffs.size() && coeffs[first] == 0.0) ++first;
  coeffs = coeffs.subspan(first);
  if (coeffs.size() < 2) return {};
  if (coeffs.size() > 7) throw InvalidArgument("positive_real_roots supports degree <= 6");

  const std::vector<double> slope = derivative(coeffs);
  const double bound = cauchy_bound(coeffs);

  std::vector<double> cuts{0.0};
  std::vector<double> candidates;
  for (double c : positive_real_roots(slope)) {
    if (c >= bound) continue;
    cuts.push_back(c);
    // Touching the axis at a critical point is a double root.
    if (std::abs(evaluate(coeffs, c)) <= residual_tolerance(coeffs, c)) candidates.push_back(c);
  }
  cuts.push_back(bound);

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    const double f_lo = evaluate(coeffs, lo);
    const double f_hi = evaluate(coeffs, hi);
    if (f_hi == 0.0 && hi > 0.0) {
      candidates.push_back(hi);
      continue;
    }
    if (f_lo == 0.0 || (f_lo < 0.0) == (f_hi < 0.0)) continue;
    candidates.push_back(detail::bracketed_newton(coeffs, slope, lo, hi));
  }

  std::sort(candidates.begin(), candidates.end());
  std::vector<double> roots;
  for (double r : candidates) {
    if (!(r > 0.0)) continue;
    // Merge near-coincident roots; a double root is only located to ~sqrt(eps).
    if (!roots.empty() && r - roots.back() <= 1e-7 * std::max(1.0, r)) continue;
    roots.push_back(r);
  }
  return roots;
}

inline std::vector<double> positive_real_roots(const std::vector<double>& coeffs) {
  return positive_real_roots(std::span<const double>(coeffs));
}

}  // namespace ngas
