#pragma once

// Rayleigh-Schroedinger perturbation theory about a level's effective
// Hamiltonian H0, with lambda H' = lambda (f^k - V(f)) as the perturbation.
// The unperturbed basis for level n is the Fock basis of frequency w(n), so
// the energy denominators are E_n - E_m = w (n - m).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ngas/error.hpp"
#include "ngas/fock.hpp"
#include "ngas/model.hpp"
#include "ngas/spectrum.hpp"

namespace ngas {

inline constexpr int kMaxIptOrder = 4;

inline int default_ipt_dim(const OscillatorSpec& spec, int n) { return n + 3 * spec.k + 1; }

struct IPTSeries {
  OscillatorSpec spec;
  int n = 0;
  int basis_dim = 0;
  double w = 0.0;
  double E0 = 0.0;
  std::vector<double> corrections;   // dE(1) ... dE(K)
  std::vector<double> partial_sums;  // E0, E0 + dE(1), ...
  bool truncation_warning = false;
  double enrichment_change = 0.0;  // max relative change when dim grows by k

  double energy(int order) const { return partial_sums.at(static_cast<std::size_t>(order)); }
};

// lambda (f^k - A f^2 + B f - C) on the first `dim` Fock states of the level's
// own H0 basis.  Only the symmetric (s = 0) vacuum is supported.
inline Eigen::MatrixXd perturbation_matrix(const EffectiveSolution& sol, int dim) {
  if (sol.s != 0.0)
    throw SSBUnsupported("perturbation theory about a displaced vacuum (s != 0) is not provided");
  if (dim < 1) throw InvalidArgument("dimension must be >= 1");
  const OscillatorSpec& spec = sol.spec;
  BandMatrix v = position_power_matrix(spec.k, sol.w, dim);
  v.axpy(-sol.A, position_power_matrix(2, sol.w, dim));
  Eigen::MatrixXd m = v.to_dense();
  m.diagonal().array() -= sol.C;
  m *= spec.lambda;
  return m;
}

inline Eigen::MatrixXd perturbation_matrix(const OscillatorSpec& spec, int n, int dim) {
  return perturbation_matrix(level_solution(spec, n), dim);
}

namespace rs {

// Resolvent weights 1 / (E_n - E_m), zero at m = n.
inline Eigen::VectorXd resolvent(double w, int n, int dim) {
  Eigen::VectorXd r(dim);
  for (int m = 0; m < dim; ++m) r(m) = (m == n) ? 0.0 : 1.0 / (w * static_cast<double>(n - m));
  return r;
}

// Energy corrections dE(1..max_order) from the standard recursion with
// intermediate normalisation:
//   E(p)   = <n| V |psi(p-1)>
//   psi(p) = R [ V psi(p-1) - sum_{j=1..p} E(j) psi(p-j) ]
inline std::vector<double> recursion(const Eigen::MatrixXd& v, double w, int n, int max_order) {
  const int dim = static_cast<int>(v.rows());
  const Eigen::VectorXd r = resolvent(w, n, dim);
  std::vector<Eigen::VectorXd> psi{Eigen::VectorXd::Unit(dim, n)};
  std::vector<double> e{0.0};
  for (int p = 1; p <= max_order; ++p) {
    e.push_back(v.row(n).dot(psi[static_cast<std::size_t>(p - 1)]));
    Eigen::VectorXd rhs = v * psi[static_cast<std::size_t>(p - 1)];
    for (int j = 1; j <= p; ++j)
      rhs -= e[static_cast<std::size_t>(j)] * psi[static_cast<std::size_t>(p - j)];
    psi.push_back(r.cwiseProduct(rhs));
  }
  return {e.begin() + 1, e.end()};
}

// Textbook closed sums, used to validate the recursion.
inline double second_order(const Eigen::MatrixXd& v, double w, int n) {
  const Eigen::VectorXd r = resolvent(w, n, static_cast<int>(v.rows()));
  double sum = 0.0;
  for (int m = 0; m < v.rows(); ++m) sum += v(n, m) * v(m, n) * r(m);
  return sum;
}

inline double third_order(const Eigen::MatrixXd& v, double w, int n) {
  const int dim = static_cast<int>(v.rows());
  const Eigen::VectorXd r = resolvent(w, n, dim);
  double sum = 0.0;
  double norm = 0.0;
  for (int m = 0; m < dim; ++m) {
    if (m == n) continue;
    for (int k = 0; k < dim; ++k) {
      if (k == n) continue;
      sum += v(n, m) * v(m, k) * v(k, n) * r(m) * r(k);
    }
    norm += v(n, m) * v(m, n) * r(m) * r(m);
  }
  return sum - v(n, n) * norm;
}

// Valid when <n|V|n> = 0, which the equal-average construction guarantees.
inline double fourth_order(const Eigen::MatrixXd& v, double w, int n) {
  const int dim = static_cast<int>(v.rows());
  const Eigen::VectorXd r = resolvent(w, n, dim);
  double chain = 0.0;
  for (int k = 0; k < dim; ++k) {
    if (k == n || v(n, k) == 0.0) continue;
    for (int m = 0; m < dim; ++m) {
      if (m == n || v(k, m) == 0.0) continue;
      for (int l = 0; l < dim; ++l) {
        if (l == n) continue;
        chain += v(n, k) * v(k, m) * v(m, l) * v(l, n) * r(k) * r(m) * r(l);
      }
    }
  }
  double norm = 0.0;
  for (int k = 0; k < dim; ++k) norm += v(n, k) * v(k, n) * r(k) * r(k);
  return chain - second_order(v, w, n) * norm;
}

}  // namespace rs

// Corrections through max_order (<= 4) about the H0 of `sol`.  dim = 0
// picks n + 3k + 1.  The series is recomputed with dim + k and the
// truncation flag is raised if any correction moves by more than 1e-10.
inline IPTSeries rs_corrections(const EffectiveSolution& sol, int max_order, int dim = 0) {
  if (max_order < 0 || max_order > kMaxIptOrder)
    throw InvalidArgument(detail::concat("perturbation order must be in [0, ", kMaxIptOrder, "]"));
  if (sol.phase != Phase::SymmetryRestored)
    throw SSBUnsupported(detail::concat(
        "perturbation theory is only provided about the symmetric phase; level ", sol.n,
        " at lambda = ", sol.spec.lambda, " realizes the broken phase"));
  const OscillatorSpec& spec = sol.spec;
  const int n = sol.n;
  if (dim == 0) dim = default_ipt_dim(spec, n);
  if (dim < n + 1) throw InvalidArgument("basis dimension must exceed the level index");

  IPTSeries series;
  series.spec = spec;
  series.n = n;
  series.basis_dim = dim;
  series.w = sol.w;
  series.E0 = sol.E0;
  series.corrections = rs::recursion(perturbation_matrix(sol, dim), sol.w, n, max_order);

  if (max_order > 0) {
    const std::vector<double> enriched =
        rs::recursion(perturbation_matrix(sol, dim + spec.k), sol.w, n, max_order);
    for (std::size_t i = 0; i < enriched.size(); ++i) {
      // Relative to the correction itself, floored so a vanishing term is not amplified.
      const double scale = std::max(std::abs(enriched[i]), 1e-14 * std::abs(sol.E0));
      const double change = scale > 0.0 ? std::abs(enriched[i] - series.corrections[i]) / scale : 0.0;
      series.enrichment_change = std::max(series.enrichment_change, change);
    }
    series.truncation_warning = series.enrichment_change > 1e-10;
  }

  series.partial_sums.push_back(sol.E0);
  for (double c : series.corrections) series.partial_sums.push_back(series.partial_sums.back() + c);
  return series;
}

inline IPTSeries rs_corrections(const OscillatorSpec& spec, int n, int max_order, int dim = 0) {
  return rs_corrections(level_solution(spec, n), max_order, dim);
}

inline double ipt_energy(const OscillatorSpec& spec, int n, int order) {
  return rs_corrections(spec, n, order).energy(order);
}

}  // namespace ngas
