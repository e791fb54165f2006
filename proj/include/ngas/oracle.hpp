#pragma once

// Reference eigenvalues from diagonalizing H in a truncated Fock basis of
// frequency basis_w.  Every Hamiltonian here is even in f, so H splits into
// even and odd parity blocks that are diagonalized separately.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "ngas/error.hpp"
#include "ngas/fock.hpp"
#include "ngas/model.hpp"
#include "ngas/spectrum.hpp"

namespace ngas {

inline constexpr int kOracleBlockCap = 4096;

struct OracleSpectrum {
  OscillatorSpec spec;
  double basis_w = 1.0;
  int dim = 0;
  std::vector<double> eigenvalues;           // levels 0..n_max
  std::vector<double> convergence_estimate;  // |E(dim) - E(dim/2)| per level
};

// H = p^2/2 + g f^2/2 + lambda f^k in the Fock basis of frequency basis_w.
inline BandMatrix hamiltonian_matrix(const OscillatorSpec& spec, double basis_w, int dim) {
  validate(spec);
  if (dim < 4) throw InvalidArgument(detail::concat("oracle basis dimension must be >= 4, got ", dim));
  if (!(basis_w > 0.0)) throw InvalidArgument("basis frequency must be > 0");
  BandMatrix h = momentum_squared_matrix(basis_w, dim).scale(0.5);
  h.axpy(0.5 * spec.g, position_power_matrix(2, basis_w, dim));
  if (spec.lambda != 0.0) h.axpy(spec.lambda, position_power_matrix(spec.k, basis_w, dim));
  return h;
}

// The `count` smallest eigenvalues, ascending.  The solve runs in long double:
// the backward error of a dense symmetric solver scales with the matrix norm,
// which grows like dim^(k/2), and double precision stalls near 1e-10 relative.
inline std::vector<double> lowest_eigenvalues(const Eigen::MatrixXd& m, int count) {
  if (m.rows() != m.cols()) throw InvalidArgument("eigenvalue input must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-14 * scale)
    throw InvalidArgument("eigenvalue input is not symmetric");
  using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::SelfAdjointEigenSolver<MatrixXld> solver(m.cast<long double>(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalFailure("symmetric eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  const int take = std::min<int>(count, static_cast<int>(ev.size()));
  std::vector<double> out;
  for (int i = 0; i < take; ++i) out.push_back(static_cast<double>(ev(i)));
  return out;
}

inline std::vector<double> lowest_eigenvalues(const BandMatrix& m, int count) {
  std::vector<double> out;
  for (int parity = 0; parity < 2; ++parity) {
    const std::vector<double> block = lowest_eigenvalues(m.parity_block(parity), count);
    out.insert(out.end(), block.begin(), block.end());
  }
  std::sort(out.begin(), out.end());
  out.resize(std::min<std::size_t>(out.size(), static_cast<std::size_t>(count)));
  return out;
}

namespace detail {

inline double default_basis_frequency(const OscillatorSpec& spec) {
  return level_solution(spec, 0).w;
}

}  // namespace detail

// Doubles the basis from 4 (n_max + 1) until every level <= n_max moves by
// at most rel_tol * max(1, |E|) between successive sizes.  The absolute floor
// matters for levels that sit at zero (exact SUSY ground states).
inline OracleSpectrum exact_levels(const OscillatorSpec& spec, int n_max, double rel_tol = 1e-10,
                                   std::optional<double> basis_w = std::nullopt,
                                   int block_cap = kOracleBlockCap) {
  validate(spec);
  if (n_max < 0) throw InvalidArgument("n_max must be >= 0");
  if (!(rel_tol >= 1e-12)) throw InvalidArgument(detail::concat("rel_tol must be >= 1e-12, got ", rel_tol));
  OracleSpectrum out;
  out.spec = spec;
  out.basis_w = basis_w ? *basis_w : detail::default_basis_frequency(spec);
  const int count = n_max + 1;

  int dim = std::max(4, 4 * count);
  std::vector<double> prev = lowest_eigenvalues(hamiltonian_matrix(spec, out.basis_w, dim), count);
  while (true) {
    const int next_dim = 2 * dim;
    if (next_dim > 2 * block_cap) {
      throw NotConverged(detail::concat("oracle did not converge within ", 2 * block_cap,
                                        " basis states (k = ", spec.k, ", g = ", spec.g,
                                        ", lambda = ", spec.lambda, ", n_max = ", n_max, ")"),
                         prev.empty() ? 0.0 : prev.back());
    }
    std::vector<double> cur = lowest_eigenvalues(hamiltonian_matrix(spec, out.basis_w, next_dim), count);
    bool converged = true;
    std::vector<double> est(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      const std::size_t u = static_cast<std::size_t>(i);
      est[u] = std::abs(cur[u] - prev[u]);
      if (est[u] > rel_tol * std::max(1.0, std::abs(cur[u]))) converged = false;
    }
    dim = next_dim;
    prev = std::move(cur);
    if (converged) {
      out.dim = dim;
      out.eigenvalues = std::move(prev);
      out.convergence_estimate = std::move(est);
      return out;
    }
  }
}

}  // namespace ngas
