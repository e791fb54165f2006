#pragma once

// Symmetric banded matrices in a truncated oscillator (Fock) basis.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "ngas/error.hpp"
#include "ngas/model.hpp"

namespace ngas {

// Symmetric matrix stored by its upper diagonals: diag(d)[i] = M(i, i + d).
class BandMatrix {
 public:
  BandMatrix() = default;
  BandMatrix(int dim, int bandwidth) : dim_(dim), bands_(static_cast<std::size_t>(bandwidth) + 1) {
    for (int d = 0; d <= bandwidth; ++d)
      bands_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(std::max(dim - d, 0)), 0.0);
  }

  int dim() const { return dim_; }
  int bandwidth() const { return static_cast<int>(bands_.size()) - 1; }

  double operator()(int i, int j) const {
    if (i > j) std::swap(i, j);
    const int d = j - i;
    if (d > bandwidth() || j >= dim_) return 0.0;
    return bands_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
  }
  // Sets M(i, j) and M(j, i).
  void set(int i, int j, double v) {
    if (i > j) std::swap(i, j);
    bands_[static_cast<std::size_t>(j - i)][static_cast<std::size_t>(i)] = v;
  }

  BandMatrix& operator+=(const BandMatrix& other) { return axpy(1.0, other); }

  // this += a * other
  BandMatrix& axpy(double a, const BandMatrix& other) {
    if (other.dim_ != dim_) throw InvalidArgument("BandMatrix dimension mismatch");
    if (other.bandwidth() > bandwidth()) {
      const int old = bandwidth();
      bands_.resize(static_cast<std::size_t>(other.bandwidth()) + 1);
      for (int d = old + 1; d <= other.bandwidth(); ++d)
        bands_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(std::max(dim_ - d, 0)), 0.0);
    }
    for (int d = 0; d <= other.bandwidth(); ++d) {
      auto& dst = bands_[static_cast<std::size_t>(d)];
      const auto& src = other.bands_[static_cast<std::size_t>(d)];
      for (std::size_t i = 0; i < src.size(); ++i) dst[i] += a * src[i];
    }
    return *this;
  }

  BandMatrix& scale(double a) {
    for (auto& band : bands_)
      for (double& v : band) v *= a;
    return *this;
  }

  // Leading dim x dim block.
  BandMatrix leading(int dim) const {
    BandMatrix out(dim, bandwidth());
    for (int d = 0; d <= bandwidth(); ++d)
      for (int i = 0; i + d < dim; ++i) out.set(i, i + d, (*this)(i, i + d));
    return out;
  }

  Eigen::MatrixXd to_dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
    for (int d = 0; d <= bandwidth(); ++d)
      for (int i = 0; i + d < dim_; ++i) {
        const double v = bands_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
        m(i, i + d) = v;
        m(i + d, i) = v;
      }
    return m;
  }

  // Rows/columns with index parity `parity` (0 even, 1 odd) as a dense block.
  Eigen::MatrixXd parity_block(int parity) const {
    const int size = (dim_ - parity + 1) / 2;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
    for (int a = 0; a < size; ++a)
      for (int b = a; b < size; ++b) {
        const double v = (*this)(2 * a + parity, 2 * b + parity);
        m(a, b) = v;
        m(b, a) = v;
      }
    return m;
  }

 private:
  int dim_ = 0;
  std::vector<std::vector<double>> bands_;
};

// <m| f^k |n> for f = (b + b^dagger) / sqrt(2w) on the first `dim` Fock states.
// Built as successive products with the tridiagonal f in dimension dim + k so
// the retained block carries no truncation error.
inline BandMatrix position_power_matrix(int k, double w, int dim) {
  if (dim < 1) throw InvalidArgument("dimension must be >= 1");
  if (k < 0 || k > 8) throw InvalidArgument("position power must be in [0, 8]");
  if (!(w > 0.0)) throw InvalidArgument("frequency w must be > 0");
  const int big = dim + k;
  std::vector<double> hop(static_cast<std::size_t>(big));  // f(j, j+1)
  for (int j = 0; j < big; ++j) hop[static_cast<std::size_t>(j)] = std::sqrt((j + 1.0) / (2.0 * w));

  BandMatrix power(big, 0);
  for (int i = 0; i < big; ++i) power.set(i, i, 1.0);
  for (int step = 1; step <= k; ++step) {
    // (P f)(i, j) = P(i, j-1) f(j-1, j) + P(i, j+1) f(j+1, j), f has zero diagonal.
    BandMatrix next(big, step);
    for (int i = 0; i < big; ++i)
      for (int j = i; j <= std::min(i + step, big - 1); ++j) {
        double v = 0.0;
        if (j >= 1) v += power(i, j - 1) * hop[static_cast<std::size_t>(j - 1)];
        if (j + 1 < big) v += power(i, j + 1) * hop[static_cast<std::size_t>(j)];
        next.set(i, j, v);
      }
    power = std::move(next);
  }
  return power.leading(dim);
}

// p^2 for p = i sqrt(w/2)(b^dagger - b).
inline BandMatrix momentum_squared_matrix(double w, int dim) {
  BandMatrix m(dim, 2);
  for (int i = 0; i < dim; ++i) m.set(i, i, w * (i + 0.5));
  for (int i = 0; i + 2 < dim; ++i) m.set(i, i + 2, -0.5 * w * std::sqrt((i + 1.0) * (i + 2.0)));
  return m;
}

}  // namespace ngas
