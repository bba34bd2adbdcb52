#pragma once

// Test-only reference implementations. These deliberately take different
// routes from the library (Kronecker products, explicit basis vectors) so
// that agreement is meaningful.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Matrix sigma(char axis) {
  Matrix m(2, 2);
  switch (axis) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

// Site 1 is the least significant bit, i.e. the rightmost Kronecker factor.
inline Matrix embed(const Matrix& single, int site, int n) {
  Matrix out = Matrix::Identity(1, 1);
  for (int s = n; s >= 1; --s) out = kron(out, s == site ? single : Matrix::Identity(2, 2));
  return out;
}

inline Matrix hamiltonian(int n, double j, double g, double h) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  for (int s = 1; s <= n; ++s) {
    const int t = s % n + 1;
    m -= j * ((1 + g) / 2 * embed(sigma('x'), s, n) * embed(sigma('x'), t, n) +
              (1 - g) / 2 * embed(sigma('y'), s, n) * embed(sigma('y'), t, n));
    m -= h * embed(sigma('z'), s, n);
  }
  return m;
}

// Reduced state by summing <t| rho |t> over explicit basis vectors of the
// traced sites (0-based positions in `keep`, ascending).
inline Matrix partial_trace(const Matrix& rho, int n, const std::vector<int>& keep) {
  std::vector<int> traced;
  for (int p = 0; p < n; ++p) {
    bool k = false;
    for (int q : keep) k = k || q == p;
    if (!k) traced.push_back(p);
  }
  const Eigen::Index dk = Eigen::Index{1} << keep.size();
  Matrix out = Matrix::Zero(dk, dk);
  const Eigen::Index dim = Eigen::Index{1} << n;
  for (Eigen::Index row = 0; row < dim; ++row) {
    for (Eigen::Index col = 0; col < dim; ++col) {
      bool same_traced = true;
      for (int p : traced) same_traced = same_traced && (((row >> p) & 1) == ((col >> p) & 1));
      if (!same_traced) continue;
      Eigen::Index r = 0;
      Eigen::Index c = 0;
      for (std::size_t j = 0; j < keep.size(); ++j) {
        r |= ((row >> keep[j]) & 1) << j;
        c |= ((col >> keep[j]) & 1) << j;
      }
      out(r, c) += rho(row, col);
    }
  }
  return out;
}

inline double entropy_bits(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> s(rho, Eigen::EigenvaluesOnly);
  double out = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues().size(); ++i) {
    const double p = s.eigenvalues()(i);
    if (p > 1e-15) out -= p * std::log2(p);
  }
  return out;
}

// Minimum over all unordered cuts, enumerated by subsets without canonical
// masks: every subset A with 0 < |A| < n, both A and its complement visited.
inline double genuine_total(const Matrix& rho, int n) {
  const double global = entropy_bits(rho);
  double best = 1e300;
  for (std::uint32_t subset = 1; subset + 1 < (1u << n); ++subset) {
    std::vector<int> a;
    std::vector<int> b;
    for (int p = 0; p < n; ++p) ((subset >> p) & 1 ? a : b).push_back(p);
    const double v = entropy_bits(partial_trace(rho, n, a)) +
                     entropy_bits(partial_trace(rho, n, b)) - global;
    best = std::min(best, v);
  }
  return best;
}

inline double binary_entropy(double p) {
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

// Random full-rank (or rank-limited) density matrix: G G^dagger / Tr.
inline Matrix random_density(int n, std::mt19937_64& rng, int rank = 0) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index cols = rank > 0 ? rank : dim;
  std::normal_distribution<double> gauss;
  Matrix g(dim, cols);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

inline Eigen::VectorXcd random_pure(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd psi(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) = Complex(gauss(rng), gauss(rng));
  return psi / psi.norm();
}

inline Eigen::Matrix2cd random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::Matrix2cd g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  return qr.householderQ();
}

}  // namespace oracle
