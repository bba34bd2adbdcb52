#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <bit>

#include <Eigen/Dense>

#include "xychain/errors.hpp"

namespace xychain {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense representation only; 2^12 = 4096 is the largest Hilbert space we build.
inline constexpr int kMaxSites = 12;

// Thermodynamic-limit critical field. Only used to annotate reports.
inline constexpr double kCriticalField = 1.0;

/// Parameters of one periodic XY chain in a transverse field.
///
/// Energies and temperature are in units of the coupling with k_B = 1.
struct ChainSpec {
  int n_sites = 4;
  double coupling = 1.0;
  double anisotropy = 0.0;
  double field = 0.0;
  double temperature = 0.0;

  /// Throws ArgumentError unless 2 <= n_sites <= kMaxSites,
  /// anisotropy in [0, 1] and temperature >= 0 (all finite).
  void validate() const;

  std::size_t hilbert_dim() const { return std::size_t{1} << n_sites; }
};

enum class Axis { X, Y, Z };

/// Dense complex matrix that is Hermitian to within 1e-12 of its largest entry.
class HermitianOperator {
 public:
  /// Throws ContractViolation if the matrix is not square or not Hermitian.
  explicit HermitianOperator(Matrix entries);

  const Matrix& matrix() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }

 private:
  Matrix entries_;
};

/// Normalized complex amplitude vector.
class StateVector {
 public:
  /// Throws ContractViolation if | ||amplitudes|| - 1 | > 1e-12.
  explicit StateVector(Vector amplitudes);

  const Vector& amplitudes() const { return amplitudes_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

  double expectation(const HermitianOperator& op) const;

 private:
  Vector amplitudes_;
};

// Basis convention used throughout the library: sites are numbered 1..N and
// basis index b = sum_n s_n 2^(n-1), where s_n = 0 is spin up (sigma_z = +1)
// and s_n = 1 is spin down.

/// +1 for an even number of down spins in `basis_index`, -1 otherwise.
inline int parity_of(std::size_t basis_index) {
  return (std::popcount(basis_index) % 2 == 0) ? 1 : -1;
}

/// sigma^axis acting on `site` (1-based), identity elsewhere.
HermitianOperator pauli_on_site(Axis axis, int site, int n_sites);

/// H = -J sum_{n=1}^{N} [(1+g)/2 sx_n sx_{n+1} + (1-g)/2 sy_n sy_{n+1}] - h sum_n sz_n
/// with site N+1 identified with site 1. The sum runs literally over n = 1..N,
/// so for N = 2 the single bond appears twice.
HermitianOperator build_hamiltonian(const ChainSpec& spec);

/// P = prod_l sz_l, diagonal with entries +-1.
HermitianOperator build_parity(int n_sites);

/// h_F = sqrt(1 - gamma^2). Throws ArgumentError for gamma outside [0, 1].
double factorizing_field(double gamma);

/// alpha = arccos sqrt((1 - gamma) / (1 + gamma)).
double factorized_angle(double gamma);

/// prod_l (cos(alpha/2)|up> + sign sin(alpha/2)|down>), sign = +1 or -1.
StateVector factorized_state(int n_sites, double gamma, int sign);

}  // namespace xychain
