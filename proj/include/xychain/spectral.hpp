#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xychain/operators.hpp"

namespace xychain {

// Eigenvalues closer than this (absolute, units of J) are treated as degenerate.
inline constexpr double kDegeneracyTol = 1e-9;

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix eigenvectors;          // columns, orthonormal
  std::optional<std::vector<int>> parity_labels;
};

/// Full dense diagonalization. Deterministic for identical input.
/// Throws NumericalError if the solver does not converge.
SpectralDecomposition eigh(const HermitianOperator& op);

/// Rotates each degenerate cluster (gap < degeneracy_tol) into simultaneous
/// eigenvectors of `parity` and attaches +-1 labels. Requires [H, P] = 0.
/// Throws NumericalError if any labelled vector still mixes parity by > 1e-8.
SpectralDecomposition label_parity(SpectralDecomposition decomp,
                                   const HermitianOperator& parity,
                                   double degeneracy_tol = kDegeneracyTol);

struct SectorEnergies {
  double even = 0.0;
  double odd = 0.0;
  double gap() const { return odd - even; }
};

/// Lowest eigenvalue in the P = +1 and P = -1 blocks of H(spec).
SectorEnergies sector_ground_energies(const ChainSpec& spec);

/// Positive semidefinite, unit-trace operator on an ordered set of sites.
///
/// Local basis index bit j refers to sites()[j]; with sites 1..N this is the
/// same convention as the operators module. The constructor checks the
/// Hermiticity and trace invariants; positivity costs a diagonalization and is
/// checked by validate() and by every entropy evaluation.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<int> sites, Matrix entries);

  /// Sites 1..n.
  static DensityMatrix on_chain(Matrix entries);
  static DensityMatrix pure(const Vector& amplitudes);

  const std::vector<int>& sites() const { return sites_; }
  const Matrix& matrix() const { return entries_; }
  int n_sites() const { return static_cast<int>(sites_.size()); }
  Eigen::Index dim() const { return entries_.rows(); }

  /// Full invariant check including minimum eigenvalue >= -1e-10.
  void validate() const;

 private:
  std::vector<int> sites_;
  Matrix entries_;
};

/// rho = exp(-H/T) / Z with Boltzmann weights shifted by the ground energy.
/// T = 0 gives the uniform mixture over the ground manifold (gap < degeneracy_tol).
DensityMatrix gibbs_state(const SpectralDecomposition& decomp, double temperature,
                          double degeneracy_tol = kDegeneracyTol);

struct CrossingSet {
  std::vector<double> fields;  // strictly increasing
  double gamma = 0.0;
  int n_sites = 0;
  std::vector<double> tangencies;  // grid points where the gap touches zero without changing sign
};

struct CrossingSearch {
  std::pair<double, double> h_range{0.0, 1.0};
  int grid_points = 512;
  double bisection_tol = 1e-8;
  // |gap| at or below this counts as an exact degeneracy.
  double zero_tol = 1e-10;
};

/// Zeros of `gap` on [start, stop): sign changes between grid cells are
/// refined by bisection; an exact zero at `start` counts as a crossing,
/// one at `stop` does not.
std::vector<double> locate_crossings(const std::function<double(double)>& gap,
                                     const CrossingSearch& search,
                                     std::vector<double>* tangencies = nullptr);

/// Parity level crossings of the dense spectrum, gap(h) = E0_odd - E0_even.
CrossingSet find_parity_crossings(int n_sites, double gamma,
                                  const CrossingSearch& search = {},
                                  double coupling = 1.0);

}  // namespace xychain
