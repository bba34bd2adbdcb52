#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "xychain/spectral.hpp"

namespace xychain {

/// Proper cut (a | b) of n sites. Bit j of the mask refers to the j-th site of
/// the state being cut (site j+1 on a full chain). Canonical form keeps the
/// first site on side a, so each unordered cut has exactly one representative.
class Bipartition {
 public:
  /// Throws ArgumentError unless the mask is nonempty, proper, and canonical.
  Bipartition(int n_sites, std::uint32_t side_a);

  int n_sites() const { return n_sites_; }
  std::uint32_t mask() const { return side_a_; }
  std::uint32_t complement() const { return ((std::uint32_t{1} << n_sites_) - 1u) & ~side_a_; }

  /// Positions (0-based) of the sites on each side.
  std::vector<int> side_a_positions() const;
  std::vector<int> side_b_positions() const;

  /// All 2^(n-1) - 1 canonical cuts in ascending mask order.
  static std::vector<Bipartition> enumerate(int n_sites);

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  int n_sites_;
  std::uint32_t side_a_;
};

/// Reduced state on `keep` (site labels, any order, must be a nonempty subset
/// of rho.sites()).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// rho_a (x) rho_b on the union of their (disjoint) sites.
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// S(rho) = -Tr rho log2 rho in bits. Eigenvalues in [-1e-10, 0) count as zero;
/// anything more negative throws ContractViolation.
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho || sigma) = Tr rho (log2 rho - log2 sigma) in bits. Returns +infinity
/// when rho has weight outside the support of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Product of all single-site marginals.
DensityMatrix product_of_marginals(const DensityMatrix& rho);

/// sum_n S(rho_n) - S(rho).
double total_information(const DensityMatrix& rho);

/// S(rho || rho_1 (x) ... (x) rho_N); equal to total_information.
double total_information_relative(const DensityMatrix& rho);

/// S(rho_a) + S(rho_b) - S(rho) across `cut`.
double cut_mutual_information(const DensityMatrix& rho, const Bipartition& cut);

struct GenuineTotal {
  double bits = 0.0;
  Bipartition cut;
};

/// Minimum over all canonical cuts of the cut mutual information. Ties go to
/// the smallest mask.
GenuineTotal genuine_total(const DensityMatrix& rho);

enum class MeasuredSide { A, B, Best };

struct MeasurementOptimizerConfig {
  int restarts = 16;
  double tolerance = 1e-6;
  int max_evaluations = 4000;  // per restart
  std::uint64_t seed = 20130101;
  MeasuredSide side = MeasuredSide::A;
};

struct ClassicalQuantumSplit {
  double classical = 0.0;  // J
  double quantum = 0.0;    // D
  bool converged = false;
  MeasuredSide measured = MeasuredSide::A;  // A or B; the side that produced J
};

/// J = max over products of single-site projective measurements on the measured
/// side of S(rho_other) - sum_k p_k S(rho_other | k), and D = I(a:b) - J.
ClassicalQuantumSplit genuine_classical_quantum(const DensityMatrix& rho, const Bipartition& cut,
                                                const MeasurementOptimizerConfig& config = {});

/// Conditional-entropy reduction for one fixed measurement: `angles` holds
/// (theta, phi) per measured site, in the order of `measured_positions`.
double classical_correlation_for_angles(const DensityMatrix& rho,
                                        std::span<const int> measured_positions,
                                        std::span<const double> angles);

struct CorrelationReport {
  double total = 0.0;
  double genuine_total = 0.0;
  Bipartition optimal_cut;
  std::optional<double> genuine_classical;
  std::optional<double> genuine_quantum;
};

CorrelationReport analyze_correlations(
    const DensityMatrix& rho,
    const std::optional<MeasurementOptimizerConfig>& discord = std::nullopt);

}  // namespace xychain
