#include "xychain/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "xychain/optimize.hpp"

namespace xychain {

namespace {

constexpr double kNegativeEigenvalueTol = 1e-10;

// Entropy in bits of a spectrum; eigenvalues <= 0 contribute nothing.
double entropy_of_spectrum(const Eigen::VectorXd& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) s -= p(i) * std::log2(p(i));
  }
  return s;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("entropy: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

// Lenient entropy used inside the measurement optimizer, where conditional
// states are renormalized by small probabilities and pick up rounding noise.
double entropy_lenient(const Matrix& m) { return entropy_of_spectrum(hermitian_eigenvalues(m)); }

// Spreads the low bits of `compact` onto the given bit positions.
std::size_t scatter_bits(std::size_t compact, std::span<const int> positions) {
  std::size_t out = 0;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if ((compact >> j) & 1u) out |= std::size_t{1} << positions[j];
  }
  return out;
}

std::vector<std::size_t> scatter_table(std::span<const int> positions) {
  std::vector<std::size_t> table(std::size_t{1} << positions.size());
  for (std::size_t c = 0; c < table.size(); ++c) table[c] = scatter_bits(c, positions);
  return table;
}

std::vector<int> labels_at(const DensityMatrix& rho, std::span<const int> positions) {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(rho.sites()[static_cast<std::size_t>(p)]);
  return out;
}

// Reduced matrix on `keep_positions` (ascending), skipping invariant checks.
Matrix reduce(const Matrix& m, int n_positions, std::span<const int> keep_positions) {
  std::vector<int> traced;
  for (int p = 0; p < n_positions; ++p) {
    if (!std::binary_search(keep_positions.begin(), keep_positions.end(), p)) traced.push_back(p);
  }
  const auto keep_map = scatter_table(keep_positions);
  const auto traced_map = scatter_table(traced);
  const auto dk = static_cast<Eigen::Index>(keep_map.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (std::size_t t : traced_map) {
        acc += m(static_cast<Eigen::Index>(keep_map[i] | t),
                 static_cast<Eigen::Index>(keep_map[j] | t));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

double entropy_of_positions(const DensityMatrix& rho, std::span<const int> positions) {
  return von_neumann_entropy(partial_trace(rho, labels_at(rho, positions)));
}

// In-place W^dagger rho W with W = u on bit `q`.
void rotate_qubit(Matrix& m, int q, const Eigen::Matrix2cd& u) {
  const std::size_t bit = std::size_t{1} << q;
  const auto dim = static_cast<std::size_t>(m.rows());
  for (std::size_t x0 = 0; x0 < dim; ++x0) {
    if (x0 & bit) continue;
    const auto r0 = static_cast<Eigen::Index>(x0);
    const auto r1 = static_cast<Eigen::Index>(x0 | bit);
    const Eigen::RowVectorXcd row0 = m.row(r0);
    const Eigen::RowVectorXcd row1 = m.row(r1);
    m.row(r0) = std::conj(u(0, 0)) * row0 + std::conj(u(1, 0)) * row1;
    m.row(r1) = std::conj(u(0, 1)) * row0 + std::conj(u(1, 1)) * row1;
  }
  for (std::size_t y0 = 0; y0 < dim; ++y0) {
    if (y0 & bit) continue;
    const auto c0 = static_cast<Eigen::Index>(y0);
    const auto c1 = static_cast<Eigen::Index>(y0 | bit);
    const Eigen::VectorXcd col0 = m.col(c0);
    const Eigen::VectorXcd col1 = m.col(c1);
    m.col(c0) = col0 * u(0, 0) + col1 * u(1, 0);
    m.col(c1) = col0 * u(0, 1) + col1 * u(1, 1);
  }
}

// Columns are the two measurement directions +-n(theta, phi).
Eigen::Matrix2cd measurement_basis(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e = std::polar(1.0, phi);
  Eigen::Matrix2cd u;
  u << c, -std::conj(e) * s,
       e * s, c;
  return u;
}

struct SideResult {
  double classical = 0.0;
  bool converged = false;
};

SideResult optimize_side(const DensityMatrix& rho, const std::vector<int>& measured,
                         const MeasurementOptimizerConfig& config) {
  const std::size_t n_angles = 2 * measured.size();
  auto objective = [&](const std::vector<double>& x) {
    return -classical_correlation_for_angles(rho, measured, x);
  };

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> polar(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> azimuth(0.0, 2.0 * std::numbers::pi);
  NelderMeadOptions options;
  options.tolerance = config.tolerance;
  options.max_evaluations = config.max_evaluations;

  SideResult best{-std::numeric_limits<double>::infinity(), false};
  const int restarts = std::max(1, config.restarts);
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> x0(n_angles, 0.0);
    if (r > 0) {
      for (std::size_t i = 0; i < n_angles; i += 2) {
        x0[i] = polar(rng);
        x0[i + 1] = azimuth(rng);
      }
    }
    const auto run = nelder_mead(objective, std::move(x0), options);
    best.converged = best.converged || run.converged;
    best.classical = std::max(best.classical, -run.value);
  }
  return best;
}

}  // namespace

Bipartition::Bipartition(int n_sites, std::uint32_t side_a) : n_sites_(n_sites), side_a_(side_a) {
  if (n_sites < 2 || n_sites > 31) throw ArgumentError("Bipartition: n_sites must be in [2, 31]");
  const std::uint32_t all = (std::uint32_t{1} << n_sites) - 1u;
  if (side_a == 0 || (side_a & ~all) != 0 || side_a == all) {
    throw ArgumentError("Bipartition: side a must be a nonempty proper subset, got mask " +
                        std::to_string(side_a));
  }
  if ((side_a & 1u) == 0) {
    throw ArgumentError("Bipartition: canonical form requires the first site on side a");
  }
}

std::vector<int> Bipartition::side_a_positions() const {
  std::vector<int> out;
  for (int p = 0; p < n_sites_; ++p) {
    if ((side_a_ >> p) & 1u) out.push_back(p);
  }
  return out;
}

std::vector<int> Bipartition::side_b_positions() const {
  std::vector<int> out;
  for (int p = 0; p < n_sites_; ++p) {
    if (!((side_a_ >> p) & 1u)) out.push_back(p);
  }
  return out;
}

std::vector<Bipartition> Bipartition::enumerate(int n_sites) {
  if (n_sites < 2 || n_sites > 31) throw ArgumentError("Bipartition: n_sites must be in [2, 31]");
  std::vector<Bipartition> out;
  const std::uint32_t all = (std::uint32_t{1} << n_sites) - 1u;
  for (std::uint32_t mask = 1; mask < all; mask += 2) out.emplace_back(n_sites, mask);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  if (keep.empty()) throw ArgumentError("partial_trace: keep set is empty");
  std::vector<int> positions;
  positions.reserve(keep.size());
  for (int site : keep) {
    const auto it = std::find(rho.sites().begin(), rho.sites().end(), site);
    if (it == rho.sites().end()) {
      throw ArgumentError("partial_trace: site " + std::to_string(site) + " not in state");
    }
    positions.push_back(static_cast<int>(it - rho.sites().begin()));
  }
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw ArgumentError("partial_trace: duplicate site in keep set");
  }
  Matrix reduced = reduce(rho.matrix(), rho.n_sites(), positions);
  reduced = 0.5 * (reduced + reduced.adjoint()).eval();
  return DensityMatrix(labels_at(rho, positions), std::move(reduced));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> sites = a.sites();
  sites.insert(sites.end(), b.sites().begin(), b.sites().end());
  std::sort(sites.begin(), sites.end());
  if (std::adjacent_find(sites.begin(), sites.end()) != sites.end()) {
    throw ArgumentError("tensor_product: states share a site");
  }
  std::vector<int> pos_a;
  std::vector<int> pos_b;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const bool in_a = std::binary_search(a.sites().begin(), a.sites().end(), sites[i]);
    (in_a ? pos_a : pos_b).push_back(static_cast<int>(i));
  }
  const auto map_a = scatter_table(pos_a);
  const auto map_b = scatter_table(pos_b);
  const Eigen::Index dim = Eigen::Index{1} << sites.size();
  Matrix out(dim, dim);
  for (std::size_t ia = 0; ia < map_a.size(); ++ia) {
    for (std::size_t ib = 0; ib < map_b.size(); ++ib) {
      const auto row = static_cast<Eigen::Index>(map_a[ia] | map_b[ib]);
      for (std::size_t ja = 0; ja < map_a.size(); ++ja) {
        for (std::size_t jb = 0; jb < map_b.size(); ++jb) {
          const auto col = static_cast<Eigen::Index>(map_a[ja] | map_b[jb]);
          out(row, col) = a.matrix()(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ja)) *
                          b.matrix()(static_cast<Eigen::Index>(ib), static_cast<Eigen::Index>(jb));
        }
      }
    }
  }
  return DensityMatrix(std::move(sites), std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::VectorXd p = hermitian_eigenvalues(rho.matrix());
  if (p(0) < -kNegativeEigenvalueTol) {
    throw ContractViolation("von_neumann_entropy: eigenvalue " + std::to_string(p(0)) +
                            " below -1e-10");
  }
  return entropy_of_spectrum(p);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.sites() != sigma.sites()) throw ArgumentError("relative_entropy: site sets differ");
  constexpr double kSupportTol = 1e-12;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sigma.matrix());
  if (solver.info() != Eigen::Success) {
    throw NumericalError("relative_entropy: eigensolver did not converge");
  }
  const Matrix weights = solver.eigenvectors().adjoint() * rho.matrix() * solver.eigenvectors();
  double cross = 0.0;  // Tr rho log2 sigma
  for (Eigen::Index k = 0; k < weights.rows(); ++k) {
    const double lambda = solver.eigenvalues()(k);
    const double w = weights(k, k).real();
    if (lambda <= kSupportTol) {
      if (w > 1e-10) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += w * std::log2(lambda);
  }
  const double value = -von_neumann_entropy(rho) - cross;
  return value < 0.0 && value > -1e-9 ? 0.0 : value;
}

DensityMatrix product_of_marginals(const DensityMatrix& rho) {
  const int first = rho.sites().front();
  DensityMatrix product = partial_trace(rho, std::span<const int>(&first, 1));
  for (std::size_t i = 1; i < rho.sites().size(); ++i) {
    const int site = rho.sites()[i];
    product = tensor_product(product, partial_trace(rho, std::span<const int>(&site, 1)));
  }
  return product;
}

double total_information(const DensityMatrix& rho) {
  if (rho.n_sites() < 2) throw ArgumentError("total_information: needs at least two sites");
  double sum = 0.0;
  for (int site : rho.sites()) {
    sum += von_neumann_entropy(partial_trace(rho, std::span<const int>(&site, 1)));
  }
  return sum - von_neumann_entropy(rho);
}

double total_information_relative(const DensityMatrix& rho) {
  if (rho.n_sites() < 2) throw ArgumentError("total_information: needs at least two sites");
  return relative_entropy(rho, product_of_marginals(rho));
}

double cut_mutual_information(const DensityMatrix& rho, const Bipartition& cut) {
  if (cut.n_sites() != rho.n_sites()) throw ArgumentError("cut does not match state size");
  return entropy_of_positions(rho, cut.side_a_positions()) +
         entropy_of_positions(rho, cut.side_b_positions()) - von_neumann_entropy(rho);
}

GenuineTotal genuine_total(const DensityMatrix& rho) {
  const int n = rho.n_sites();
  if (n < 2) throw ArgumentError("genuine_total: needs at least two sites");
  const double global = von_neumann_entropy(rho);
  std::optional<GenuineTotal> best;
  for (const auto& cut : Bipartition::enumerate(n)) {
    const double value = entropy_of_positions(rho, cut.side_a_positions()) +
                         entropy_of_positions(rho, cut.side_b_positions()) - global;
    // Masks arrive in ascending order; a later cut must win by more than noise.
    if (!best || value < best->bits - 1e-12) best = GenuineTotal{value, cut};
  }
  return *best;
}

double classical_correlation_for_angles(const DensityMatrix& rho,
                                        std::span<const int> measured_positions,
                                        std::span<const double> angles) {
  if (angles.size() != 2 * measured_positions.size()) {
    throw ArgumentError("classical_correlation_for_angles: need two angles per measured site");
  }
  const int n = rho.n_sites();
  std::vector<int> measured(measured_positions.begin(), measured_positions.end());
  std::sort(measured.begin(), measured.end());
  std::vector<int> other;
  for (int p = 0; p < n; ++p) {
    if (!std::binary_search(measured.begin(), measured.end(), p)) other.push_back(p);
  }
  if (measured.empty() || other.empty()) {
    throw ArgumentError("classical_correlation_for_angles: both sides must be nonempty");
  }

  Matrix rotated = rho.matrix();
  for (std::size_t i = 0; i < measured_positions.size(); ++i) {
    rotate_qubit(rotated, measured_positions[i], measurement_basis(angles[2 * i], angles[2 * i + 1]));
  }

  const double unconditioned = entropy_lenient(reduce(rho.matrix(), n, other));
  const auto outcome_map = scatter_table(measured);
  const auto other_map = scatter_table(other);
  const auto d_other = static_cast<Eigen::Index>(other_map.size());
  double conditional = 0.0;
  Matrix block(d_other, d_other);
  for (std::size_t outcome : outcome_map) {
    for (Eigen::Index i = 0; i < d_other; ++i) {
      for (Eigen::Index j = 0; j < d_other; ++j) {
        block(i, j) = rotated(static_cast<Eigen::Index>(outcome | other_map[i]),
                              static_cast<Eigen::Index>(outcome | other_map[j]));
      }
    }
    const double p = block.trace().real();
    if (p < 1e-14) continue;
    block /= p;
    conditional += p * entropy_lenient(0.5 * (block + block.adjoint()));
  }
  return unconditioned - conditional;
}

ClassicalQuantumSplit genuine_classical_quantum(const DensityMatrix& rho, const Bipartition& cut,
                                                const MeasurementOptimizerConfig& config) {
  if (cut.n_sites() != rho.n_sites()) throw ArgumentError("cut does not match state size");
  const double mutual = cut_mutual_information(rho, cut);

  auto run = [&](MeasuredSide side) {
    const auto positions =
        side == MeasuredSide::A ? cut.side_a_positions() : cut.side_b_positions();
    const SideResult r = optimize_side(rho, positions, config);
    return ClassicalQuantumSplit{r.classical, 0.0, r.converged, side};
  };

  ClassicalQuantumSplit out;
  if (config.side == MeasuredSide::Best) {
    const auto a = run(MeasuredSide::A);
    const auto b = run(MeasuredSide::B);
    out = b.classical > a.classical ? b : a;
  } else {
    out = run(config.side);
  }
  out.quantum = mutual - out.classical;
  return out;
}

CorrelationReport analyze_correlations(const DensityMatrix& rho,
                                       const std::optional<MeasurementOptimizerConfig>& discord) {
  const GenuineTotal genuine = genuine_total(rho);
  CorrelationReport report{total_information(rho), genuine.bits, genuine.cut, std::nullopt,
                           std::nullopt};
  if (discord) {
    const auto split = genuine_classical_quantum(rho, genuine.cut, *discord);
    report.genuine_classical = split.classical;
    report.genuine_quantum = split.quantum;
  }
  return report;
}

}  // namespace xychain
