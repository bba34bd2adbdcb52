#include "xychain/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace xychain {

SpectralDecomposition eigh(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigh: solver did not converge for dimension " +
                         std::to_string(op.dim()) + " (info " +
                         std::to_string(static_cast<int>(solver.info())) + ")");
  }
  return {solver.eigenvalues(), solver.eigenvectors(), std::nullopt};
}

SpectralDecomposition label_parity(SpectralDecomposition decomp,
                                   const HermitianOperator& parity,
                                   double degeneracy_tol) {
  if (!(degeneracy_tol > 0.0)) throw ArgumentError("degeneracy_tol must be > 0");
  const Eigen::Index dim = decomp.eigenvalues.size();
  if (parity.dim() != dim) throw ArgumentError("label_parity: dimension mismatch");

  std::vector<int> labels(static_cast<std::size_t>(dim), 0);
  Eigen::Index start = 0;
  while (start < dim) {
    Eigen::Index stop = start + 1;
    while (stop < dim &&
           decomp.eigenvalues(stop) - decomp.eigenvalues(stop - 1) < degeneracy_tol) {
      ++stop;
    }
    const Eigen::Index width = stop - start;
    auto block = decomp.eigenvectors.middleCols(start, width);
    const Matrix projected = block.adjoint() * parity.matrix() * block;
    Eigen::SelfAdjointEigenSolver<Matrix> inner(
        Matrix(0.5 * (projected + projected.adjoint())));
    if (inner.info() != Eigen::Success) {
      throw NumericalError("label_parity: cluster diagonalization failed");
    }
    const Matrix rotated = block * inner.eigenvectors();
    block = rotated;
    for (Eigen::Index c = 0; c < width; ++c) {
      const int label = inner.eigenvalues()(c) >= 0.0 ? 1 : -1;
      const auto v = decomp.eigenvectors.col(start + c);
      const double residual = (parity.matrix() * v - static_cast<double>(label) * v).norm();
      if (residual > 1e-8) {
        throw NumericalError("label_parity: residual parity mixing " +
                             std::to_string(residual) + " at eigenvalue index " +
                             std::to_string(start + c));
      }
      labels[static_cast<std::size_t>(start + c)] = label;
    }
    start = stop;
  }
  decomp.parity_labels = std::move(labels);
  return decomp;
}

SectorEnergies sector_ground_energies(const ChainSpec& spec) {
  const HermitianOperator h = build_hamiltonian(spec);
  const std::size_t dim = spec.hilbert_dim();
  std::vector<Eigen::Index> even;
  std::vector<Eigen::Index> odd;
  even.reserve(dim / 2);
  odd.reserve(dim / 2);
  for (std::size_t b = 0; b < dim; ++b) {
    (parity_of(b) > 0 ? even : odd).push_back(static_cast<Eigen::Index>(b));
  }
  auto lowest = [&](const std::vector<Eigen::Index>& idx) {
    const Matrix block = h.matrix()(idx, idx);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(block, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("sector_ground_energies: solver did not converge");
    }
    return solver.eigenvalues()(0);
  };
  return {lowest(even), lowest(odd)};
}

DensityMatrix::DensityMatrix(std::vector<int> sites, Matrix entries)
    : sites_(std::move(sites)), entries_(std::move(entries)) {
  if (sites_.empty()) throw ArgumentError("DensityMatrix: no sites");
  if (!std::is_sorted(sites_.begin(), sites_.end()) ||
      std::adjacent_find(sites_.begin(), sites_.end()) != sites_.end()) {
    throw ArgumentError("DensityMatrix: sites must be strictly increasing");
  }
  const Eigen::Index expected = Eigen::Index{1} << sites_.size();
  if (entries_.rows() != expected || entries_.cols() != expected) {
    throw ContractViolation("DensityMatrix: matrix dimension does not match 2^|sites|");
  }
  const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw ContractViolation("DensityMatrix: not Hermitian (max deviation " +
                            std::to_string(asym) + ")");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-12) {
    throw ContractViolation("DensityMatrix: trace " + std::to_string(tr.real()) +
                            " differs from 1");
  }
}

DensityMatrix DensityMatrix::on_chain(Matrix entries) {
  const auto dim = static_cast<std::size_t>(entries.rows());
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw ContractViolation("DensityMatrix: dimension must be a power of two >= 2");
  }
  std::vector<int> sites(static_cast<std::size_t>(std::countr_zero(dim)));
  for (std::size_t i = 0; i < sites.size(); ++i) sites[i] = static_cast<int>(i) + 1;
  return DensityMatrix(std::move(sites), std::move(entries));
}

DensityMatrix DensityMatrix::pure(const Vector& amplitudes) {
  const Vector psi = amplitudes / amplitudes.norm();
  return on_chain(psi * psi.adjoint());
}

void DensityMatrix::validate() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("DensityMatrix::validate: solver did not converge");
  }
  if (solver.eigenvalues()(0) < -1e-10) {
    throw ContractViolation("DensityMatrix: negative eigenvalue " +
                            std::to_string(solver.eigenvalues()(0)));
  }
}

DensityMatrix gibbs_state(const SpectralDecomposition& decomp, double temperature,
                          double degeneracy_tol) {
  if (!(temperature >= 0.0)) throw ArgumentError("temperature must be >= 0");
  const Eigen::VectorXd& e = decomp.eigenvalues;
  const double e_min = e.minCoeff();
  Eigen::VectorXd weights(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    const double shifted = e(i) - e_min;
    if (temperature == 0.0) {
      weights(i) = shifted < degeneracy_tol ? 1.0 : 0.0;
    } else {
      weights(i) = std::exp(-shifted / temperature);
    }
  }
  weights /= weights.sum();

  const Matrix& v = decomp.eigenvectors;
  Matrix rho = v * weights.asDiagonal() * v.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix::on_chain(std::move(rho));
}

std::vector<double> locate_crossings(const std::function<double(double)>& gap,
                                     const CrossingSearch& search,
                                     std::vector<double>* tangencies) {
  const auto [start, stop] = search.h_range;
  if (!(stop > start)) throw ArgumentError("crossing search: empty field range");
  if (search.grid_points < 2) throw ArgumentError("crossing search: grid_points < 2");
  if (!(search.bisection_tol > 0.0)) throw ArgumentError("bisection_tol must be > 0");

  const int n = search.grid_points;
  std::vector<double> hs(static_cast<std::size_t>(n));
  std::vector<double> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    hs[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(n - 1);
    d[i] = gap(hs[i]);
  }
  auto sign = [&](double v) { return std::abs(v) <= search.zero_tol ? 0 : (v > 0 ? 1 : -1); };

  std::vector<double> found;
  for (int i = 0; i < n; ++i) {
    const int s = sign(d[i]);
    if (s == 0) {
      if (i == 0) {
        found.push_back(hs[i]);
      } else if (i < n - 1) {
        int left = 0;
        for (int k = i - 1; k >= 0 && left == 0; --k) left = sign(d[k]);
        int right = 0;
        for (int k = i + 1; k < n && right == 0; ++k) right = sign(d[k]);
        const bool previous_zero = sign(d[i - 1]) == 0;
        if (previous_zero) continue;  // same degenerate stretch, already handled
        if (left != 0 && right != 0 && left == right) {
          if (tangencies) tangencies->push_back(hs[i]);
        } else {
          found.push_back(hs[i]);
        }
      }
      continue;
    }
    if (i == n - 1) break;
    const int s_next = sign(d[i + 1]);
    if (s_next == 0 || s_next == s) continue;

    double a = hs[i];
    double b = hs[i + 1];
    double root = 0.5 * (a + b);
    while (b - a > search.bisection_tol) {
      const double mid = 0.5 * (a + b);
      const int sm = sign(gap(mid));
      if (sm == 0) {
        a = b = mid;
        break;
      }
      if (sm == s) {
        a = mid;
      } else {
        b = mid;
      }
    }
    root = 0.5 * (a + b);
    found.push_back(root);
  }
  return found;
}

CrossingSet find_parity_crossings(int n_sites, double gamma, const CrossingSearch& search,
                                  double coupling) {
  const auto [start, stop] = search.h_range;
  if (start < 0.0 || stop > 1.5) {
    throw ArgumentError("find_parity_crossings: field range must lie within [0, 1.5]");
  }
  if (search.grid_points < 64) {
    throw ArgumentError("find_parity_crossings: grid_points must be >= 64");
  }
  ChainSpec spec{n_sites, coupling, gamma, 0.0, 0.0};
  spec.validate();

  CrossingSet out;
  out.gamma = gamma;
  out.n_sites = n_sites;
  out.fields = locate_crossings(
      [spec](double h) mutable {
        spec.field = h;
        return sector_ground_energies(spec).gap();
      },
      search, &out.tangencies);
  return out;
}

}  // namespace xychain
