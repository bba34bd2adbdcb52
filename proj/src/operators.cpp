#include "xychain/operators.hpp"

#include <cmath>
#include <string>

namespace xychain {

namespace {

void require_site_count(int n_sites, int minimum) {
  if (n_sites < minimum || n_sites > kMaxSites) {
    throw ArgumentError("n_sites must be in [" + std::to_string(minimum) + ", " +
                        std::to_string(kMaxSites) + "], got " +
                        std::to_string(n_sites));
  }
}

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw ArgumentError("anisotropy gamma must lie in [0, 1], got " +
                        std::to_string(gamma));
  }
}

}  // namespace

void ChainSpec::validate() const {
  require_site_count(n_sites, 2);
  require_gamma(anisotropy);
  if (!std::isfinite(coupling)) throw ArgumentError("coupling must be finite");
  if (!std::isfinite(field)) throw ArgumentError("field must be finite");
  if (!(temperature >= 0.0) || std::isnan(temperature)) {
    throw ArgumentError("temperature must be >= 0, got " + std::to_string(temperature));
  }
}

HermitianOperator::HermitianOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw ContractViolation("HermitianOperator: matrix is not square");
  }
  const double scale = entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff();
  const double asym = entries_.size() == 0
                          ? 0.0
                          : (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    throw ContractViolation("HermitianOperator: max |A - A^dagger| = " +
                            std::to_string(asym) + " exceeds tolerance");
  }
}

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw ContractViolation("StateVector: amplitudes are not normalized");
  }
}

double StateVector::expectation(const HermitianOperator& op) const {
  if (op.dim() != dim()) throw ArgumentError("expectation: dimension mismatch");
  return amplitudes_.dot(op.matrix() * amplitudes_).real();
}

HermitianOperator pauli_on_site(Axis axis, int site, int n_sites) {
  require_site_count(n_sites, 1);
  if (site < 1 || site > n_sites) {
    throw ArgumentError("site " + std::to_string(site) + " outside 1.." +
                        std::to_string(n_sites));
  }
  const std::size_t dim = std::size_t{1} << n_sites;
  const std::size_t bit = std::size_t{1} << (site - 1);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    const bool down = (b & bit) != 0;
    const auto col = static_cast<Eigen::Index>(b);
    switch (axis) {
      case Axis::X:
        m(static_cast<Eigen::Index>(b ^ bit), col) = 1.0;
        break;
      case Axis::Y:
        // sy|up> = i|down>, sy|down> = -i|up>
        m(static_cast<Eigen::Index>(b ^ bit), col) = down ? Complex(0, -1) : Complex(0, 1);
        break;
      case Axis::Z:
        m(col, col) = down ? -1.0 : 1.0;
        break;
    }
  }
  return HermitianOperator(std::move(m));
}

HermitianOperator build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n_sites;
  const std::size_t dim = spec.hilbert_dim();
  const double j = spec.coupling;
  const double g = spec.anisotropy;
  const double h = spec.field;

  // (1+g)/2 sx sx + (1-g)/2 sy sy flips both spins with amplitude g when the
  // two spins are parallel and 1 when they are antiparallel.
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    const auto col = static_cast<Eigen::Index>(b);
    const int downs = std::popcount(b);
    m(col, col) += -h * static_cast<double>(n - 2 * downs);
    for (int site = 1; site <= n; ++site) {
      const int next = site % n + 1;
      const std::size_t bi = std::size_t{1} << (site - 1);
      const std::size_t bj = std::size_t{1} << (next - 1);
      const bool parallel = ((b & bi) != 0) == ((b & bj) != 0);
      const double amp = parallel ? g : 1.0;
      m(static_cast<Eigen::Index>(b ^ bi ^ bj), col) += -j * amp;
    }
  }
  return HermitianOperator(std::move(m));
}

HermitianOperator build_parity(int n_sites) {
  require_site_count(n_sites, 1);
  const std::size_t dim = std::size_t{1} << n_sites;
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = parity_of(b);
  }
  return HermitianOperator(std::move(m));
}

double factorizing_field(double gamma) {
  require_gamma(gamma);
  return std::sqrt(1.0 - gamma * gamma);
}

double factorized_angle(double gamma) {
  require_gamma(gamma);
  return std::acos(std::sqrt((1.0 - gamma) / (1.0 + gamma)));
}

StateVector factorized_state(int n_sites, double gamma, int sign) {
  require_site_count(n_sites, 1);
  if (sign != 1 && sign != -1) throw ArgumentError("sign must be +1 or -1");
  const double alpha = factorized_angle(gamma);
  const double up = std::cos(alpha / 2.0);
  const double down = sign * std::sin(alpha / 2.0);

  const std::size_t dim = std::size_t{1} << n_sites;
  Vector psi(static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    const int downs = std::popcount(b);
    psi(static_cast<Eigen::Index>(b)) =
        std::pow(up, n_sites - downs) * std::pow(down, downs);
  }
  // The product of unit single-site spinors is normalized up to rounding.
  psi /= psi.norm();
  return StateVector(std::move(psi));
}

}  // namespace xychain
