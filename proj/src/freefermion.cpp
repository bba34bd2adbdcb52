#include "xychain/freefermion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace xychain {

namespace {

bool is_unpaired(double k) { return std::abs(std::sin(k)) < 1e-12; }

}  // namespace

double dispersion(double k, double gamma, double h, double coupling) {
  const double a = h - coupling * std::cos(k);
  const double b = coupling * gamma * std::sin(k);
  return 2.0 * std::sqrt(a * a + b * b);
}

SectorMomenta sector_momenta(int n_sites, int parity) {
  if (n_sites < 2) throw ArgumentError("sector_momenta: n_sites must be >= 2");
  if (parity != 1 && parity != -1) throw ArgumentError("parity must be +1 or -1");
  const double offset = parity > 0 ? 0.5 : 0.0;
  SectorMomenta out{n_sites, parity, {}};
  out.momenta.reserve(static_cast<std::size_t>(n_sites));
  for (int m = 0; m < n_sites; ++m) {
    double k = 2.0 * std::numbers::pi * (m + offset) / n_sites;
    if (k > std::numbers::pi + 1e-12) k -= 2.0 * std::numbers::pi;
    out.momenta.push_back(k);
  }
  std::sort(out.momenta.begin(), out.momenta.end());
  return out;
}

std::vector<QuasiparticleEnergy> quasiparticle_spectrum(int n_sites, int parity, double gamma,
                                                        double h, double coupling) {
  const SectorMomenta ks = sector_momenta(n_sites, parity);
  std::vector<QuasiparticleEnergy> out;
  out.reserve(ks.momenta.size());
  for (double k : ks.momenta) {
    if (is_unpaired(k)) {
      out.push_back({k, 2.0 * (h - coupling * std::cos(k)), true});
    } else {
      out.push_back({k, dispersion(k, gamma, h, coupling), false});
    }
  }
  return out;
}

double analytic_sector_ground_energy(int n_sites, double gamma, double h, int parity,
                                     double coupling) {
  if (n_sites < 3) {
    throw ArgumentError("analytic_sector_ground_energy: n_sites must be >= 3");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ArgumentError("gamma must lie in [0, 1]");

  // Each mode contributes eps (n - 1/2). Paired modes sit in their BCS vacuum
  // (even fermion number); unpaired modes are filled when their energy is negative.
  double energy = 0.0;
  int occupied = 0;
  double cheapest_flip = std::numeric_limits<double>::infinity();
  for (const auto& mode : quasiparticle_spectrum(n_sites, parity, gamma, h, coupling)) {
    if (mode.unpaired) {
      const bool fill = mode.epsilon < 0.0;
      occupied += fill ? 1 : 0;
      energy += mode.epsilon * (fill ? 0.5 : -0.5);
      cheapest_flip = std::min(cheapest_flip, std::abs(mode.epsilon));
    } else {
      energy -= 0.5 * mode.epsilon;
      cheapest_flip = std::min(cheapest_flip, mode.epsilon);
    }
  }
  // P = +1 <-> even number of fermions.
  const int required = parity > 0 ? 0 : 1;
  if (occupied % 2 != required) energy += cheapest_flip;
  return energy;
}

CrossingSet analytic_crossings(int n_sites, double gamma, const CrossingSearch& search,
                               double coupling) {
  const auto [start, stop] = search.h_range;
  if (start < 0.0 || stop > 1.5) {
    throw ArgumentError("analytic_crossings: field range must lie within [0, 1.5]");
  }
  if (search.grid_points < 64) {
    throw ArgumentError("analytic_crossings: grid_points must be >= 64");
  }
  if (n_sites < 3) throw ArgumentError("analytic_crossings: n_sites must be >= 3");

  CrossingSet out;
  out.gamma = gamma;
  out.n_sites = n_sites;
  out.fields = locate_crossings(
      [=](double h) {
        return analytic_sector_ground_energy(n_sites, gamma, h, -1, coupling) -
               analytic_sector_ground_energy(n_sites, gamma, h, +1, coupling);
      },
      search, &out.tangencies);
  return out;
}

}  // namespace xychain
