#pragma once

#include <vector>

#include "xychain/spectral.hpp"

namespace xychain {

// Jordan-Wigner / Bogoliubov solution of the periodic XY chain, used to
// cross-check the dense spectrum. The even parity sector carries
// antiperiodic fermion momenta, the odd sector periodic ones.

struct SectorMomenta {
  int n_sites = 0;
  int parity = 1;
  std::vector<double> momenta;  // in (-pi, pi], ascending
};

struct QuasiparticleEnergy {
  double k = 0.0;
  // Non-negative for paired modes. At k = 0 and k = pi the mode is unpaired
  // and this holds the signed single-particle energy 2(h - J cos k).
  double epsilon = 0.0;
  bool unpaired = false;
};

/// eps(k) = 2 sqrt((h - J cos k)^2 + (J gamma sin k)^2).
double dispersion(double k, double gamma, double h, double coupling = 1.0);

SectorMomenta sector_momenta(int n_sites, int parity);

std::vector<QuasiparticleEnergy> quasiparticle_spectrum(int n_sites, int parity, double gamma,
                                                        double h, double coupling = 1.0);

/// Lowest energy in the given parity sector: the quasiparticle vacuum, with the
/// unpaired modes filled when that lowers the energy, plus the cheapest single
/// excitation if the filling has the wrong fermion-number parity.
/// Requires n_sites >= 3 (N = 2 double-counts its only bond).
double analytic_sector_ground_energy(int n_sites, double gamma, double h, int parity,
                                     double coupling = 1.0);

/// Same search as find_parity_crossings, applied to the analytic sector gap.
CrossingSet analytic_crossings(int n_sites, double gamma, const CrossingSearch& search = {},
                               double coupling = 1.0);

}  // namespace xychain
