#pragma once

#include <string>
#include <vector>

#include "xychain/freefermion.hpp"
#include "xychain/minima.hpp"
#include "xychain/sweep.hpp"

namespace xychain {

// Dense and analytic crossing lists that differ by more than this are flagged.
inline constexpr double kCrossingAgreementTol = 1e-6;

struct CrossingReport {
  int n_sites = 0;
  double gamma = 0.0;
  CrossingSet dense;
  std::optional<CrossingSet> analytic;  // absent for N = 2
  double factorizing_field = 0.0;
  double critical_field = kCriticalField;
  double max_disagreement = 0.0;
  bool agree = true;
  std::vector<std::string> warnings;
};

CrossingReport report_crossings(int n_sites, double gamma, const CrossingSearch& search = {});

struct FactorizationBranch {
  int sign = 1;
  double energy = 0.0;
  double variance = 0.0;
  double manifold_overlap = 0.0;  // weight in the two lowest eigenvectors
};

enum class FactorizationStatus { Pass, Fail, Boundary };

struct FactorizationReport {
  int n_sites = 0;
  double gamma = 0.0;
  double factorizing_field = 0.0;
  double ground_energy = 0.0;
  std::vector<FactorizationBranch> branches;
  FactorizationStatus status = FactorizationStatus::Fail;
};

/// Builds both product states at h = h_F(gamma) and checks that they are
/// exact eigenstates lying in the two-dimensional ground manifold
/// (variance <= 1e-10, overlap >= 1 - 1e-9). gamma = 0 is reported as a
/// boundary case.
FactorizationReport check_factorization(int n_sites, double gamma);

struct ValidationPoint {
  int n_sites = 0;
  double gamma = 0.0;
  double h = 0.0;
  double dense_even = 0.0;
  double dense_odd = 0.0;
  double analytic_even = 0.0;
  double analytic_odd = 0.0;
  double deviation() const;
};

struct ValidationGrid {
  std::vector<int> n_sites{3, 4, 5, 6, 7, 8};
  std::vector<double> gammas{0.2, 0.6, 1.0};
  std::vector<double> fields{0.0, 0.25, 0.5, 0.8, 1.0, 1.5};
  double tolerance = 1e-9;
};

struct ValidationReport {
  std::vector<ValidationPoint> points;
  double max_deviation = 0.0;
  bool pass = true;
};

/// Dense versus free-fermion sector ground energies over the whole grid.
ValidationReport validate_free_fermion(const ValidationGrid& grid = {});

/// Minima of the genuine-total curve at one temperature, alongside crossings.
MinimaReport build_minima_report(const std::vector<SweepRecord>& records, double temperature,
                                 double prominence, const CrossingSet& crossings,
                                 double gamma);

std::string describe(const CrossingReport& report);
std::string describe(const FactorizationReport& report);
std::string describe(const ValidationReport& report);
std::string describe(const MinimaReport& report);

}  // namespace xychain
