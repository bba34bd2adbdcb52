#include "xychain/reports.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace xychain {

namespace {

std::string list_fields(const std::vector<double>& fields) {
  std::string out = "[";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ", ";
    out += format_number(fields[i]);
  }
  return out + "]";
}

}  // namespace

CrossingReport report_crossings(int n_sites, double gamma, const CrossingSearch& search) {
  CrossingReport report;
  report.n_sites = n_sites;
  report.gamma = gamma;
  report.factorizing_field = factorizing_field(gamma);
  report.dense = find_parity_crossings(n_sites, gamma, search);
  for (double h : report.dense.tangencies) {
    report.warnings.push_back("dense gap touches zero without crossing at h = " +
                              format_number(h));
  }
  if (n_sites < 3) {
    report.warnings.push_back("analytic crossings need N >= 3; only dense results reported");
    return report;
  }

  report.analytic = analytic_crossings(n_sites, gamma, search);
  const auto& a = report.analytic->fields;
  const auto& d = report.dense.fields;
  if (a.size() != d.size()) {
    report.agree = false;
    report.max_disagreement = std::numeric_limits<double>::infinity();
    report.warnings.push_back("dense and analytic routes found different crossing counts (" +
                              std::to_string(d.size()) + " vs " + std::to_string(a.size()) + ")");
  } else {
    for (std::size_t i = 0; i < d.size(); ++i) {
      report.max_disagreement = std::max(report.max_disagreement, std::abs(d[i] - a[i]));
    }
    report.agree = report.max_disagreement <= kCrossingAgreementTol;
    if (!report.agree) {
      report.warnings.push_back("dense and analytic crossings differ by " +
                                format_number(report.max_disagreement));
    }
  }
  return report;
}

FactorizationReport check_factorization(int n_sites, double gamma) {
  FactorizationReport report;
  report.n_sites = n_sites;
  report.gamma = gamma;
  report.factorizing_field = factorizing_field(gamma);

  const ChainSpec spec{n_sites, 1.0, gamma, report.factorizing_field, 0.0};
  const HermitianOperator h = build_hamiltonian(spec);
  const SpectralDecomposition decomp = eigh(h);
  report.ground_energy = decomp.eigenvalues(0);
  const auto manifold = decomp.eigenvectors.leftCols(2);

  bool pass = true;
  for (int sign : {1, -1}) {
    const StateVector psi = factorized_state(n_sites, gamma, sign);
    const Vector h_psi = h.matrix() * psi.amplitudes();
    FactorizationBranch branch;
    branch.sign = sign;
    branch.energy = psi.amplitudes().dot(h_psi).real();
    branch.variance = (h_psi - branch.energy * psi.amplitudes()).squaredNorm();
    branch.manifold_overlap = (manifold.adjoint() * psi.amplitudes()).squaredNorm();
    pass = pass && branch.variance <= 1e-10 && branch.manifold_overlap >= 1.0 - 1e-9;
    report.branches.push_back(branch);
  }
  if (gamma == 0.0) {
    report.status = FactorizationStatus::Boundary;
  } else {
    report.status = pass ? FactorizationStatus::Pass : FactorizationStatus::Fail;
  }
  return report;
}

double ValidationPoint::deviation() const {
  return std::max(std::abs(dense_even - analytic_even), std::abs(dense_odd - analytic_odd));
}

ValidationReport validate_free_fermion(const ValidationGrid& grid) {
  ValidationReport report;
  for (int n : grid.n_sites) {
    for (double g : grid.gammas) {
      for (double h : grid.fields) {
        const SectorEnergies dense = sector_ground_energies({n, 1.0, g, h, 0.0});
        ValidationPoint p{n,
                          g,
                          h,
                          dense.even,
                          dense.odd,
                          analytic_sector_ground_energy(n, g, h, +1),
                          analytic_sector_ground_energy(n, g, h, -1)};
        report.max_deviation = std::max(report.max_deviation, p.deviation());
        report.points.push_back(p);
      }
    }
  }
  report.pass = report.max_deviation <= grid.tolerance;
  return report;
}

MinimaReport build_minima_report(const std::vector<SweepRecord>& records, double temperature,
                                 double prominence, const CrossingSet& crossings,
                                 double gamma) {
  MinimaReport report;
  report.temperature = temperature;
  const auto series = genuine_total_series(records, temperature);
  if (series.size() >= 3) report.minima = detect_minima_even(series, prominence);
  report.crossings = crossings;
  report.factorizing_field = factorizing_field(gamma);
  return report;
}

std::string describe(const CrossingReport& r) {
  std::ostringstream out;
  out << "N = " << r.n_sites << ", gamma = " << format_number(r.gamma) << '\n';
  out << "dense crossings:    " << list_fields(r.dense.fields) << '\n';
  if (r.analytic) out << "analytic crossings: " << list_fields(r.analytic->fields) << '\n';
  out << "factorizing field h_F = " << format_number(r.factorizing_field) << '\n';
  out << "critical field h_C = " << format_number(r.critical_field) << '\n';
  if (r.analytic) {
    out << "max |dense - analytic| = " << format_number(r.max_disagreement)
        << (r.agree ? " (agree)" : " (DISAGREE)") << '\n';
  }
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::string describe(const FactorizationReport& r) {
  std::ostringstream out;
  out << "N = " << r.n_sites << ", gamma = " << format_number(r.gamma)
      << ", h_F = " << format_number(r.factorizing_field) << '\n';
  out << "ground energy = " << format_number(r.ground_energy) << '\n';
  for (const auto& b : r.branches) {
    out << (b.sign > 0 ? "+" : "-") << " branch: energy = " << format_number(b.energy)
        << ", variance = " << format_number(b.variance)
        << ", ground-manifold overlap = " << format_number(b.manifold_overlap) << '\n';
  }
  switch (r.status) {
    case FactorizationStatus::Pass: out << "status: pass\n"; break;
    case FactorizationStatus::Fail: out << "status: FAIL\n"; break;
    case FactorizationStatus::Boundary:
      out << "status: boundary case (gamma = 0: all-up state, h_F = h_C = 1)\n";
      break;
  }
  return out.str();
}

std::string describe(const ValidationReport& r) {
  std::ostringstream out;
  const auto worst = std::max_element(
      r.points.begin(), r.points.end(),
      [](const ValidationPoint& a, const ValidationPoint& b) { return a.deviation() < b.deviation(); });
  out << "points checked: " << r.points.size() << '\n';
  out << "max |dense - analytic| sector ground energy = " << format_number(r.max_deviation) << '\n';
  if (worst != r.points.end()) {
    out << "worst point: N = " << worst->n_sites << ", gamma = " << format_number(worst->gamma)
        << ", h = " << format_number(worst->h) << '\n';
  }
  out << "status: " << (r.pass ? "pass" : "FAIL") << '\n';
  return out.str();
}

std::string describe(const MinimaReport& r) {
  std::ostringstream out;
  out << "T = " << format_number(r.temperature) << ": " << r.minima.size() << " minima";
  for (const auto& m : r.minima) {
    out << "\n  h = " << format_number(m.h) << ", T(N) = " << format_number(m.value)
        << " bits, prominence = " << format_number(m.prominence);
    if (!r.crossings.fields.empty()) {
      double nearest = std::numeric_limits<double>::infinity();
      for (double c : r.crossings.fields) {
        if (std::abs(c - m.h) < std::abs(nearest - m.h)) nearest = c;
      }
      out << ", nearest crossing " << format_number(nearest);
    }
  }
  out << "\n  crossings " << list_fields(r.crossings.fields) << ", h_F = "
      << format_number(r.factorizing_field) << ", h_C = " << format_number(r.critical_field)
      << '\n';
  return out.str();
}

}  // namespace xychain
