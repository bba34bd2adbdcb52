// Prints one PASS/FAIL line per criterion; exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "xychain/reports.hpp"

using namespace xychain;

namespace {

constexpr double kGamma = 0.6;
constexpr FieldGrid kGrid{0.0, 1.2, 241};

int failures = 0;

void verdict(int id, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void note(const std::string& text) { std::printf("       %s\n", text.c_str()); }

std::string list(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + format_number(xs[i]);
  return out + "]";
}

std::string minima_list(const std::vector<Minimum>& ms) {
  std::vector<double> hs;
  for (const auto& m : ms) hs.push_back(m.h);
  return list(hs);
}

// Sweeps are shared between criteria; key is (N, T).
std::vector<SweepRecord>& sweep(int n, double t) {
  static std::map<std::pair<int, double>, std::vector<SweepRecord>> cache;
  auto it = cache.find({n, t});
  if (it == cache.end()) {
    SweepConfig c;
    c.n_sites = n;
    c.gamma = kGamma;
    c.temperatures = {t};
    c.h_grid = kGrid;
    it = cache.emplace(std::pair{n, t}, run_sweep(c)).first;
  }
  return it->second;
}

std::vector<Minimum> minima(int n, double t, double prominence) {
  return detect_minima_even(genuine_total_series(sweep(n, t), t), prominence);
}

std::vector<Minimum> below_one(std::vector<Minimum> ms) {
  std::erase_if(ms, [](const Minimum& m) { return m.h >= 1.0; });
  return ms;
}

const CrossingSet& crossings(int n) {
  static std::map<int, CrossingSet> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, find_parity_crossings(n, kGamma)).first;
  return it->second;
}

// A grid step, with a little slack for the rounding in h = start + i * step.
const double kStepTol = kGrid.step() * (1.0 + 1e-9);

bool near_crossing(double h, const CrossingSet& c) {
  for (double x : c.fields) {
    if (std::abs(h - x) <= kStepTol) return true;
  }
  return false;
}

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void minima_counts() {
  const std::map<int, std::size_t> expected{{4, 2}, {6, 3}, {7, 4}};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [n, want] : expected) {
    const auto ms = below_one(minima(n, 0.01, 0.005));
    ok = ok && ms.size() == want;
    detail << "N=" << n << ": " << ms.size() << "/" << want << " ";
  }
  verdict(1, ok, "minima of the genuine total in [0, 1) at T=0.01 " + detail.str());
  for (const auto& [n, _] : expected) {
    note("N=" + std::to_string(n) + " minima " + minima_list(minima(n, 0.01, 0.005)) +
         ", crossings " + list(crossings(n).fields));
  }
  // Colder sweep, for reference only.
  const auto cold = below_one(minima(7, 0.005, 0.005));
  note("N=7 at T=0.005: " + std::to_string(cold.size()) + " minima " + minima_list(cold));
}

void minima_on_crossings() {
  bool ok = true;
  std::ostringstream detail;
  for (int n : {4, 6, 7}) {
    for (const auto& m : minima(n, 0.01, 0.005)) {
      if (!near_crossing(m.h, crossings(n))) {
        ok = false;
        detail << "N=" << n << " minimum at " << format_number(m.h) << " is off-crossing; ";
      }
    }
  }
  verdict(2, ok, "every T=0.01 minimum within one grid step of a crossing " + detail.str());
}

void factorizing_crossing() {
  bool ok = factorizing_field(kGamma) == 0.8;
  std::ostringstream detail;
  detail << "h_F(0.6)=" << format_number(factorizing_field(kGamma)) << "; largest crossing";
  for (int n : {4, 5, 6, 7}) {
    const auto& c = crossings(n);
    const double last = c.fields.empty() ? std::nan("") : c.fields.back();
    ok = ok && std::abs(last - 0.8) <= 1e-6;
    detail << " N=" << n << ":" << format_number(last);
  }
  verdict(3, ok, detail.str());
}

void crossing_counts() {
  const std::map<int, std::size_t> expected{{4, 2}, {5, 3}, {6, 3}, {7, 4}};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& [n, want] : expected) {
    const auto got = crossings(n).fields.size();
    ok = ok && got == want;
    detail << "N=" << n << ": " << got << "/" << want << " ";
  }
  verdict(4, ok, "parity crossing counts " + detail.str());
}

void washout() {
  const auto& c = crossings(4);
  auto covers_both = [&](const std::vector<Minimum>& ms) {
    for (double x : c.fields) {
      bool hit = false;
      for (const auto& m : ms) hit = hit || std::abs(m.h - x) <= kStepTol;
      if (!hit) return false;
    }
    return true;
  };
  // Warmer sweeps drift away from the crossings; ask only for one minimum per
  // crossing, each nearest to a different crossing.
  auto one_per_crossing = [&](const std::vector<Minimum>& ms) {
    if (ms.size() != c.fields.size()) return false;
    std::vector<bool> used(c.fields.size(), false);
    for (const auto& m : ms) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < c.fields.size(); ++i) {
        if (std::abs(m.h - c.fields[i]) < std::abs(m.h - c.fields[best])) best = i;
      }
      if (used[best]) return false;
      used[best] = true;
    }
    return true;
  };
  const auto cold = minima(4, 0.01, 0.01);
  const auto warm = minima(4, 0.05, 0.01);
  const auto hot = minima(4, 1.0, 0.01);
  const bool ok = covers_both(cold) && one_per_crossing(warm) && hot.empty();
  verdict(5, ok,
          "N=4 minima (prominence 0.01) T=0.01 " + minima_list(cold) + ", T=0.05 " +
              minima_list(warm) + ", T=1 " + minima_list(hot));
}

void halving() {
  bool ok = true;
  std::ostringstream detail;
  for (double h : {0.3, 0.5, 0.9}) {
    SweepConfig c;
    c.n_sites = 4;
    c.gamma = kGamma;
    c.compute_discord = true;
    const auto r = evaluate_point(c, 1e-3, h);
    const double half = r.genuine_total_bits / 2;
    const double dj = std::abs(r.genuine_classical_bits.value_or(NAN) - half);
    const double dd = std::abs(r.genuine_quantum_bits.value_or(NAN) - half);
    ok = ok && !r.error && dj <= 1e-2 && dd <= 1e-2;
    detail << "h=" << h << " T/2=" << format_number(half) << " |J-T/2|=" << format_number(dj)
           << " |D-T/2|=" << format_number(dd) << "; ";
  }
  verdict(6, ok, "N=4 T=1e-3 " + detail.str());
}

void exact_factorization() {
  bool ok = true;
  std::ostringstream detail;
  for (auto [n, g] : std::vector<std::pair<int, double>>{{4, 0.6}, {5, 0.6}, {6, 0.3}, {7, 0.8}}) {
    const auto r = check_factorization(n, g);
    ok = ok && r.status == FactorizationStatus::Pass;
    double worst_var = 0.0;
    double worst_overlap = 1.0;
    for (const auto& b : r.branches) {
      worst_var = std::max(worst_var, b.variance);
      worst_overlap = std::min(worst_overlap, b.manifold_overlap);
    }
    detail << "(" << n << "," << g << ") var " << format_number(worst_var) << " overlap "
           << format_number(worst_overlap) << "; ";
  }
  verdict(7, ok, "product ground states at h_F " + detail.str());
}

void oracle_equivalence() {
  ValidationReport report;
  const double t = seconds([&] { report = validate_free_fermion(); });
  verdict(8, report.pass && t < 60.0,
          "dense vs free-fermion over " + std::to_string(report.points.size()) +
              " points, max deviation " + format_number(report.max_deviation) + " in " +
              format_number(t) + " s");
}

// Randomized property suite on small instances.
struct PropertyTally {
  int cases = 0;
  int failed = 0;
  std::string first_failure;
  void check(bool ok, const std::string& what) {
    if (!ok && failed++ == 0) first_failure = what;
  }
};

Matrix random_density(int n, std::mt19937_64& rng, int rank) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::normal_distribution<double> gauss;
  Matrix g(dim, rank);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

void property_suite() {
  PropertyTally tally;
  const double t = seconds([&] {
    std::mt19937_64 rng(424242);

    // Anchors.
    for (int n = 2; n <= 4; ++n) {
      Vector ghz = Vector::Zero(Eigen::Index{1} << n);
      ghz(0) = ghz(ghz.size() - 1) = 1.0 / std::sqrt(2.0);
      const auto rho = DensityMatrix::pure(ghz);
      tally.check(std::abs(total_information(rho) - n) <= 1e-8, "GHZ total");
      tally.check(std::abs(genuine_total(rho).bits - 2.0) <= 1e-8, "GHZ genuine total");
    }
    Vector w = Vector::Zero(8);
    w(1) = w(2) = w(4) = 1.0 / std::sqrt(3.0);
    const double h2 = -(1.0 / 3) * std::log2(1.0 / 3) - (2.0 / 3) * std::log2(2.0 / 3);
    tally.check(std::abs(genuine_total(DensityMatrix::pure(w)).bits - 2 * h2) <= 1e-8,
                "W genuine total");

    for (int trial = 0; trial < 150; ++trial) {
      const int n = 2 + trial % 3;
      const int dim = 1 << n;
      const int rank = 1 + static_cast<int>(rng() % dim);
      const Matrix m = random_density(n, rng, rank);
      const auto rho = DensityMatrix::on_chain(m);
      ++tally.cases;

      tally.check((m - m.adjoint()).cwiseAbs().maxCoeff() <= 1e-12, "Hermiticity");
      tally.check(std::abs(m.trace().real() - 1.0) <= 1e-12, "trace");
      tally.check(Eigen::SelfAdjointEigenSolver<Matrix>(m).eigenvalues().minCoeff() >= -1e-10,
                  "positivity");
      const double total = total_information(rho);
      tally.check(std::abs(total - total_information_relative(rho)) <= 1e-8,
                  "entropy-sum and relative-entropy totals");
      const auto g = genuine_total(rho);
      tally.check(g.bits <= total + 1e-12 && g.bits >= -1e-12, "0 <= genuine <= total");
      for (const auto& cut : Bipartition::enumerate(n)) {
        tally.check(g.bits <= cut_mutual_information(rho, cut) + 1e-12, "genuine is the minimum");
      }

      std::normal_distribution<double> gauss;
      Vector psi(dim);
      for (int i = 0; i < dim; ++i) psi(i) = Complex(gauss(rng), gauss(rng));
      psi.normalize();
      const StateVector state(psi);
      tally.check(std::abs(state.amplitudes().norm() - 1.0) <= 1e-12, "normalization");
      const auto pure = DensityMatrix::pure(psi);
      for (const auto& cut : Bipartition::enumerate(n)) {
        std::vector<int> a;
        std::vector<int> b;
        for (int p : cut.side_a_positions()) a.push_back(p + 1);
        for (int p : cut.side_b_positions()) b.push_back(p + 1);
        tally.check(std::abs(von_neumann_entropy(partial_trace(pure, a)) -
                             von_neumann_entropy(partial_trace(pure, b))) <= 1e-9,
                    "pure-state marginal symmetry");
      }
    }

    for (int trial = 0; trial < 30; ++trial) {
      std::uniform_real_distribution<double> u(0.0, 1.0);
      const ChainSpec spec{2 + trial % 3, 0.5 + u(rng), u(rng), 1.5 * u(rng), 0.0};
      const auto h = build_hamiltonian(spec).matrix();
      tally.check((h - h.adjoint()).cwiseAbs().maxCoeff() <= 1e-12, "Hamiltonian Hermiticity");
      const auto p = build_parity(spec.n_sites).matrix();
      tally.check((h * p - p * h).cwiseAbs().maxCoeff() <= 1e-12, "parity commutes");
    }
  });
  const bool ok = tally.failed == 0 && tally.cases >= 100 && t < 60.0;
  verdict(9, ok,
          "property suite: " + std::to_string(tally.cases) + " random states, " +
              std::to_string(tally.failed) + " violations" +
              (tally.failed ? " (first: " + tally.first_failure + ")" : "") + " in " +
              format_number(t) + " s");
}

}  // namespace

int main() {
  minima_counts();
  minima_on_crossings();
  factorizing_crossing();
  crossing_counts();
  washout();
  halving();
  exact_factorization();
  oracle_equivalence();
  property_suite();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
