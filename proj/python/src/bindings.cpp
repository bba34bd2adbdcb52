#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xychain/reports.hpp"

namespace py = pybind11;
using namespace xychain;

namespace {

ChainSpec spec(int n, double gamma, double h, double coupling, double temperature = 0.0) {
  ChainSpec s{n, coupling, gamma, h, temperature};
  s.validate();
  return s;
}

MeasuredSide side_from(const std::string& name) {
  if (name == "a") return MeasuredSide::A;
  if (name == "b") return MeasuredSide::B;
  if (name == "best") return MeasuredSide::Best;
  throw ArgumentError("side must be 'a', 'b' or 'best'");
}

py::dict record_dict(const SweepRecord& r) {
  py::dict d;
  d["h"] = r.h;
  d["temperature"] = r.temperature;
  d["total_bits"] = r.total_bits;
  d["genuine_total_bits"] = r.genuine_total_bits;
  d["optimal_cut_mask"] = r.optimal_cut_mask;
  d["E0_even"] = r.e0_even;
  d["E0_odd"] = r.e0_odd;
  d["gap"] = r.gap;
  d["genuine_classical_bits"] = r.genuine_classical_bits;
  d["genuine_quantum_bits"] = r.genuine_quantum_bits;
  d["error"] = r.error;
  return d;
}

CrossingSearch search(std::pair<double, double> h_range, int grid_points, double tol) {
  CrossingSearch s;
  s.h_range = h_range;
  s.grid_points = grid_points;
  s.bisection_tol = tol;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact diagonalization of periodic XY chains and their genuine correlations";

  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.attr("MAX_SITES") = kMaxSites;

  m.def("build_hamiltonian",
        [](int n, double gamma, double h, double coupling) {
          return build_hamiltonian(spec(n, gamma, h, coupling)).matrix();
        },
        py::arg("n"), py::arg("gamma"), py::arg("h"), py::arg("coupling") = 1.0);
  m.def("build_parity", [](int n) { return build_parity(n).matrix(); }, py::arg("n"));
  m.def("factorizing_field", &factorizing_field, py::arg("gamma"));
  m.def("factorized_state",
        [](int n, double gamma, int sign) { return factorized_state(n, gamma, sign).amplitudes(); },
        py::arg("n"), py::arg("gamma"), py::arg("sign") = 1);

  m.def("eigh",
        [](const Matrix& h) {
          const auto d = eigh(HermitianOperator(h));
          return py::make_tuple(d.eigenvalues, d.eigenvectors);
        },
        py::arg("matrix"), "Eigenvalues (ascending) and eigenvector columns of a Hermitian matrix.");
  m.def("sector_ground_energies",
        [](int n, double gamma, double h, double coupling) {
          const auto e = sector_ground_energies(spec(n, gamma, h, coupling));
          return py::make_tuple(e.even, e.odd);
        },
        py::arg("n"), py::arg("gamma"), py::arg("h"), py::arg("coupling") = 1.0);
  m.def("find_parity_crossings",
        [](int n, double gamma, std::pair<double, double> h_range, int grid_points, double tol,
           double coupling) {
          return find_parity_crossings(n, gamma, search(h_range, grid_points, tol), coupling).fields;
        },
        py::arg("n"), py::arg("gamma"), py::arg("h_range") = std::pair{0.0, 1.0},
        py::arg("grid_points") = 512, py::arg("tol") = 1e-8, py::arg("coupling") = 1.0);
  m.def("gibbs_state",
        [](int n, double gamma, double h, double temperature, double coupling) {
          const auto s = spec(n, gamma, h, coupling, temperature);
          return gibbs_state(eigh(build_hamiltonian(s)), temperature).matrix();
        },
        py::arg("n"), py::arg("gamma"), py::arg("h"), py::arg("temperature"),
        py::arg("coupling") = 1.0);

  m.def("von_neumann_entropy",
        [](const Matrix& rho) { return von_neumann_entropy(DensityMatrix::on_chain(rho)); },
        py::arg("rho"));
  m.def("total_information",
        [](const Matrix& rho) { return total_information(DensityMatrix::on_chain(rho)); },
        py::arg("rho"));
  m.def("genuine_total",
        [](const Matrix& rho) {
          const auto g = genuine_total(DensityMatrix::on_chain(rho));
          return py::make_tuple(g.bits, g.cut.mask());
        },
        py::arg("rho"), "Minimum cut mutual information (bits) and the canonical cut mask.");
  m.def("genuine_classical_quantum",
        [](const Matrix& rho, std::uint32_t mask, const std::string& side, int restarts,
           std::uint64_t seed) {
          const auto state = DensityMatrix::on_chain(rho);
          MeasurementOptimizerConfig cfg;
          cfg.side = side_from(side);
          cfg.restarts = restarts;
          cfg.seed = seed;
          const auto s = genuine_classical_quantum(state, Bipartition(state.n_sites(), mask), cfg);
          return py::make_tuple(s.classical, s.quantum);
        },
        py::arg("rho"), py::arg("mask"), py::arg("side") = "a", py::arg("restarts") = 16,
        py::arg("seed") = MeasurementOptimizerConfig{}.seed);

  m.def("dispersion", &dispersion, py::arg("k"), py::arg("gamma"), py::arg("h"),
        py::arg("coupling") = 1.0);
  m.def("analytic_sector_ground_energy", &analytic_sector_ground_energy, py::arg("n"),
        py::arg("gamma"), py::arg("h"), py::arg("parity"), py::arg("coupling") = 1.0);
  m.def("analytic_crossings",
        [](int n, double gamma, std::pair<double, double> h_range, int grid_points, double tol,
           double coupling) {
          return analytic_crossings(n, gamma, search(h_range, grid_points, tol), coupling).fields;
        },
        py::arg("n"), py::arg("gamma"), py::arg("h_range") = std::pair{0.0, 1.0},
        py::arg("grid_points") = 512, py::arg("tol") = 1e-8, py::arg("coupling") = 1.0);

  m.def("detect_minima",
        [](const std::vector<double>& h, const std::vector<double>& values, double prominence,
           bool even) {
          if (h.size() != values.size()) throw ArgumentError("h and values differ in length");
          std::vector<SeriesPoint> series;
          for (std::size_t i = 0; i < h.size(); ++i) series.push_back({h[i], values[i]});
          const auto found = even ? detect_minima_even(series, prominence)
                                  : detect_minima(series, prominence);
          std::vector<std::tuple<double, double, double>> out;
          for (const auto& x : found) out.emplace_back(x.h, x.value, x.prominence);
          return out;
        },
        py::arg("h"), py::arg("values"), py::arg("prominence") = 0.005, py::arg("even") = true,
        "List of (h, value, prominence).");

  m.def("run_sweep",
        [](int n, double gamma, std::vector<double> temperatures, double h_start, double h_stop,
           int h_points, bool discord, double coupling, int threads) {
          SweepConfig c;
          c.n_sites = n;
          c.gamma = gamma;
          c.coupling = coupling;
          c.temperatures = std::move(temperatures);
          c.h_grid = {h_start, h_stop, h_points};
          c.compute_discord = discord;
          c.threads = threads;
          std::vector<SweepRecord> records;
          {
            py::gil_scoped_release release;
            records = run_sweep(c);
          }
          py::list out;
          for (const auto& r : records) out.append(record_dict(r));
          return out;
        },
        py::arg("n"), py::arg("gamma"), py::arg("temperatures"), py::arg("h_start") = 0.0,
        py::arg("h_stop") = 1.2, py::arg("h_points") = 241, py::arg("discord") = false,
        py::arg("coupling") = 1.0, py::arg("threads") = 0);

  m.def("check_factorization",
        [](int n, double gamma) {
          const auto r = check_factorization(n, gamma);
          py::dict d;
          d["status"] = r.status == FactorizationStatus::Pass   ? "pass"
                        : r.status == FactorizationStatus::Fail ? "fail"
                                                                : "boundary";
          d["factorizing_field"] = r.factorizing_field;
          d["ground_energy"] = r.ground_energy;
          py::list branches;
          for (const auto& b : r.branches) {
            py::dict bd;
            bd["sign"] = b.sign;
            bd["energy"] = b.energy;
            bd["variance"] = b.variance;
            bd["manifold_overlap"] = b.manifold_overlap;
            branches.append(bd);
          }
          d["branches"] = branches;
          return d;
        },
        py::arg("n"), py::arg("gamma"));
}
