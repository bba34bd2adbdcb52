#include "xychain/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include <json.hpp>

namespace xychain {

void SweepConfig::validate() const {
  ChainSpec{n_sites, coupling, gamma, 0.0, 0.0}.validate();
  if (temperatures.empty()) throw ArgumentError("at least one temperature is required");
  for (double t : temperatures) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw ArgumentError("temperatures must be finite and >= 0, got " + format_number(t));
    }
  }
  if (h_grid.points < 2) throw ArgumentError("field grid needs at least 2 points");
  if (!(h_grid.stop > h_grid.start) || !std::isfinite(h_grid.start) ||
      !std::isfinite(h_grid.stop)) {
    throw ArgumentError("field grid must satisfy start < stop");
  }
  if (!(prominence >= 0.0)) throw ArgumentError("prominence must be >= 0");
  if (optimizer.restarts < 1) throw ArgumentError("optimizer restarts must be >= 1");
  if (!(optimizer.tolerance > 0.0)) throw ArgumentError("optimizer tolerance must be > 0");
}

SweepRecord evaluate_point(const SweepConfig& config, double temperature, double h) {
  SweepRecord record;
  record.h = h;
  record.temperature = temperature;
  try {
    const ChainSpec spec{config.n_sites, config.coupling, config.gamma, h, temperature};
    const DensityMatrix rho = gibbs_state(eigh(build_hamiltonian(spec)), temperature);
    std::optional<MeasurementOptimizerConfig> discord;
    if (config.compute_discord) discord = config.optimizer;
    const CorrelationReport report = analyze_correlations(rho, discord);
    const SectorEnergies sectors = sector_ground_energies(spec);

    record.total_bits = report.total;
    record.genuine_total_bits = report.genuine_total;
    record.optimal_cut_mask = report.optimal_cut.mask();
    record.e0_even = sectors.even;
    record.e0_odd = sectors.odd;
    record.gap = sectors.gap();
    record.genuine_classical_bits = report.genuine_classical;
    record.genuine_quantum_bits = report.genuine_quantum;
  } catch (const std::exception& e) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    record.total_bits = record.genuine_total_bits = nan;
    record.e0_even = record.e0_odd = record.gap = nan;
    record.error = e.what();
  }
  return record;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::size_t per_temperature = static_cast<std::size_t>(config.h_grid.points);
  const std::size_t total = per_temperature * config.temperatures.size();
  std::vector<SweepRecord> records(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      const double t = config.temperatures[i / per_temperature];
      const double h = config.h_grid.at(static_cast<int>(i % per_temperature));
      records[i] = evaluate_point(config, t, h);
    }
  };

  unsigned n_threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, total));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
  }
  return records;
}

std::vector<SeriesPoint> genuine_total_series(const std::vector<SweepRecord>& records,
                                              double temperature) {
  std::vector<SeriesPoint> out;
  for (const auto& r : records) {
    if (r.temperature == temperature && !r.error) out.push_back({r.h, r.genuine_total_bits});
  }
  return out;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value == 0.0 ? 0.0 : value);
  return buffer;
}

std::string csv_header() {
  return "h,temperature,total_bits,genuine_total_bits,optimal_cut_mask,E0_even,E0_odd,gap,"
         "genuine_classical_bits,genuine_quantum_bits";
}

std::string csv_row(const SweepRecord& r) {
  auto optional_field = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string{};
  };
  std::string row;
  row += format_number(r.h) + ',';
  row += format_number(r.temperature) + ',';
  row += format_number(r.total_bits) + ',';
  row += format_number(r.genuine_total_bits) + ',';
  row += (r.error ? std::string{} : std::to_string(r.optimal_cut_mask)) + ',';
  row += format_number(r.e0_even) + ',';
  row += format_number(r.e0_odd) + ',';
  row += format_number(r.gap) + ',';
  row += optional_field(r.genuine_classical_bits) + ',';
  row += optional_field(r.genuine_quantum_bits);
  return row;
}

std::string jsonl_row(const SweepRecord& r) {
  // Round through the 12-digit text form so both formats carry the same values.
  auto number = [](double v) -> nlohmann::json {
    if (std::isnan(v)) return nullptr;
    return std::stod(format_number(v));
  };
  nlohmann::ordered_json j;
  j["h"] = number(r.h);
  j["temperature"] = number(r.temperature);
  j["total_bits"] = number(r.total_bits);
  j["genuine_total_bits"] = number(r.genuine_total_bits);
  j["optimal_cut_mask"] = r.error ? nlohmann::ordered_json(nullptr)
                                  : nlohmann::ordered_json(r.optimal_cut_mask);
  j["E0_even"] = number(r.e0_even);
  j["E0_odd"] = number(r.e0_odd);
  j["gap"] = number(r.gap);
  j["genuine_classical_bits"] =
      r.genuine_classical_bits ? number(*r.genuine_classical_bits) : nlohmann::json(nullptr);
  j["genuine_quantum_bits"] =
      r.genuine_quantum_bits ? number(*r.genuine_quantum_bits) : nlohmann::json(nullptr);
  if (r.error) j["error"] = *r.error;
  return j.dump();
}

void write_records(std::ostream& out, const std::vector<SweepRecord>& records,
                   OutputFormat format) {
  if (format == OutputFormat::Csv) out << csv_header() << '\n';
  for (const auto& r : records) {
    out << (format == OutputFormat::Csv ? csv_row(r) : jsonl_row(r)) << '\n';
  }
}

}  // namespace xychain
