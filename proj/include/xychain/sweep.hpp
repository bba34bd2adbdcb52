#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "xychain/correlations.hpp"
#include "xychain/minima.hpp"

namespace xychain {

/// Uniform grid start, start + step, ..., stop with `points` entries.
struct FieldGrid {
  double start = 0.0;
  double stop = 1.2;
  int points = 241;

  double step() const { return (stop - start) / static_cast<double>(points - 1); }
  double at(int i) const {
    return i == points - 1 ? stop : start + step() * static_cast<double>(i);
  }
};

enum class OutputFormat { Csv, Jsonl };

struct SweepConfig {
  int n_sites = 4;
  double gamma = 0.6;
  double coupling = 1.0;
  std::vector<double> temperatures{0.01};
  FieldGrid h_grid;
  bool compute_discord = false;
  MeasurementOptimizerConfig optimizer;
  std::string output_path;  // empty: standard output
  OutputFormat format = OutputFormat::Csv;
  double prominence = 0.005;
  double critical_field = kCriticalField;
  int threads = 0;  // 0: one per hardware thread

  /// Throws ArgumentError with an actionable message on invalid settings.
  void validate() const;
};

struct SweepRecord {
  double h = 0.0;
  double temperature = 0.0;
  double total_bits = 0.0;
  double genuine_total_bits = 0.0;
  std::uint32_t optimal_cut_mask = 0;
  double e0_even = 0.0;
  double e0_odd = 0.0;
  double gap = 0.0;
  std::optional<double> genuine_classical_bits;
  std::optional<double> genuine_quantum_bits;
  // Set when the point failed numerically; the numeric fields are then NaN.
  std::optional<std::string> error;
};

SweepRecord evaluate_point(const SweepConfig& config, double temperature, double h);

/// One record per (T, h), ordered by temperature (as given) then ascending h.
/// Points are evaluated in parallel; the output order does not depend on it.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// The T^(N)-versus-h series for one temperature.
std::vector<SeriesPoint> genuine_total_series(const std::vector<SweepRecord>& records,
                                              double temperature);

// Numbers use 12 significant digits; lines end in LF.
std::string format_number(double value);
std::string csv_header();
std::string csv_row(const SweepRecord& record);
std::string jsonl_row(const SweepRecord& record);
void write_records(std::ostream& out, const std::vector<SweepRecord>& records,
                   OutputFormat format);

}  // namespace xychain
