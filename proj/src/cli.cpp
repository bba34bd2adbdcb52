#include "xychain/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "xychain/reports.hpp"

namespace xychain::cli {

namespace {

double parse_double(std::string_view text, const std::string& what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ArgumentError(what + ": cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

constexpr FieldGrid kSweepGrid{0.0, 1.2, 241};
constexpr FieldGrid kCrossingGrid{0.0, 1.0, 512};

struct RawOptions {
  int n_sites = 4;
  double gamma = 0.6;
  double coupling = 1.0;
  std::vector<std::string> temps{"0.01"};
  std::string h_grid;
  bool discord = false;
  std::string measure_side = "a";
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = MeasurementOptimizerConfig{}.seed;
  int restarts = MeasurementOptimizerConfig{}.restarts;
  double prominence = 0.005;
  double tol = 1e-8;
  int threads = 0;
  bool report = false;
};

Invocation build_invocation(const RawOptions& raw, Command command) {
  Invocation inv;
  inv.command = command;
  inv.report = raw.report;

  SweepConfig& c = inv.sweep;
  c.n_sites = raw.n_sites;
  c.gamma = raw.gamma;
  c.coupling = raw.coupling;
  std::string temps;
  for (const auto& t : raw.temps) temps += (temps.empty() ? "" : ",") + t;
  c.temperatures = parse_temperatures(temps);
  c.compute_discord = raw.discord;
  c.optimizer.seed = raw.seed;
  c.optimizer.restarts = raw.restarts;
  c.optimizer.side = raw.measure_side == "b"      ? MeasuredSide::B
                     : raw.measure_side == "best" ? MeasuredSide::Best
                                                  : MeasuredSide::A;
  c.output_path = raw.out;
  c.format = raw.format == "jsonl" ? OutputFormat::Jsonl : OutputFormat::Csv;
  c.prominence = raw.prominence;
  c.threads = raw.threads;

  const bool crossing_command = command == Command::Crossings;
  const FieldGrid grid = raw.h_grid.empty() ? (crossing_command ? kCrossingGrid : kSweepGrid)
                                            : parse_field_grid(raw.h_grid);
  c.h_grid = grid;
  inv.crossings.h_range = {grid.start, grid.stop};
  inv.crossings.grid_points = grid.points;
  inv.crossings.bisection_tol = raw.tol;

  c.validate();
  if (!(raw.tol > 0.0)) throw ArgumentError("--tol must be > 0");
  if (crossing_command) {
    if (grid.start < 0.0 || grid.stop > 1.5) {
      throw ArgumentError("crossings: --h range must lie within [0, 1.5]");
    }
    if (grid.points < 64) throw ArgumentError("crossings: --h needs at least 64 grid points");
  }
  return inv;
}

int run_sweep_command(const Invocation& inv, std::ostream& out, std::ostream& err) {
  const SweepConfig& c = inv.sweep;
  const auto records = run_sweep(c);

  if (c.output_path.empty()) {
    write_records(out, records, c.format);
  } else {
    std::ofstream file(c.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open output file '" << c.output_path << "'\n";
      return kExitFailure;
    }
    write_records(file, records, c.format);
    if (!file.flush()) {
      err << "error: failed writing '" << c.output_path << "'\n";
      return kExitFailure;
    }
  }

  CrossingSet crossings;
  if (inv.report) {
    CrossingSearch search;
    search.h_range = {std::max(0.0, c.h_grid.start), std::min(1.5, c.h_grid.stop)};
    crossings = find_parity_crossings(c.n_sites, c.gamma, search, c.coupling);
  }
  for (double t : c.temperatures) {
    err << describe(build_minima_report(records, t, c.prominence, crossings, c.gamma));
  }

  const auto failed = std::count_if(records.begin(), records.end(),
                                    [](const SweepRecord& r) { return r.error.has_value(); });
  if (failed > 0) {
    err << "error: " << failed << " grid point(s) failed numerically\n";
    for (const auto& r : records) {
      if (r.error) err << "  h = " << format_number(r.h) << ", T = "
                       << format_number(r.temperature) << ": " << *r.error << '\n';
    }
    return kExitFailure;
  }
  return kExitSuccess;
}

}  // namespace

FieldGrid parse_field_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ArgumentError("--h expects start:stop:points, got '" + text + "'");
  FieldGrid grid;
  grid.start = parse_double(parts[0], "--h start");
  grid.stop = parse_double(parts[1], "--h stop");
  const double points = parse_double(parts[2], "--h points");
  if (points != static_cast<double>(static_cast<int>(points)) || points < 2) {
    throw ArgumentError("--h points must be an integer >= 2");
  }
  grid.points = static_cast<int>(points);
  if (!(grid.stop > grid.start)) throw ArgumentError("--h requires start < stop");
  return grid;
}

std::vector<double> parse_temperatures(const std::string& text) {
  std::vector<double> temps;
  for (auto part : split(text, ',')) {
    if (part.empty()) throw ArgumentError("--temps contains an empty entry");
    temps.push_back(parse_double(part, "--temps"));
  }
  return temps;
}

ParseResult parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Exact diagonalization of periodic XY chains and their genuine correlations",
               "xychain"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_config("--config", "", "Read flat key=value settings (long flag names) from FILE");
  app.fallthrough();
  app.require_subcommand(1);
  app.footer("Shared flags may appear before or after the subcommand.");

  RawOptions raw;
  app.add_option("--n", raw.n_sites, "Number of sites N")
      ->check(CLI::Range(2, kMaxSites))
      ->capture_default_str();
  app.add_option("--gamma", raw.gamma, "Anisotropy in [0, 1]")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--coupling", raw.coupling, "Coupling J")->capture_default_str();
  app.add_option("--temps", raw.temps, "Comma-separated temperatures")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--h", raw.h_grid,
                 "Field grid start:stop:points (sweep default 0:1.2:241, crossings 0:1:512)");
  app.add_flag("--discord", raw.discord, "Also compute genuine classical/quantum correlations");
  app.add_option("--measure-side", raw.measure_side, "Measured side of the cut")
      ->check(CLI::IsMember({"a", "b", "best"}))
      ->capture_default_str();
  app.add_option("--out", raw.out, "Output file (default: standard output)");
  app.add_option("--format", raw.format, "Record format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--seed", raw.seed, "Measurement optimizer seed")->capture_default_str();
  app.add_option("--restarts", raw.restarts, "Measurement optimizer restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--prominence", raw.prominence, "Minimum prominence (bits) of reported minima")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--tol", raw.tol, "Bisection tolerance for crossings")->capture_default_str();
  app.add_option("--threads", raw.threads, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--report", raw.report, "sweep: also locate crossings for the minima report");

  const std::map<Command, CLI::App*> commands{
      {Command::Sweep, app.add_subcommand("sweep", "Genuine correlations over a field/temperature grid")},
      {Command::Crossings, app.add_subcommand("crossings", "Parity level crossings, dense and analytic")},
      {Command::Factorization, app.add_subcommand("factorization", "Check the product ground state at h_F")},
      {Command::Validate, app.add_subcommand("validate", "Dense vs free-fermion sector energies")},
  };
  for (const auto& [_, sub] : commands) {
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->footer("See 'xychain --help' for the shared flags.");
  }

  ParseResult result;
  if (args.empty()) {
    result.exit_code = kExitUsage;
    result.message = app.help();
    return result;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.message = app.help();
    for (const auto& [_, sub] : commands) {
      if (sub->parsed()) result.message = sub->help();
    }
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.message = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitUsage;
    result.message = std::string("error: ") + e.what() + "\nRun with --help for more information.\n";
    return result;
  }

  Command command = Command::Sweep;
  for (const auto& [cmd, sub] : commands) {
    if (sub->parsed()) command = cmd;
  }
  try {
    result.invocation = build_invocation(raw, command);
  } catch (const ArgumentError& e) {
    result.exit_code = kExitUsage;
    result.message = std::string("error: ") + e.what() + "\n";
  }
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseResult parsed = parse_config(args);
  if (!parsed.invocation) {
    (parsed.exit_code == kExitSuccess ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  const Invocation& inv = *parsed.invocation;
  try {
    switch (inv.command) {
      case Command::Sweep:
        return run_sweep_command(inv, out, err);
      case Command::Crossings: {
        const auto report = report_crossings(inv.sweep.n_sites, inv.sweep.gamma, inv.crossings);
        out << describe(report);
        return report.agree ? kExitSuccess : kExitFailure;
      }
      case Command::Factorization: {
        const auto report = check_factorization(inv.sweep.n_sites, inv.sweep.gamma);
        out << describe(report);
        return report.status == FactorizationStatus::Fail ? kExitFailure : kExitSuccess;
      }
      case Command::Validate: {
        const auto report = validate_free_fermion();
        out << describe(report);
        return report.pass ? kExitSuccess : kExitFailure;
      }
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace xychain::cli
