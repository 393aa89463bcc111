#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "timobeam/decay_fit.hpp"
#include "timobeam/run_config.hpp"
#include "timobeam/stepper.hpp"

namespace timobeam {

/// Runs one simulation and writes its outputs into `out_dir` (created if
/// missing): trace.csv, snapshot_*.csv for each requested time, plot data,
/// and fit_report.txt. When the trace is too short to fit, the report states
/// why instead of failing the run.
///
/// Returns the simulation result for callers that want the in-memory trace.
SimulationResult run_command(const RunConfig& config, const std::filesystem::path& out_dir,
                             EnergyColumn fit_column = EnergyColumn::diagonal);

struct SweepLevel {
    double dt = 0.0;
    long steps = 0;
    double metric = 0.0;  // undamped: max relative E_phys drift; damped: max |identity residual|
};

struct SweepResult {
    std::string metric_name;
    std::vector<SweepLevel> levels;
    /// observed_orders[k] = log2(metric_k / metric_{k+1}).
    std::vector<double> observed_orders;
};

/// Runs the same physical setup at dt, dt/2, dt/4, ... (the Courant ratio is
/// halved per level) and collects drift/residual norms with their observed
/// orders. Throws ConfigError if levels < 2.
SweepResult refinement_sweep(const RunConfig& base, int levels);

/// Writes the sweep table as CSV (level,dt,steps,<metric>,observed_order;
/// the order field is empty on the coarsest level).
void write_sweep_csv(const std::filesystem::path& path, const SweepResult& sweep);

/// The sweep table formatted for the terminal.
std::vector<std::string> sweep_table_lines(const SweepResult& sweep);

/// Maximum relative drift of the physical energy over a trace,
/// max_n |E_phys(n) - E_phys(0)| / E_phys(0).
double max_relative_drift(const EnergyTrace& trace);

/// Maximum |identity residual| over the interior levels of a trace.
double max_identity_residual(const EnergyTrace& trace);

}  // namespace timobeam
