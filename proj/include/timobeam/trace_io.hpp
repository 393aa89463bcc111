#pragma once

#include <filesystem>
#include <string>

#include "timobeam/decay_fit.hpp"
#include "timobeam/energy.hpp"
#include "timobeam/mesh.hpp"
#include "timobeam/state.hpp"

namespace timobeam {

/// Significant digits used for reals in output files: 17 by default
/// (round-trip exact), overridable with the TIMOBEAM_PRECISION environment
/// variable (clamped to [6, 17]).
int output_precision();

/// Locale-independent scientific rendering with the given number of
/// significant digits, e.g. 3.3333333333333331e-01.
std::string render_real(double x, int digits);

/// Writes the energy trace as CSV with the fixed schema
///   step,t,E_paper,E_phys,dissipation_rate,identity_residual
/// one row per level, reals in scientific notation, \n line endings.
void write_trace_csv(const std::filesystem::path& path, const EnergyTrace& trace,
                     int digits = output_precision());

/// Reads a trace CSV written by write_trace_csv. The fingerprint of the
/// returned trace is the FNV-1a hash of the file bytes.
EnergyTrace read_trace_csv(const std::filesystem::path& path);

/// Writes one state snapshot as CSV with schema x,phi,psi,u,v, one row per
/// node including the boundary zeros.
void write_snapshot_csv(const std::filesystem::path& path, const Mesh& mesh,
                        const StateLevel& level, int digits = output_precision());

/// Writes the human-readable fit report.
void write_fit_report(const std::filesystem::path& path, const FitReport& report);

/// Writes the plot-ready two-column files for the three decay laws:
/// plot_exponential.csv (t,logE), plot_polynomial.csv (logt,logE) and
/// plot_logarithmic.csv (loglogt,logE), using the same window as the fits.
void write_plot_data(const std::filesystem::path& dir, const EnergyTrace& trace,
                     double window_fraction, double floor_factor, EnergyColumn column,
                     int digits = output_precision());

}  // namespace timobeam
