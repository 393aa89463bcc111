#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "timobeam/damping.hpp"
#include "timobeam/materials.hpp"
#include "timobeam/mesh.hpp"

namespace timobeam {

/// Initial-condition presets. cos_sin and sine_mode are the printed data of
/// the reference runs; their cosine component is nonzero at the ends, so the
/// interior interpolation puts a steep layer into the first and last element.
/// sine_pair uses sines for both fields and is boundary-compatible, which
/// keeps the energy out of the highest mesh modes (used by the conservation
/// showcase).
enum class ICKind { cos_sin, sine_mode, sine_pair };

/// Everything that defines one run. Defaults are the reference parameter set
/// L=50, T=4, c=0.2, Nx=10 with unit materials, linear damping mu=1 and the
/// mode-2 sine initial data.
struct RunConfig {
    double length = 50.0;
    std::size_t nx = 10;
    double final_time = 4.0;
    double courant = 0.2;  // dt = courant * h
    Materials materials{};

    DampingModel::Tag damping_tag = DampingModel::Tag::linear;
    double mu = 1.0;
    /// Mass pairing of the damping term; unset means the per-model default
    /// (lumped for exp_flat, consistent otherwise).
    std::optional<DampingModel::MassPairing> pairing;
    bool literal_mode = false;

    ICKind ic = ICKind::sine_mode;
    int mode_number = 2;
    double amplitude = 1.0;
    bool cfl_override = false;

    // Output controls.
    std::vector<double> snapshot_times;
    double window_fraction = 0.1;
    double energy_floor_factor = 1e3;

    /// Largest Courant ratio accepted without the override flag.
    static constexpr double max_courant = 0.5;

    Mesh mesh() const { return Mesh(length, nx); }
    double spacing() const { return mesh().spacing(); }
    double dt() const { return courant * spacing(); }

    /// The damping model with overrides applied.
    DampingModel damping_model() const;

    /// Number of time steps; the trace has steps()+1 levels. At least one
    /// step is always taken so degenerate horizons still produce levels 0,1.
    long steps() const;

    /// Throws ConfigError on invalid values; enforces steps() >= 2 and the
    /// CFL guard courant <= max_courant (unless cfl_override).
    void validate() const;

    /// Canonical key=value rendering (one per line, fixed key order).
    std::string canonical() const;

    /// FNV-1a hash of canonical(), as a 16-digit hex string.
    std::string fingerprint() const;
};

/// Applies one key=value assignment. Throws ConfigError naming the key on
/// unknown keys or unparseable values.
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

/// Builds a RunConfig from an optional key=value file and command-line
/// key=value tokens (tokens override file values), then validates it.
/// Starts from `base` so presets can be layered underneath.
RunConfig parse_config(const std::vector<std::string>& tokens,
                       const std::optional<std::string>& config_file = std::nullopt,
                       const RunConfig& base = RunConfig());

/// Named run presets (fig1..fig8 and "data"). Throws ConfigError on an
/// unknown name.
RunConfig preset_config(const std::string& name);

/// Names of all presets, in display order.
std::vector<std::string> preset_names();

/// One-line description of a preset.
std::string preset_summary(const std::string& name);

/// 64-bit FNV-1a of an arbitrary byte string, as a 16-digit hex string.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace timobeam
