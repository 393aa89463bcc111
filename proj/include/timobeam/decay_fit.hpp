#pragma once

#include <optional>
#include <string>
#include <vector>

#include "timobeam/energy.hpp"

namespace timobeam {

/// Candidate decay laws, in order of preference for tie-breaking:
/// E ~ exp(a t), E ~ t^a, E ~ (log t)^a.
enum class DecayModel { exponential, polynomial, logarithmic };

std::string decay_model_name(DecayModel m);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};

/// Ordinary least squares of ys against xs (equal lengths >= 3).
/// r_squared = 1 - SS_res/SS_tot, defined as 1 when SS_tot = 0.
/// Throws ConfigError if xs has zero variance or the inputs are malformed.
LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

/// One decay-law fit: a line through the transformed coordinates
/// (t, log E), (log t, log E) or (log log t, log E).
struct DecayFit {
    DecayModel model = DecayModel::exponential;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
    double t_start = 0.0;
    double t_end = 0.0;
    std::size_t sample_count = 0;
};

/// Which energy column of the trace to fit.
enum class EnergyColumn { diagonal, physical };

struct FitReport {
    /// A model is absent when fewer than 3 samples survive its domain
    /// restriction (t > 0 for polynomial, t > 1 for logarithmic).
    std::optional<DecayFit> exponential;
    std::optional<DecayFit> polynomial;
    std::optional<DecayFit> logarithmic;

    DecayModel selected = DecayModel::exponential;
    bool non_decaying = false;  // |selected slope| < 1e-10
    std::string fingerprint;

    const std::optional<DecayFit>& fit(DecayModel m) const;
    const DecayFit& selected_fit() const { return *fit(selected); }

    /// Human-readable report, one string per line.
    std::vector<std::string> summary_lines() const;
};

/// The (t, log E) pairs that enter the fits: the first `window_fraction` of
/// the samples is skipped (startup transient) and samples with E <= 0 or
/// within floor_factor of the floating-point floor scaled by E(0), i.e.
/// E < floor_factor * DBL_MIN * max(1, E(0)), are dropped.
std::vector<std::pair<double, double>> fit_window(const EnergyTrace& trace,
                                                  double window_fraction,
                                                  double floor_factor,
                                                  EnergyColumn column);

/// Fits all three decay laws on the windowed trace and selects the one with
/// the largest r_squared; ties break toward the stronger claim
/// (exponential > polynomial > logarithmic).
///
/// Throws ConfigError when fewer than 10 positive samples remain in the
/// window, or when all energies are zero.
FitReport classify_decay(const EnergyTrace& trace, double window_fraction = 0.1,
                         double floor_factor = 1e3,
                         EnergyColumn column = EnergyColumn::diagonal);

}  // namespace timobeam
