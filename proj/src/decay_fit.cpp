#include "timobeam/decay_fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "timobeam/errors.hpp"

namespace timobeam {

std::string decay_model_name(DecayModel m) {
    switch (m) {
        case DecayModel::exponential: return "exponential";
        case DecayModel::polynomial: return "polynomial";
        case DecayModel::logarithmic: return "logarithmic";
    }
    return "?";
}

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw ConfigError("fit_line: xs and ys must have equal length");
    const std::size_t n = xs.size();
    if (n < 3) throw ConfigError("fit_line: need at least 3 samples, got " + std::to_string(n));

    double x_mean = 0.0, y_mean = 0.0;
    bool ys_constant = true;
    for (std::size_t i = 0; i < n; ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
        if (ys[i] != ys[0]) ys_constant = false;
    }
    x_mean /= static_cast<double>(n);
    y_mean /= static_cast<double>(n);

    if (ys_constant) {
        // SS_tot = 0: the flat line is exact by convention.
        LineFit fit;
        fit.slope = 0.0;
        fit.intercept = ys[0];
        fit.r_squared = 1.0;
        bool xs_constant = true;
        for (std::size_t i = 0; i < n; ++i)
            if (xs[i] != xs[0]) xs_constant = false;
        if (xs_constant) throw ConfigError("fit_line: xs are all equal (zero variance)");
        return fit;
    }

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - x_mean;
        const double dy = ys[i] - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw ConfigError("fit_line: xs are all equal (zero variance)");

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = y_mean - fit.slope * x_mean;

    if (syy == 0.0) {
        fit.r_squared = 1.0;
        return fit;
    }
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
        ss_res += r * r;
    }
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    return fit;
}

std::vector<std::pair<double, double>> fit_window(const EnergyTrace& trace,
                                                  double window_fraction, double floor_factor,
                                                  EnergyColumn column) {
    const auto& samples = trace.samples;
    auto energy = [&](const EnergySample& s) {
        return column == EnergyColumn::diagonal ? s.e_diagonal : s.e_physical;
    };

    const double e0 = samples.empty() ? 0.0 : energy(samples.front());
    if (e0 <= 0.0) throw ConfigError("classify_decay: trace starts with zero energy");
    // Underflow guard: close to the subnormal range log E loses meaning.
    const double floor =
        floor_factor * std::numeric_limits<double>::min() * std::max(1.0, e0);

    const std::size_t start =
        static_cast<std::size_t>(window_fraction * static_cast<double>(samples.size()));
    std::vector<std::pair<double, double>> window;
    for (std::size_t i = start; i < samples.size(); ++i) {
        const double e = energy(samples[i]);
        if (e > 0.0 && e >= floor) window.emplace_back(samples[i].t, std::log(e));
    }
    return window;
}

namespace {

DecayFit make_fit(DecayModel model, const std::vector<double>& xs, const std::vector<double>& ys,
                  double t_start, double t_end) {
    const LineFit line = fit_line(xs, ys);
    DecayFit fit;
    fit.model = model;
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.r_squared = line.r_squared;
    fit.t_start = t_start;
    fit.t_end = t_end;
    fit.sample_count = xs.size();
    return fit;
}

std::optional<DecayFit> fit_model(DecayModel model,
                                  const std::vector<std::pair<double, double>>& window) {
    std::vector<double> xs, ys;
    double t_start = 0.0, t_end = 0.0;
    for (const auto& [t, log_e] : window) {
        double x;
        switch (model) {
            case DecayModel::exponential:
                x = t;
                break;
            case DecayModel::polynomial:
                if (t <= 0.0) continue;  // log t undefined
                x = std::log(t);
                break;
            case DecayModel::logarithmic:
                if (t <= 1.0) continue;  // log log t undefined
                x = std::log(std::log(t));
                break;
            default:
                continue;
        }
        if (xs.empty()) t_start = t;
        t_end = t;
        xs.push_back(x);
        ys.push_back(log_e);
    }
    if (xs.size() < 3) return std::nullopt;
    return make_fit(model, xs, ys, t_start, t_end);
}

}  // namespace

const std::optional<DecayFit>& FitReport::fit(DecayModel m) const {
    switch (m) {
        case DecayModel::exponential: return exponential;
        case DecayModel::polynomial: return polynomial;
        case DecayModel::logarithmic: return logarithmic;
    }
    return exponential;
}

std::vector<std::string> FitReport::summary_lines() const {
    std::vector<std::string> lines;
    char buf[256];
    lines.push_back("fingerprint: " + fingerprint);
    std::string selected_line = "selected: " + decay_model_name(selected);
    if (non_decaying)
        selected_line += " (non-decaying: |slope| < 1e-10)";
    else if (fit(selected) && fit(selected)->r_squared < 0.5)
        selected_line += " (weak fit: r2 < 0.5, no decay law describes this trace well)";
    lines.push_back(selected_line);
    lines.push_back("model        slope            intercept        r2               samples  window");
    for (DecayModel m :
         {DecayModel::exponential, DecayModel::polynomial, DecayModel::logarithmic}) {
        const auto& f = fit(m);
        if (f) {
            std::snprintf(buf, sizeof(buf), "%-12s %-16.9g %-16.9g %-16.12g %-8zu [%g, %g]",
                          decay_model_name(m).c_str(), f->slope, f->intercept, f->r_squared,
                          f->sample_count, f->t_start, f->t_end);
            lines.emplace_back(buf);
        } else {
            std::snprintf(buf, sizeof(buf), "%-12s (not enough samples in its domain)",
                          decay_model_name(m).c_str());
            lines.emplace_back(buf);
        }
    }
    return lines;
}

FitReport classify_decay(const EnergyTrace& trace, double window_fraction, double floor_factor,
                         EnergyColumn column) {
    const auto window = fit_window(trace, window_fraction, floor_factor, column);
    if (window.size() < 10)
        throw ConfigError("classify_decay: only " + std::to_string(window.size()) +
                          " positive samples in the fit window (need 10)");

    FitReport report;
    report.fingerprint = trace.fingerprint;
    report.exponential = fit_model(DecayModel::exponential, window);
    report.polynomial = fit_model(DecayModel::polynomial, window);
    report.logarithmic = fit_model(DecayModel::logarithmic, window);

    // Preference order resolves exact ties toward the stronger claim.
    double best = -1.0;
    for (DecayModel m :
         {DecayModel::exponential, DecayModel::polynomial, DecayModel::logarithmic}) {
        const auto& f = report.fit(m);
        if (f && f->r_squared > best) {
            best = f->r_squared;
            report.selected = m;
        }
    }
    if (best < 0.0) throw ConfigError("classify_decay: no model had enough samples to fit");
    report.non_decaying = std::abs(report.selected_fit().slope) < 1e-10;
    return report;
}

}  // namespace timobeam
