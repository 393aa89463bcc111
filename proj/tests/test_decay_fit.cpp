#include <doctest.h>

#include <cmath>

#include "timobeam/decay_fit.hpp"
#include "timobeam/errors.hpp"

using namespace timobeam;

namespace {

EnergyTrace synthetic_trace(double t0, double t1, std::size_t n,
                            double (*energy)(double)) {
    EnergyTrace trace;
    trace.fingerprint = "synthetic";
    for (std::size_t i = 0; i < n; ++i) {
        EnergySample s;
        s.step = static_cast<long>(i);
        s.t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1);
        s.e_diagonal = energy(s.t);
        s.e_physical = s.e_diagonal;
        trace.samples.push_back(s);
    }
    return trace;
}

}  // namespace

TEST_CASE("fit_line: exact line is recovered with r^2 = 1") {
    const LineFit fit = fit_line({0.0, 1.0, 2.0}, {2.0, -1.0, -4.0});
    CHECK(fit.slope == doctest::Approx(-3.0).epsilon(1e-15));
    CHECK(fit.intercept == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(fit.r_squared == 1.0);
}

TEST_CASE("fit_line: constant ys give slope 0 and r^2 = 1 by convention") {
    const LineFit fit = fit_line({0.0, 1.0, 2.0, 5.0}, {3.0, 3.0, 3.0, 3.0});
    CHECK(fit.slope == 0.0);
    CHECK(fit.intercept == 3.0);
    CHECK(fit.r_squared == 1.0);
}

TEST_CASE("fit_line: symmetric perturbation keeps the line, lowers r^2") {
    // y = 2 - 3x on x = 0,1,2,3 plus (+e,-e,-e,+e) with e = 1/4: the
    // perturbation is orthogonal to both regressors, so slope and intercept
    // are unchanged, SS_res = 4e^2 = 1/4 and SS_tot = 45 + 4e^2, giving
    // r^2 = 180/181 exactly.
    const double e = 0.25;
    const LineFit fit = fit_line({0.0, 1.0, 2.0, 3.0},
                                 {2.0 + e, -1.0 - e, -4.0 - e, -7.0 + e});
    CHECK(fit.slope == doctest::Approx(-3.0).epsilon(1e-14));
    CHECK(fit.intercept == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(fit.r_squared == doctest::Approx(180.0 / 181.0).epsilon(1e-14));
    CHECK(fit.r_squared < 1.0);
}

TEST_CASE("fit_line: rejects degenerate input") {
    CHECK_THROWS_AS(fit_line({1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), ConfigError);
    CHECK_THROWS_AS(fit_line({1.0, 2.0}, {1.0, 2.0}), ConfigError);
    CHECK_THROWS_AS(fit_line({1.0, 2.0, 3.0}, {1.0, 2.0}), ConfigError);
}

TEST_CASE("classify_decay: exponential round-trip with the printed constants") {
    const EnergyTrace trace = synthetic_trace(
        0.0, 4.0, 400, [](double t) { return std::exp(160.0 - 45.71 * t); });
    const FitReport report = classify_decay(trace);
    CHECK(report.selected == DecayModel::exponential);
    const DecayFit& fit = *report.exponential;
    CHECK(std::abs(fit.slope - (-45.71)) <= 1e-9 * 45.71);
    CHECK(std::abs(fit.intercept - 160.0) <= 1e-9 * 160.0);
    CHECK(fit.r_squared >= 1.0 - 1e-12);
}

TEST_CASE("classify_decay: polynomial round-trip with the printed constants") {
    const EnergyTrace trace = synthetic_trace(1.001, 4.0, 400, [](double t) {
        return std::exp(1.61 - 434.78 * std::log(t));
    });
    const FitReport report = classify_decay(trace);
    CHECK(report.selected == DecayModel::polynomial);
    const DecayFit& fit = *report.polynomial;
    CHECK(std::abs(fit.slope - (-434.78)) <= 1e-9 * 434.78);
    CHECK(std::abs(fit.intercept - 1.61) <= 1e-9 * 1.61);
    CHECK(fit.r_squared >= 1.0 - 1e-12);
    CHECK(report.exponential->r_squared < fit.r_squared);
}

TEST_CASE("classify_decay: logarithmic round-trip with the printed constants") {
    const EnergyTrace trace = synthetic_trace(2.0, 100.0, 400, [](double t) {
        return std::exp(1.10 - 50.0 * std::log(std::log(t)));
    });
    const FitReport report = classify_decay(trace);
    CHECK(report.selected == DecayModel::logarithmic);
    const DecayFit& fit = *report.logarithmic;
    CHECK(std::abs(fit.slope - (-50.0)) <= 1e-9 * 50.0);
    CHECK(std::abs(fit.intercept - 1.10) <= 1e-9 * 1.10);
    CHECK(fit.r_squared >= 1.0 - 1e-12);
}

TEST_CASE("classify_decay: selection is consistent across the three families") {
    struct Family {
        DecayModel model;
        double (*energy)(double);
    };
    const Family families[] = {
        {DecayModel::exponential, [](double t) { return std::exp(2.0 - 1.5 * t); }},
        {DecayModel::polynomial, [](double t) { return std::exp(0.5 - 3.0 * std::log(t)); }},
        {DecayModel::logarithmic,
         [](double t) { return std::exp(1.0 - 8.0 * std::log(std::log(t))); }},
    };
    for (const Family& family : families) {
        const EnergyTrace trace = synthetic_trace(1.5, 60.0, 300, family.energy);
        const FitReport report = classify_decay(trace);
        CHECK(report.selected == family.model);
    }
}

TEST_CASE("classify_decay: a constant trace is exponential with slope 0, flagged non-decaying") {
    const EnergyTrace trace = synthetic_trace(0.0, 10.0, 100, [](double) { return 2.5; });
    const FitReport report = classify_decay(trace);
    CHECK(report.selected == DecayModel::exponential);
    CHECK(report.selected_fit().slope == 0.0);
    CHECK(report.selected_fit().r_squared == 1.0);
    CHECK(report.non_decaying);
}

TEST_CASE("classify_decay: rescaling energies shifts intercepts by log(lambda) only") {
    auto energy = [](double t) { return std::exp(3.0 - 2.0 * t); };
    const EnergyTrace base = synthetic_trace(0.5, 8.0, 200, energy);
    EnergyTrace scaled = base;
    const double lambda = 37.5;
    for (EnergySample& s : scaled.samples) {
        s.e_diagonal *= lambda;
        s.e_physical *= lambda;
    }
    const FitReport a = classify_decay(base);
    const FitReport b = classify_decay(scaled);
    for (DecayModel m :
         {DecayModel::exponential, DecayModel::polynomial, DecayModel::logarithmic}) {
        const auto& fa = a.fit(m);
        const auto& fb = b.fit(m);
        REQUIRE(fa.has_value());
        REQUIRE(fb.has_value());
        CHECK(fb->slope == doctest::Approx(fa->slope).epsilon(1e-9));
        CHECK(fb->intercept - fa->intercept == doctest::Approx(std::log(lambda)).epsilon(1e-9));
        CHECK(fb->r_squared == doctest::Approx(fa->r_squared).epsilon(1e-12));
    }
    CHECK(a.selected == b.selected);
}

TEST_CASE("classify_decay: window skips the startup transient") {
    // Heavily corrupted first 10% of samples must not affect the fit.
    EnergyTrace trace = synthetic_trace(0.0, 10.0, 200, [](double t) {
        return std::exp(1.0 - 0.8 * t);
    });
    for (std::size_t i = 0; i < 19; ++i) trace.samples[i].e_diagonal *= 100.0;
    const FitReport report = classify_decay(trace, 0.1);
    CHECK(report.selected == DecayModel::exponential);
    CHECK(report.exponential->slope == doctest::Approx(-0.8).epsilon(1e-9));
    CHECK(report.exponential->t_start >= 0.95);
}

TEST_CASE("classify_decay: error paths") {
    SUBCASE("too few positive samples") {
        EnergyTrace trace = synthetic_trace(0.0, 1.0, 8, [](double) { return 1.0; });
        CHECK_THROWS_AS(classify_decay(trace), ConfigError);
    }
    SUBCASE("all-zero energies") {
        EnergyTrace trace = synthetic_trace(0.0, 1.0, 50, [](double) { return 0.0; });
        CHECK_THROWS_AS(classify_decay(trace), ConfigError);
    }
    SUBCASE("floor cut removes samples near the underflow floor") {
        EnergyTrace trace = synthetic_trace(0.0, 10.0, 100, [](double t) {
            return std::exp(-100.0 * t) + 1e-306;
        });
        const FitReport report = classify_decay(trace);
        // Beyond t ~ 7 the samples sit at the additive 1e-306 floor, inside
        // the underflow guard band; they must not flatten the fit.
        CHECK(report.exponential->t_end < 8.0);
        CHECK(report.exponential->slope == doctest::Approx(-100.0).epsilon(1e-6));
    }
}
