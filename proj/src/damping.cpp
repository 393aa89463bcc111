#include "timobeam/damping.hpp"

#include <cmath>

#include "timobeam/errors.hpp"

namespace timobeam {

double flat_exp(double s) {
    // Below this magnitude 1/s^2 overflows; the true value underflows to 0.
    if (std::abs(s) < 1e-150) return 0.0;
    return std::exp(-1.0 / (s * s));
}

double odd_flat_exp(double s) {
    if (s == 0.0) return 0.0;
    return s > 0.0 ? flat_exp(s) : -flat_exp(s);
}

double flat_exp_ratio(double s) {
    const double a = std::abs(s);
    if (a < 1e-150) return 0.0;
    return flat_exp(a) / a;
}

DampingModel DampingModel::linear(double mu) {
    if (!(mu > 0.0)) throw ConfigError("damping: mu must be positive");
    DampingModel m;
    m.tag = Tag::linear;
    m.mu = mu;
    return m;
}

DampingModel DampingModel::power_law() {
    DampingModel m;
    m.tag = Tag::power_law;
    return m;
}

DampingModel DampingModel::exp_flat() {
    DampingModel m;
    m.tag = Tag::exp_flat;
    m.pairing = MassPairing::lumped;
    return m;
}

std::string DampingModel::describe() const {
    switch (tag) {
        case Tag::undamped:
            return "undamped";
        case Tag::linear:
            return "linear(mu=" + std::to_string(mu) + ")" + (literal_mode ? " [literal]" : "");
        case Tag::power_law:
            return std::string("powerlaw") +
                   (pairing == MassPairing::lumped ? " [lumped]" : "");
        case Tag::exp_flat:
            return std::string("expflat") + (literal_mode ? " [literal]" : "") +
                   (pairing == MassPairing::lumped ? " [lumped]" : "");
    }
    return "?";
}

}  // namespace timobeam
