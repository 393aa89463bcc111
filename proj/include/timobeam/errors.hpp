#pragma once

#include <stdexcept>
#include <string>

namespace timobeam {

/// Invalid user input: bad config key/value, CFL violation, malformed file.
/// The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during a run (singular pivot, nonfinite state).
/// The CLI maps this to exit code 2.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, long step = -1)
        : std::runtime_error(what), step_(step) {}

    /// Step index at which the failure was detected, -1 if not applicable.
    long step() const { return step_; }

private:
    long step_;
};

}  // namespace timobeam
