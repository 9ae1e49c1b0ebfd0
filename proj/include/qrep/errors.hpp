#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

// A state, branch or normalizer with (numerically) vanishing norm. Signals a
// forbidden measurement branch, not a programming error.
struct ZeroNormError : std::runtime_error {
    explicit ZeroNormError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rate denominator detuning - i*dissipation/2 below threshold (outside the
// dispersive regime).
struct DegenerateDenominatorError : std::runtime_error {
    explicit DegenerateDenominatorError(const std::string& msg) : std::runtime_error(msg) {}
};

// Matrix exponential did not produce a finite result.
struct ConvergenceFailureError : std::runtime_error {
    explicit ConvergenceFailureError(const std::string& msg) : std::runtime_error(msg) {}
};

// A density matrix whose trace deviates too far from one.
struct NotNormalizedError : std::runtime_error {
    explicit NotNormalizedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Sweep configuration rejected (schema violation, unknown key, bad range).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Figure id not in the built-in catalogue.
struct UnknownFigureError : std::runtime_error {
    explicit UnknownFigureError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qrep
