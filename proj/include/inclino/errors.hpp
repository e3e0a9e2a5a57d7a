#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace inclino {

/// Invalid user input: bad config values, schema violations, out-of-range
/// temperatures, malformed geometry. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// One residual sample of an iterative solve, kept for diagnostics.
struct ResidualSample {
    int iteration = 0;
    double energy = 0.0;
    double vorticity = 0.0;
    double stream_function = 0.0;
};

/// Solver failed to reach the requested tolerance. Carries the residual
/// history so the caller can see whether the solve stalled or diverged.
/// Maps to CLI exit code 2.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<ResidualSample> history)
        : std::runtime_error(what), residual_history(std::move(history)) {}

    std::vector<ResidualSample> residual_history;
};

/// Filesystem trouble: unreadable input, unwritable output directory.
/// Maps to CLI exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace inclino
