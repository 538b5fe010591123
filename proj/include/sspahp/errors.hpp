#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sspahp {

// Bad data, bad arguments, or malformed files. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Hierarchy / grouping structure violates its invariants.
class StructuralError : public InputError {
public:
    using InputError::InputError;
};

// The arithmetic has no meaningful answer for these inputs. Maps to exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Every criterion carries zero information, so weights cannot be normalized.
class DegenerateWeightsError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Power iteration hit its cap; the last iterate is kept for diagnostics.
class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, std::vector<double> last_iterate)
        : NumericalError(what), last_iterate_(std::move(last_iterate)) {}

    const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }

private:
    std::vector<double> last_iterate_;
};

}  // namespace sspahp
