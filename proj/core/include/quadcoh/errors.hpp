#pragma once

#include <stdexcept>
#include <string>

namespace quadcoh {

// Error taxonomy used across the library. The CLI maps these onto its
// stable exit codes (parse 2, convergence 3, unsupported 4).

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested order/dimension exceeds what the implementation can represent
// (Hermite order cap, Fock truncation loss above threshold, ...).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values encountered during evaluation.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation applied to a state family it is not defined for
// (e.g. wavefunction of a mixed state).
struct TypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// chi discretization does not cover enough probability mass.
struct CoverageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Eigenvalue below the clamp threshold of a nominally positive matrix.
struct PositivityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violated; carries the offending measured quantity
// (e.g. the integral of a density that should have been 1).
struct ContractError : std::runtime_error {
    ContractError(const std::string& msg, double measured_value)
        : std::runtime_error(msg), measured(measured_value) {}
    double measured;
};

// Malformed state/config documents.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace quadcoh
