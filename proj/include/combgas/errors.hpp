#pragma once
#include <stdexcept>
#include <string>

namespace combgas {

// Bad user input or precondition violation. The CLI maps this to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solver failure, lost monotonicity, non-convergence. Exit code 2.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quantity that provably diverges for the requested parameters (informational, exit code 3).
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace combgas
