#pragma once

#include <stdexcept>

namespace qwalk {

/// Violation of a numeric invariant at runtime: unitarity drift, a
/// non-positive-semidefinite coin density matrix, or a shift that would
/// run past the allocated lattice. The CLI maps this to exit code 3.
struct numeric_contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk
