#pragma once

#include <stdexcept>
#include <string>

namespace fockmetric {

// Raised when a value breaks a documented numerical contract (non-Hermitian
// density matrix, covariance determinant below the uncertainty bound, ...).
struct ContractViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a numerical procedure cannot deliver its accuracy target
// (quadrature breakdown, truncation leakage in an evolved state, ...).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fockmetric
