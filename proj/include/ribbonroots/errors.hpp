#pragma once

#include <stdexcept>
#include <string>

namespace ribbonroots {

// Precondition violated by the caller (cell outside a diagram, bad partition, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A brute-force oracle was asked to exceed its configured size budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two routes that must agree did not (e.g. a non-exact division in Naruse's formula).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Root finding failed to converge or to certify its residuals.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ribbonroots
