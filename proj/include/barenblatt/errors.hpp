#ifndef BARENBLATT_ERRORS_HPP
#define BARENBLATT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace barenblatt {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operation defined only for a particular space dimension.
class DimensionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Argument sits on a pole of the Gamma function.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Evaluation point or stencil incompatible with the discretisation grid.
class GridError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Iterative method or adaptive quadrature failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace barenblatt

#endif // BARENBLATT_ERRORS_HPP
