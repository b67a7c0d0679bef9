#pragma once

#include <stdexcept>
#include <string>

namespace kudla {

/// Input outside the mathematical domain of an operation (bad discriminant,
/// m of the wrong class, z outside the Siegel half-space, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// z = (z1, z2, z3) violates y1 > 0, y1 y3 - y2^2 > 0.
class OutsideHalfSpaceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A Green-function evaluation hit a lattice vector whose Humbert surface
/// passes through z (R(x,z) below the singular threshold).
class SingularPointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical routine could not reach the requested tolerance within its
/// iteration or subdivision budget.
class ToleranceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lattice enumeration would exceed its configured point cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kudla
