#pragma once

#include "kudla/errors.hpp"

namespace kudla {

/// Truncation and quadrature contract shared by every numeric routine.
struct Precision {
    double abs_tol = 1e-12;
    /// Accept when err <= max(abs_tol, rel_tol * |value|); 0 disables.
    double rel_tol = 0.0;
    int max_subdivisions = 4000;
    /// Finite integration panels stop where the exponential decay factor
    /// reaches e^{-tail_cut}; the remaining tail is bounded analytically.
    double tail_cut = 40.0;

    void validate() const {
        if (!(abs_tol > 0.0)) throw DomainError("Precision: abs_tol must be positive");
        if (rel_tol < 0.0) throw DomainError("Precision: rel_tol must be nonnegative");
        if (max_subdivisions <= 0) throw DomainError("Precision: max_subdivisions must be positive");
        if (!(tail_cut > 0.0)) throw DomainError("Precision: tail_cut must be positive");
    }

    double budget(double value) const {
        const double rel = rel_tol * (value < 0 ? -value : value);
        return rel > abs_tol ? rel : abs_tol;
    }
};

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evaluations = 0;
};

}  // namespace kudla
