#pragma once

// Linear combinations of real powers of t ("fractional polynomials").
//
// Conformable differentiation and weighted integration map this class to
// itself with exactly computable coefficients, so it doubles as an exact
// reference path for the quadrature-based solvers.

#include "confbvp/fraccalc.hpp"

#include <vector>

namespace confbvp {

struct FracTerm {
    double coef;
    double power; // may be negative; eval is then only valid for t > 0
};

class FracPoly {
public:
    FracPoly() = default;
    explicit FracPoly(std::vector<FracTerm> terms) : terms_(std::move(terms)) { normalize(); }

    static FracPoly constant(double c) { return FracPoly({{c, 0.0}}); }
    static FracPoly monomial(double c, double p) { return FracPoly({{c, p}}); }
    /// Ordinary polynomial sum_k coeffs[k] t^k.
    static FracPoly from_coeffs(const std::vector<double>& coeffs);

    double eval(double t) const;
    double eval1() const; // value at t = 1

    FracPoly& operator+=(const FracPoly& other);
    FracPoly operator+(const FracPoly& other) const;
    FracPoly scaled(double c) const;
    /// Multiplication by t^q.
    FracPoly shifted(double q) const;

    /// Exact conformable derivative: D^a t^p = p t^(p-a).
    FracPoly conf_diff(double a) const;
    /// Exact classical derivative.
    FracPoly derivative() const;
    /// Exact weighted integral from 0: t^p -> t^(p+w) / (p+w).
    FracPoly integrate0_weighted(double w) const;

    ScalarFn as_fn() const;
    const std::vector<FracTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

private:
    void normalize();
    std::vector<FracTerm> terms_;
};

} // namespace confbvp
