#pragma once

// Low-level numeric building blocks: Gauss-Legendre rules, finite-difference
// stencil weights, a small dense least-squares solver.

#include <cstddef>
#include <span>
#include <vector>

namespace confbvp::num {

struct GaussRule {
    std::vector<double> nodes;   // on (-1, 1)
    std::vector<double> weights; // sum to 2
};

/// n-point Gauss-Legendre rule, computed by Newton iteration on the Legendre
/// recurrence and cached per n. Thread-safe.
const GaussRule& gauss_legendre(int n);

/// Finite-difference weights for the m-th derivative at x0 from the given
/// nodes (Fornberg's algorithm; nodes need not be equispaced).
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int m);

/// Least-squares solution of A x = b (rows >= cols) by Householder QR.
/// A is row-major with `cols` entries per row. Throws on rank deficiency.
std::vector<double> lstsq(std::vector<double> a, std::vector<double> b, int rows, int cols);

/// n equally spaced points from a to b inclusive (n >= 2).
std::vector<double> linspace(double a, double b, int n);

} // namespace confbvp::num
