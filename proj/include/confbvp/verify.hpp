#pragma once

// Numerical adjudication of the kernel claims: differential-equation
// residuals, boundary functionals, positivity and upper-bound scans, symmetry
// of the Lidstone kernel, and regression against the integer-order kernels.
//
// Boundary functionals involving derivatives are evaluated two ways:
//   * at t = 1 the iterated conformable operator is expanded into classical
//     derivatives (all power prefactors equal 1 there) and one-sided stencils
//     supply x', x'', x''';
//   * at t = 0 the operator value is a limit by definition, and the solution
//     behaves like c_0 + sum c_i t^(e_i) with family-determined exponents, so
//     the limit is read off a least-squares fit on a geometric ladder of
//     interior sample points.

#include "confbvp/bounds.hpp"
#include "confbvp/fracpoly.hpp"
#include "confbvp/greens.hpp"
#include "confbvp/gridfn.hpp"
#include "confbvp/report.hpp"

#include <vector>

namespace confbvp {

struct VerifyOptions {
    double margin = 0.05;     // interior margin for residual stencils
    int residual_points = 7;  // interior mesh size for residual scans
    DiffOptions diff{};       // nested differencing configuration
    double onesided_step = 0.012;
    int onesided_points = 8;
    double ladder_hi = 0.45;  // geometric ladder for t -> 0 limits
    double ladder_lo = 0.05;
    int ladder_points = 14;
};

/// Coefficient polynomials p_j(t) with D^{a_m}..D^{a_1} x = sum p_j(t) x^(j);
/// index j runs from 0 (unused after the first level) to orders.size().
std::vector<FracPoly> conformable_to_classical(std::span<const double> orders);

/// Iterated conformable derivative at t = 1 via the classical expansion and
/// one-sided stencils reaching into the domain.
double iterated_diff_at_one(const ScalarFn& x, std::span<const double> orders,
                            const VerifyOptions& opts = {});

/// Limit of g(t) as t -> 0+ assuming g(t) = c0 + sum c_i t^(exponents[i]).
double limit_at_zero(const ScalarFn& g, std::vector<double> exponents,
                     const VerifyOptions& opts = {});

/// sup over the interior mesh of |D...x - sign*h| for the family's operator.
VerifyReport verify_residual(const GridFunction& x, const ScalarFn& h, const KernelSpec& spec,
                             std::vector<double> interior_mesh = {},
                             const VerifyOptions& opts = {});

/// Max absolute value over all boundary functionals of the family.
VerifyReport verify_bcs(const GridFunction& x, const KernelSpec& spec,
                        const VerifyOptions& opts = {});

/// Grid positivity scan. For RightFocal3 additionally checks G <= G(tau, s)
/// and for Cantilever4 G <= G(1, s).
VerifyReport check_positivity(const KernelSpec& spec, int n = 101, double tol = 1e-12,
                              const KernelFn& kernel = {});

VerifyReport check_symmetry_lidstone(Order alpha, Order beta, int n = 101, double tol = 1e-12,
                                     const KernelFn& kernel = {});

/// Requires all orders equal to 1; compares against the textbook kernels.
VerifyReport check_classical_reduction(const KernelSpec& spec, int n = 101, double tol = 1e-12);

enum class FaultInjection { None, SignFlip, PerturbSolution };

/// The full property suite for one family at the given forcing; one report
/// per property. `injection` deliberately corrupts the run to demonstrate
/// detection power.
std::vector<VerifyReport> run_family_suite(const KernelSpec& spec, double tol_solve = 1e-4,
                                           FaultInjection injection = FaultInjection::None,
                                           const ScalarFn& h = {},
                                           const VerifyOptions& opts = {});

} // namespace confbvp
