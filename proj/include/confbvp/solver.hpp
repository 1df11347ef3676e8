#pragma once

// Solution representations for the kernel families:
//   * solve_linear       x(t) = integral of G(t,s) h(s) s^(w-1) ds
//   * solve_threepoint   explicit three-term formula for x(0)=0, d x(eta)=x(1)
//   * solve_nonlinear_picard  successive substitution on the integral operator
//   * oracle_*           independent reference path: the first-order cascade
//                        integrated exactly on fractional polynomials, never
//                        touching the Green's kernels
//
// The quadrature route and the oracle route are kept deliberately disjoint so
// each can certify the other.

#include "confbvp/fracpoly.hpp"
#include "confbvp/greens.hpp"
#include "confbvp/gridfn.hpp"

#include <stdexcept>
#include <vector>

namespace confbvp {

/// Right-hand side lambda * a(t) * f(t, x(t)) of the nonlinear problems.
struct RhsFn {
    std::function<double(double, double)> f; // (t, x) -> value
    double lambda_scale = 1.0;
    ScalarFn weight_fn; // optional a(t) >= 0; empty means 1

    double eval(double t, double x) const {
        return lambda_scale * (weight_fn ? weight_fn(t) : 1.0) * f(t, x);
    }
};

/// Parameters of the three-point conditions x(0) = 0, delta x(eta) = x(1).
struct ThreePointParams {
    double delta_3p = 0.0;
    double eta_3p = 0.5;

    void validate(Order alpha) const {
        if (!(eta_3p > 0.0 && eta_3p < 1.0))
            throw std::invalid_argument("ThreePointParams: eta must lie in (0,1)");
        const double de = delta_3p * std::pow(eta_3p, alpha.value());
        // delta = 0 degenerates gracefully to a two-point problem and is allowed.
        if (delta_3p < 0.0 || de >= 1.0)
            throw std::invalid_argument("ThreePointParams: need 0 <= delta eta^alpha < 1");
    }
};

struct SolveReport {
    GridFunction solution;
    int iterations = 0;
    double residual_sup = 0.0; // sup-norm change of the last iteration
    bool converged = false;
};

class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(int history)
        : std::runtime_error("picard iteration diverged after " + std::to_string(history) +
                             " iterates"),
          history_length(history) {}
    int history_length;
};

struct SolveOptions {
    QuadratureRule rule{64, 8, 4.0};
};

/// Fast preset for verification sweeps where 1e-6-level quadrature suffices.
inline SolveOptions coarse_solve_options() { return SolveOptions{QuadratureRule{10, 8, 4.0}}; }

/// One point of the kernel-integral representation; splits the s-range at the
/// kernel seam s = t (and at tau for the third-order family).
double solve_point(const KernelSpec& spec, const ScalarFn& h, double t,
                   const SolveOptions& opts = {});

/// Kernel-integral solve sampled on a mesh; the returned GridFunction carries
/// a dense evaluator of the same representation.
GridFunction solve_linear(const KernelSpec& spec, const ScalarFn& h,
                          const std::vector<double>& mesh, const SolveOptions& opts = {});

GridFunction solve_threepoint(const ScalarFn& h, Order alpha, Order beta,
                              const ThreePointParams& p, const std::vector<double>& mesh,
                              const SolveOptions& opts = {});

/// Picard iteration x_{k+1}(t) = integral of G(t,s) rhs(s, x_k(s)) s^(w-1) ds
/// from x_0 = 0, with x_k read through linear interpolation on the mesh.
/// Throws DivergenceError when an iterate exceeds 1e6 in sup norm.
SolveReport solve_nonlinear_picard(const KernelSpec& spec, const RhsFn& rhs, double tol,
                                   int max_iter, const std::vector<double>& mesh,
                                   const SolveOptions& opts = {});

/// Exact solution of the family's boundary value problem for fractional-
/// polynomial forcing, by nested first-order integrations with the boundary
/// constants solved directly. Throws when the boundary system is singular.
FracPoly oracle_solution(const KernelSpec& spec, const FracPoly& h);

/// Convenience: h given as ordinary polynomial coefficients, evaluated at t.
double oracle_direct(const KernelSpec& spec, const std::vector<double>& h_coeffs, double t);

FracPoly oracle_threepoint(Order alpha, Order beta, const ThreePointParams& p,
                           const FracPoly& h);

/// Uniform mesh over [0,1] with the solver's default density.
std::vector<double> default_mesh(int n = 257);

} // namespace confbvp
