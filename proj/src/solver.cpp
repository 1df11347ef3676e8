#include "confbvp/solver.hpp"

#include "confbvp/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace confbvp {

std::vector<double> default_mesh(int n) { return num::linspace(0.0, 1.0, n); }

double solve_point(const KernelSpec& spec, const ScalarFn& h, double t,
                   const SolveOptions& opts) {
    spec.validate();
    const double w = spec.weight_order();

    std::vector<double> cuts{0.0, t, 1.0};
    if (spec.family == KernelFamily::RightFocal3) cuts.push_back(spec.tau);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double x = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        x += weighted_integral(
            [&](double s) { return kernel_value(spec, t, s) * h(s); }, w, cuts[i], cuts[i + 1],
            opts.rule);
    }
    return x;
}

GridFunction solve_linear(const KernelSpec& spec, const ScalarFn& h,
                          const std::vector<double>& mesh, const SolveOptions& opts) {
    spec.validate();
    GridFunction g;
    g.mesh = mesh;
    g.values.reserve(mesh.size());
    for (double t : mesh) g.values.push_back(solve_point(spec, h, t, opts));
    g.dense = [spec, h, opts](double t) { return solve_point(spec, h, t, opts); };
    return g;
}

GridFunction solve_threepoint(const ScalarFn& h, Order alpha, Order beta,
                              const ThreePointParams& p, const std::vector<double>& mesh,
                              const SolveOptions& opts) {
    p.validate(alpha);
    const double a = alpha.value();
    const double scale = 1.0 / (a * (1.0 - p.delta_3p * std::pow(p.eta_3p, a)));

    auto point = [h, a, beta, p, scale, opts](double t) {
        const double ta = std::pow(t, a);
        const double i1 = weighted_integral(
            [&](double s) { return (ta - std::pow(s, a)) * h(s); }, beta.value(), 0.0, t,
            opts.rule);
        const double i2 = weighted_integral(
            [&](double s) { return (std::pow(p.eta_3p, a) - std::pow(s, a)) * h(s); },
            beta.value(), 0.0, p.eta_3p, opts.rule);
        const double i3 = weighted_integral(
            [&](double s) { return (1.0 - std::pow(s, a)) * h(s); }, beta.value(), 0.0, 1.0,
            opts.rule);
        return -i1 / a - p.delta_3p * ta * scale * i2 + ta * scale * i3;
    };

    GridFunction g;
    g.mesh = mesh;
    g.values.reserve(mesh.size());
    for (double t : mesh) g.values.push_back(point(t));
    g.dense = point;
    return g;
}

SolveReport solve_nonlinear_picard(const KernelSpec& spec, const RhsFn& rhs, double tol,
                                   int max_iter, const std::vector<double>& mesh,
                                   const SolveOptions& opts) {
    spec.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("solve_nonlinear_picard: tol must be positive");
    if (!rhs.f) throw std::invalid_argument("solve_nonlinear_picard: missing rhs");

    GridFunction x;
    x.mesh = mesh;
    x.values.assign(mesh.size(), 0.0);

    SolveReport report;
    for (int k = 1; k <= max_iter; ++k) {
        ScalarFn forcing = [&rhs, &x](double s) { return rhs.eval(s, x.eval_linear(s)); };
        GridFunction next = solve_linear(spec, forcing, mesh, opts);
        double change = 0.0;
        for (size_t i = 0; i < mesh.size(); ++i)
            change = std::max(change, std::abs(next.values[i] - x.values[i]));
        x.values = next.values;
        report.iterations = k;
        report.residual_sup = change;
        if (x.sup_norm() > 1e6) throw DivergenceError(k);
        if (change <= tol) {
            report.converged = true;
            break;
        }
    }
    // Freeze the final iterate into a dense evaluator of the integral operator.
    GridFunction frozen = x;
    ScalarFn forcing = [rhs, frozen](double s) { return rhs.eval(s, frozen.eval_linear(s)); };
    x.dense = [spec, forcing, opts](double t) { return solve_point(spec, forcing, t, opts); };
    report.solution = std::move(x);
    return report;
}

// ---- exact oracle -----------------------------------------------------------

namespace {

// Second-order cascade: y = D^a x satisfies D^b y = -h, so
//   y(t) = Y0 - H(t),  x(t) = X0 + Y0 t^a / a - P(t),
// with H, P iterated weighted integrals of h and the constants solved from
// the boundary conditions; their 2x2 determinant is the constant d.
FracPoly oracle_sl2(Order alpha, Order beta, const BcCoeffs& bc, const FracPoly& h) {
    const double a = alpha.value();
    const double d = bc.d(a);
    if (!(d > 0.0)) throw std::invalid_argument("oracle_solution: boundary system singular (d <= 0)");
    const FracPoly H = h.integrate0_weighted(beta.value());
    const FracPoly P = H.integrate0_weighted(a);
    const double rhs = bc.eta_bc * P.eval1() + bc.zeta_bc * H.eval1();
    const double x0 = bc.delta_bc * rhs / d;
    const double y0 = bc.gamma_bc * rhs / d;
    FracPoly x = FracPoly::constant(x0);
    x += FracPoly::monomial(y0 / a, a);
    x += P.scaled(-1.0);
    return x;
}

// Third-order right-focal cascade with conditions at 0, tau, and 1.
FracPoly oracle_rf3(Order alpha, Order beta, Order gamma, double tau, const FracPoly& h) {
    const FracPoly H = h.integrate0_weighted(gamma.value());
    FracPoly z = H + FracPoly::constant(-H.eval1()); // D^b D^a x, zero at 1
    const FracPoly Z = z.integrate0_weighted(beta.value());
    FracPoly y = Z + FracPoly::constant(-Z.eval(tau)); // D^a x, zero at tau
    return y.integrate0_weighted(alpha.value());       // x, zero at 0
}

FracPoly oracle_cantilever(const OrderSet& o, const FracPoly& h) {
    const FracPoly Hd = h.integrate0_weighted(o.delta.value());
    FracPoly w = Hd + FracPoly::constant(-Hd.eval1()); // D^c D^b D^a x, zero at 1
    const FracPoly W = w.integrate0_weighted(o.gamma.value());
    FracPoly z = W + FracPoly::constant(-W.eval1()); // D^b D^a x, zero at 1
    FracPoly y = z.integrate0_weighted(o.beta.value()); // D^a x, zero at 0
    return y.integrate0_weighted(o.alpha.value());      // x, zero at 0
}

// Conjugate-type sub-solve: D^b D^a u = f with u(0) = u(1) = 0.
FracPoly conjugate_cascade(Order alpha, Order beta, const FracPoly& f) {
    const double a = alpha.value();
    const FracPoly inner = f.integrate0_weighted(beta.value()).integrate0_weighted(a);
    const double v0 = -a * inner.eval1();
    FracPoly u = FracPoly::monomial(v0 / a, a);
    u += inner;
    return u;
}

FracPoly oracle_lidstone(Order alpha, Order beta, const FracPoly& h) {
    // Split into two second-order problems: z = D^b D^a x with z(0)=z(1)=0.
    const FracPoly z = conjugate_cascade(alpha, beta, h);
    return conjugate_cascade(alpha, beta, z);
}

} // namespace

FracPoly oracle_solution(const KernelSpec& spec, const FracPoly& h) {
    spec.validate();
    switch (spec.family) {
        case KernelFamily::Sl2: return oracle_sl2(spec.orders.alpha, spec.orders.beta, spec.bc, h);
        case KernelFamily::Conjugate2:
            return oracle_sl2(spec.orders.alpha, spec.orders.beta, BcCoeffs::conjugate(), h);
        case KernelFamily::RightFocal2:
            return oracle_sl2(spec.orders.alpha, spec.orders.beta, BcCoeffs::right_focal(), h);
        case KernelFamily::RightFocal3:
            return oracle_rf3(spec.orders.alpha, spec.orders.beta, spec.orders.gamma, spec.tau, h);
        case KernelFamily::Cantilever4: return oracle_cantilever(spec.orders, h);
        case KernelFamily::Lidstone4: return oracle_lidstone(spec.orders.alpha, spec.orders.beta, h);
    }
    throw std::logic_error("oracle_solution: unknown family");
}

double oracle_direct(const KernelSpec& spec, const std::vector<double>& h_coeffs, double t) {
    return oracle_solution(spec, FracPoly::from_coeffs(h_coeffs)).eval(t);
}

FracPoly oracle_threepoint(Order alpha, Order beta, const ThreePointParams& p,
                           const FracPoly& h) {
    p.validate(alpha);
    const double a = alpha.value();
    const FracPoly P = h.integrate0_weighted(beta.value()).integrate0_weighted(a);
    const double de = p.delta_3p * std::pow(p.eta_3p, a);
    const double y0 = a * (P.eval1() - p.delta_3p * P.eval(p.eta_3p)) / (1.0 - de);
    FracPoly x = FracPoly::monomial(y0 / a, a);
    x += P.scaled(-1.0);
    return x;
}

} // namespace confbvp
