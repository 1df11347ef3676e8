#pragma once

// Conformable fractional derivative and integral primitives on [0, 1].
//
// The conformable derivative of order a in (0, 1] is D^a f(t) = t^(1-a) f'(t)
// for differentiable f, with D^a f(0) defined as the limit t -> 0+. The
// matching integral operation integrates against the weight s^(a-1).

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace confbvp {

using ScalarFn = std::function<double(double)>;

/// Fractional order in (0, 1].
class Order {
public:
    explicit Order(double v) : v_(v) {
        if (!(v > 0.0) || v > 1.0) throw std::domain_error("Order: value must lie in (0,1]");
    }
    double value() const { return v_; }

private:
    double v_;
};

/// Composite Gauss-Legendre quadrature configuration. Integration happens in
/// the substituted variable u = s^w; `grading` packs panels toward a lower
/// endpoint at zero so fractional powers of u stay resolved.
struct QuadratureRule {
    int panels = 64;
    int nodes = 8;
    double grading = 4.0;
};

class StencilError : public std::runtime_error {
public:
    StencilError(double t, double margin)
        : std::runtime_error("stencil does not fit inside (0,1) at t=" + std::to_string(t) +
                             "; required margin " + std::to_string(margin)),
          t(t), required_margin(margin) {}
    double t;
    double required_margin;
};

/// D^a f(t) = t^(1-a) f'(t) with f' supplied in closed form.
double conf_diff_closed(const ScalarFn& f, const ScalarFn& fprime, Order alpha, double t);

/// Same, with f' from a 4th-order central finite difference
/// (step 1e-5 * max(1,|t|), shrunk near the ends of [0,1]).
double conf_diff_closed(const ScalarFn& f, Order alpha, double t);

/// Symmetric difference quotient of the limit definition,
/// [f(t e^{eps t^-a}) - f(t e^{-eps t^-a})] / (2 eps). Cross-check only.
double conf_diff_limit(const ScalarFn& f, Order alpha, double t, double eps);

/// Integral of h(s) s^(a-1) over [a0, b0] after the substitution u = s^a.
double conf_integral(const ScalarFn& h, Order alpha, double a0, double b0,
                     const QuadratureRule& rule = {});

/// Integral of f(s) s^(w-1) over [a, b] for any weight exponent w in (0, 1];
/// the engine behind conf_integral and the kernel integral operators.
double weighted_integral(const ScalarFn& f, double w, double a, double b,
                         const QuadratureRule& rule = {});

/// Nested finite differencing of iterated conformable derivatives.
struct DiffOptions {
    int halfwidth = 4;      // central stencil uses +-1..halfwidth steps
    double rel_step = 0.03; // innermost step as a fraction of min(t, 1-t)
    double growth = 1.5;    // step ratio between nesting levels
    double min_margin = 1e-3;
};

/// Applies D^{orders[k]} innermost-first (orders[0] acts directly on x) at an
/// interior point t. Steps scale with the distance to the ends of [0,1] and
/// grow per level so roundoff does not compound through the nesting.
double iterated_conf_diff(const ScalarFn& x, std::span<const double> orders, double t,
                          const DiffOptions& opts = {});

} // namespace confbvp
