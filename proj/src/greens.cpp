#include "confbvp/greens.hpp"

#include "confbvp/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace confbvp {

namespace {

void check_unit_square(double t, double s) {
    if (t < 0.0 || t > 1.0 || s < 0.0 || s > 1.0)
        throw std::domain_error("kernel arguments must lie in [0,1]");
}

} // namespace

void BcCoeffs::validate(double alpha) const {
    if (gamma_bc < 0.0 || delta_bc < 0.0 || eta_bc < 0.0 || zeta_bc < 0.0)
        throw std::invalid_argument("BcCoeffs: coefficients must be nonnegative");
    if (!(d(alpha) > 0.0))
        throw std::invalid_argument("BcCoeffs: derived constant d must be positive");
}

const char* family_name(KernelFamily f) {
    switch (f) {
        case KernelFamily::Sl2: return "sl2";
        case KernelFamily::Conjugate2: return "conjugate2";
        case KernelFamily::RightFocal2: return "rightfocal2";
        case KernelFamily::RightFocal3: return "rightfocal3";
        case KernelFamily::Cantilever4: return "cantilever4";
        case KernelFamily::Lidstone4: return "lidstone4";
    }
    return "?";
}

KernelSpec KernelSpec::sl2(Order a, Order b, BcCoeffs bc) {
    KernelSpec s{KernelFamily::Sl2, OrderSet{a, b, Order{1.0}, Order{1.0}}, 0.0, bc};
    s.validate();
    return s;
}
KernelSpec KernelSpec::conjugate2(Order a, Order b) {
    return {KernelFamily::Conjugate2, OrderSet{a, b, Order{1.0}, Order{1.0}}, 0.0, BcCoeffs::conjugate()};
}
KernelSpec KernelSpec::right_focal2(Order a, Order b) {
    return {KernelFamily::RightFocal2, OrderSet{a, b, Order{1.0}, Order{1.0}}, 0.0, BcCoeffs::right_focal()};
}
KernelSpec KernelSpec::right_focal3(Order a, Order b, Order c, double tau) {
    KernelSpec s{KernelFamily::RightFocal3, OrderSet{a, b, c, Order{1.0}}, tau, {}};
    s.validate();
    return s;
}
KernelSpec KernelSpec::cantilever4(Order a, Order b, Order c, Order d) {
    return {KernelFamily::Cantilever4, OrderSet{a, b, c, d}, 0.0, {}};
}
KernelSpec KernelSpec::lidstone4(Order a, Order b) {
    // The fourth-order symmetric problem repeats the pair (a, b).
    return {KernelFamily::Lidstone4, OrderSet{a, b, a, b}, 0.0, {}};
}

void KernelSpec::validate() const {
    if (family == KernelFamily::RightFocal3 && !(tau > 0.0 && tau < 1.0))
        throw std::invalid_argument("KernelSpec: tau must lie in (0,1)");
    if (family == KernelFamily::Sl2) bc.validate(orders.alpha.value());
}

double KernelSpec::weight_order() const {
    switch (family) {
        case KernelFamily::Sl2:
        case KernelFamily::Conjugate2:
        case KernelFamily::RightFocal2: return orders.beta.value();
        case KernelFamily::RightFocal3: return orders.gamma.value();
        case KernelFamily::Cantilever4: return orders.delta.value();
        case KernelFamily::Lidstone4: return orders.beta.value();
    }
    return 1.0;
}

std::vector<double> KernelSpec::op_orders() const {
    const double a = orders.alpha.value(), b = orders.beta.value();
    switch (family) {
        case KernelFamily::Sl2:
        case KernelFamily::Conjugate2:
        case KernelFamily::RightFocal2: return {a, b};
        case KernelFamily::RightFocal3: return {a, b, orders.gamma.value()};
        case KernelFamily::Cantilever4: return {a, b, orders.gamma.value(), orders.delta.value()};
        case KernelFamily::Lidstone4: return {a, b, a, b};
    }
    return {};
}

double KernelSpec::op_sign() const {
    switch (family) {
        case KernelFamily::Sl2:
        case KernelFamily::Conjugate2:
        case KernelFamily::RightFocal2: return -1.0; // kernel solves -D^b D^a x = h
        default: return 1.0;
    }
}

// ---- second order ----------------------------------------------------------

std::pair<double, double> g2_sl_branches(double t, double s, Order alpha, const BcCoeffs& bc) {
    check_unit_square(t, s);
    const double a = alpha.value();
    const double d = bc.d(a);
    if (!(d > 0.0)) throw std::invalid_argument("g2_sl: derived constant d must be positive");
    auto left = [&](double v) { return bc.delta_bc + bc.gamma_bc / a * std::pow(v, a); };
    auto right = [&](double v) { return bc.zeta_bc + bc.eta_bc / a * (1.0 - std::pow(v, a)); };
    return {left(t) * right(s) / d, left(s) * right(t) / d};
}

double g2_sl(double t, double s, Order alpha, const BcCoeffs& bc) {
    auto [lower, upper] = g2_sl_branches(t, s, alpha, bc);
    return t <= s ? lower : upper;
}

double g2_conjugate(double t, double s, Order alpha) {
    check_unit_square(t, s);
    const double a = alpha.value();
    if (t <= s) return std::pow(t, a) * (1.0 - std::pow(s, a)) / a;
    return std::pow(s, a) * (1.0 - std::pow(t, a)) / a;
}

double g2_rightfocal(double t, double s, Order alpha) {
    check_unit_square(t, s);
    const double a = alpha.value();
    return std::pow(std::min(t, s), a) / a;
}

// ---- third order ------------------------------------------------------------

double u3(double t, double s, Order alpha, Order beta) {
    const double a = alpha.value(), b = beta.value();
    return ((a + b) * std::pow(t, a) * std::pow(s, b) - a * std::pow(t, a + b)) /
           (a * b * (a + b));
}

double cauchy3(double t, double s, Order alpha, Order beta) {
    const double a = alpha.value(), b = beta.value();
    const double ta = std::pow(t, a), tb = std::pow(t, b);
    const double sa = std::pow(s, a), sb = std::pow(s, b);
    return (a * ta * (tb - sb) + b * sb * (sa - ta)) / (a * b * (a + b));
}

double g3_rightfocal(double t, double s, Order alpha, Order beta, double tau) {
    check_unit_square(t, s);
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("g3_rightfocal: tau outside (0,1)");
    if (s <= tau) {
        if (t <= s) return u3(t, s, alpha, beta);
        return cauchy3(0.0, s, alpha, beta);
    }
    if (t <= s) return u3(t, tau, alpha, beta);
    return u3(t, tau, alpha, beta) + cauchy3(t, s, alpha, beta);
}

// ---- fourth order -----------------------------------------------------------

std::pair<double, double> g4_cantilever_branches(double t, double s, Order alpha, Order beta,
                                                 Order gamma) {
    check_unit_square(t, s);
    const double a = alpha.value(), b = beta.value(), c = gamma.value();
    const double lower = std::pow(t, a + b) / c *
                         (std::pow(s, c) / (b * (a + b)) -
                          std::pow(t, c) / ((b + c) * (a + b + c)));
    const double upper = std::pow(s, b + c) / a *
                         (std::pow(t, a) / (b * (b + c)) -
                          std::pow(s, a) / ((a + b) * (a + b + c)));
    return {lower, upper};
}

double g4_cantilever(double t, double s, Order alpha, Order beta, Order gamma) {
    auto [lower, upper] = g4_cantilever_branches(t, s, alpha, beta, gamma);
    return t <= s ? lower : upper;
}

double g4_cantilever_dt(double t, double s, Order alpha, Order beta, Order gamma) {
    check_unit_square(t, s);
    const double a = alpha.value(), b = beta.value(), c = gamma.value();
    if (t == 0.0 && a < 1.0)
        throw std::domain_error("g4_cantilever_dt: t^(a-1) is singular at t = 0 for a < 1");
    if (t <= s) {
        const double sc = std::pow(s, c), tc = std::pow(t, c);
        return std::pow(t, a + b - 1.0) * (c * sc + b * (sc - tc)) / (b * c * (b + c));
    }
    return std::pow(s, b + c) * std::pow(t, a - 1.0) / (b * (b + c));
}

double cauchy4(double t, double s, Order alpha, Order beta, Order gamma) {
    const double a = alpha.value(), b = beta.value(), c = gamma.value();
    const double abc = a + b + c, ab = a + b;
    const double term1 = (std::pow(t, abc) - std::pow(s, abc)) / ((b + c) * abc);
    const double term2 = std::pow(s, c) * (std::pow(t, ab) - std::pow(s, ab)) / (b * ab);
    const double term3 = c * std::pow(s, b + c) * (std::pow(t, a) - std::pow(s, a)) / (a * b * (b + c));
    return (term1 - term2 + term3) / c;
}

double cauchy4_quadrature(double t, double s, Order alpha, Order beta, Order gamma,
                          int panels, int nodes) {
    const double a = alpha.value(), b = beta.value(), c = gamma.value();
    const auto& gauss = num::gauss_legendre(nodes);
    // Plain composite rule on the possibly reversed interval; the integrand is
    // smooth away from 0 and both variables stay in [min(s,t), max(s,t)].
    auto integrate = [&](double lo, double hi, const ScalarFn& f) {
        double total = 0.0;
        for (int j = 0; j < panels; ++j) {
            const double x0 = lo + (hi - lo) * j / panels;
            const double x1 = lo + (hi - lo) * (j + 1) / panels;
            const double mid = 0.5 * (x0 + x1), half = 0.5 * (x1 - x0);
            double acc = 0.0;
            for (int k = 0; k < nodes; ++k) acc += gauss.weights[k] * f(mid + half * gauss.nodes[k]);
            total += acc * half;
        }
        return total;
    };
    auto inner = [&](double tau_var) {
        return integrate(s, tau_var, [&](double xi) {
            return (std::pow(xi, c) - std::pow(s, c)) * std::pow(xi, b - 1.0);
        });
    };
    return integrate(s, t, [&](double tau_var) {
        return inner(tau_var) * std::pow(tau_var, a - 1.0);
    }) / c;
}

std::pair<double, double> lidstone_coeffs(double s, Order alpha, Order beta, Order gamma) {
    const double a = alpha.value(), b = beta.value(), c = gamma.value();
    const double abc = a + b + c;
    const double dcoef = (std::pow(s, c) - 1.0) / (c * (b + c) * abc);
    const double bcoef = std::pow(s, abc) / (a * (a + b) * abc) -
                         std::pow(s, b + c) / (a * b * (b + c)) +
                         std::pow(s, c) / c * (1.0 / (b * (a + b)) - 1.0 / ((b + c) * abc));
    return {bcoef, dcoef};
}

std::pair<double, double> g4_lidstone_branches(double t, double s, Order alpha, Order beta) {
    check_unit_square(t, s);
    const double a = alpha.value(), b = beta.value();
    auto u = [&](double x, double y) {
        return std::pow(x, a) / (a * b * (a + b) * (2 * a + b)) *
               (2 * a * std::pow(y, a) * (1.0 - std::pow(y, b)) -
                b * (1.0 - std::pow(y, a)) * (std::pow(x, a + b) + std::pow(y, a + b)));
    };
    return {u(t, s), u(s, t)};
}

double g4_lidstone(double t, double s, Order alpha, Order beta) {
    auto [lower, upper] = g4_lidstone_branches(t, s, alpha, beta);
    return t <= s ? lower : upper;
}

// ---- dispatch ---------------------------------------------------------------

double kernel_value(const KernelSpec& spec, double t, double s) {
    switch (spec.family) {
        case KernelFamily::Sl2: return g2_sl(t, s, spec.orders.alpha, spec.bc);
        case KernelFamily::Conjugate2: return g2_conjugate(t, s, spec.orders.alpha);
        case KernelFamily::RightFocal2: return g2_rightfocal(t, s, spec.orders.alpha);
        case KernelFamily::RightFocal3:
            return g3_rightfocal(t, s, spec.orders.alpha, spec.orders.beta, spec.tau);
        case KernelFamily::Cantilever4:
            return g4_cantilever(t, s, spec.orders.alpha, spec.orders.beta, spec.orders.gamma);
        case KernelFamily::Lidstone4:
            return g4_lidstone(t, s, spec.orders.alpha, spec.orders.beta);
    }
    throw std::logic_error("kernel_value: unknown family");
}

double classical_kernel(KernelFamily family, double t, double s, double) {
    check_unit_square(t, s);
    switch (family) {
        case KernelFamily::Conjugate2: return t <= s ? t * (1.0 - s) : s * (1.0 - t);
        case KernelFamily::RightFocal2: return std::min(t, s);
        case KernelFamily::Cantilever4:
            return t <= s ? t * t * s / 2.0 - t * t * t / 6.0 : s * s * t / 2.0 - s * s * s / 6.0;
        case KernelFamily::Lidstone4: {
            auto u = [](double x, double y) { return x * (1.0 - y) * (2 * y - y * y - x * x) / 6.0; };
            return t <= s ? u(t, s) : u(s, t);
        }
        default:
            throw std::invalid_argument("classical_kernel: no textbook form for this family");
    }
}

} // namespace confbvp
