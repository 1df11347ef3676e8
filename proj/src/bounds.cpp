#include "confbvp/bounds.hpp"

#include "confbvp/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace confbvp {

double envelope_g2(double t, Order alpha, const BcCoeffs& bc) {
    if (t < 0.0 || t > 1.0) throw std::domain_error("envelope_g2: t outside [0,1]");
    const double a = alpha.value();
    bc.validate(a); // d > 0 rules out both ratios degenerating at once
    const double ta = std::pow(t, a);
    const double den1 = a * bc.delta_bc + bc.gamma_bc;
    const double den2 = a * bc.zeta_bc + bc.eta_bc;
    if (!(den1 > 0.0) || !(den2 > 0.0))
        throw std::invalid_argument("envelope_g2: degenerate boundary coefficients");
    const double r1 = (a * bc.delta_bc + bc.gamma_bc * ta) / den1;
    const double r2 = (a * bc.zeta_bc + bc.eta_bc * (1.0 - ta)) / den2;
    return std::min(r1, r2);
}

double envelope_g3(double t, Order alpha, Order beta, double tau) {
    if (t < 0.0 || t > 1.0) throw std::domain_error("envelope_g3: t outside [0,1]");
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("envelope_g3: tau outside (0,1)");
    const double a = alpha.value(), b = beta.value();
    const double r1 = std::pow(t, a) * ((a + b) * std::pow(tau, b) - a * std::pow(t, b)) /
                      (b * std::pow(tau, a + b));
    const double r2 = (1.0 - t) / (1.0 - tau);
    return std::min(r1, r2);
}

double g3_positivity_threshold(Order alpha, Order beta) {
    const double a = alpha.value(), b = beta.value();
    return std::pow(a / (a + b), 1.0 / b);
}

double k_lidstone(double s, Order alpha, Order beta) {
    if (s < 0.0 || s > 1.0) throw std::domain_error("k_lidstone: s outside [0,1]");
    const double a = alpha.value(), b = beta.value();
    return b * std::pow(s, a + b) - (a + b) * std::pow(s, b) + a;
}

namespace {

bool is_second_order(KernelFamily f) {
    return f == KernelFamily::Sl2 || f == KernelFamily::Conjugate2 ||
           f == KernelFamily::RightFocal2;
}

BcCoeffs effective_bc(const KernelSpec& spec) {
    switch (spec.family) {
        case KernelFamily::Conjugate2: return BcCoeffs::conjugate();
        case KernelFamily::RightFocal2: return BcCoeffs::right_focal();
        default: return spec.bc;
    }
}

} // namespace

VerifyReport check_two_sided_bound(const KernelSpec& spec, int n, double tol,
                                   const KernelFn& kernel) {
    if (!is_second_order(spec.family) && spec.family != KernelFamily::RightFocal3)
        throw std::invalid_argument("check_two_sided_bound: family has no two-sided bound");
    spec.validate();
    auto G = kernel ? kernel
                    : KernelFn([&spec](double t, double s) { return kernel_value(spec, t, s); });

    const bool second = is_second_order(spec.family);
    const BcCoeffs bc = effective_bc(spec);
    auto envelope = [&](double t) {
        return second ? envelope_g2(t, spec.orders.alpha, bc)
                      : envelope_g3(t, spec.orders.alpha, spec.orders.beta, spec.tau);
    };
    auto peak = [&](double s) { return second ? G(s, s) : G(spec.tau, s); };

    VerifyReport rep;
    rep.property = second ? "two_sided_bound_g2" : "two_sided_bound_g3";
    rep.tolerance = tol;
    rep.magnitude = -1.0;
    const auto mesh = num::linspace(0.0, 1.0, n);
    for (double s : mesh) {
        const double ps = peak(s);
        for (double t : mesh) {
            const double g = G(t, s);
            double violation = std::max(g - ps, envelope(t) * ps - g);
            // The third-order bound presumes a positive kernel on (0,1]^2;
            // below the tau threshold the kernel itself goes negative there.
            if (!second && t > 0.0 && s > 0.0) violation = std::max(violation, -g);
            if (violation > rep.magnitude) {
                rep.magnitude = violation;
                rep.worst_t = t;
                rep.worst_s = s;
            }
        }
    }
    rep.pass = rep.magnitude <= tol;
    return rep;
}

VerifyReport check_monotonic_profile(const KernelSpec& spec, int n, double tol,
                                     const KernelFn& kernel) {
    if (spec.family != KernelFamily::RightFocal3)
        throw std::invalid_argument("check_monotonic_profile: third-order family only");
    spec.validate();
    auto G = kernel ? kernel
                    : KernelFn([&spec](double t, double s) { return kernel_value(spec, t, s); });

    VerifyReport rep;
    rep.property = "monotone_profile_g3";
    rep.tolerance = tol;
    rep.magnitude = -1.0;
    const auto mesh = num::linspace(0.0, 1.0, n);
    for (double s : mesh) {
        double prev = G(mesh[0], s);
        for (int i = 1; i < n; ++i) {
            const double cur = G(mesh[i], s);
            if (mesh[i - 1] < spec.tau && mesh[i] > spec.tau) {
                prev = cur; // segment straddles the peak; neither side applies
                continue;
            }
            // rising side before tau, falling side after
            const double drop = (mesh[i] <= spec.tau) ? prev - cur : cur - prev;
            if (drop > rep.magnitude) {
                rep.magnitude = drop;
                rep.worst_t = mesh[i];
                rep.worst_s = s;
            }
            prev = cur;
        }
    }
    rep.pass = rep.magnitude <= tol;
    return rep;
}

} // namespace confbvp
