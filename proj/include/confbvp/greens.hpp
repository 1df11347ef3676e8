#pragma once

// Closed-form Green's functions on [0,1]^2 for boundary value problems built
// from iterated conformable fractional derivatives:
//
//   second order   -D^b D^a x = h       Sturm-Liouville coefficients, or the
//                                       conjugate / right-focal special cases
//   third order     D^c D^b D^a x = h   right-focal with interior point tau
//   fourth order    D^d D^c D^b D^a x = h   cantilever conditions
//                   D^b D^a D^b D^a x = h   Lidstone conditions (symmetric)
//
// Every kernel has two (or four) algebraic branches meeting continuously at
// t = s; evaluators pick the t <= s branch at the seam.

#include "confbvp/fraccalc.hpp"

#include <utility>
#include <vector>

namespace confbvp {

/// Boundary coefficients of the second-order problem,
/// gamma x(0) - delta D^a x(0) = 0 = eta x(1) + zeta D^a x(1).
/// The _bc suffix keeps them apart from the derivative orders gamma/delta.
struct BcCoeffs {
    double gamma_bc = 1.0;
    double delta_bc = 0.0;
    double eta_bc = 1.0;
    double zeta_bc = 0.0;

    /// Derived constant eta*delta + gamma*zeta + gamma*eta/alpha; must be > 0.
    double d(double alpha) const {
        return eta_bc * delta_bc + gamma_bc * zeta_bc + gamma_bc * eta_bc / alpha;
    }
    void validate(double alpha) const;

    static BcCoeffs conjugate() { return {1.0, 0.0, 1.0, 0.0}; }
    static BcCoeffs right_focal() { return {1.0, 0.0, 0.0, 1.0}; }
};

enum class KernelFamily { Sl2, Conjugate2, RightFocal2, RightFocal3, Cantilever4, Lidstone4 };

const char* family_name(KernelFamily f);

struct OrderSet {
    Order alpha{1.0};
    Order beta{1.0};
    Order gamma{1.0};
    Order delta{1.0};
};

/// Tagged selection of one kernel family plus its parameters.
struct KernelSpec {
    KernelFamily family = KernelFamily::Conjugate2;
    OrderSet orders;
    double tau = 0.0; // RightFocal3 only, in (0,1)
    BcCoeffs bc;      // Sl2 only

    static KernelSpec sl2(Order a, Order b, BcCoeffs bc);
    static KernelSpec conjugate2(Order a, Order b);
    static KernelSpec right_focal2(Order a, Order b);
    static KernelSpec right_focal3(Order a, Order b, Order c, double tau);
    static KernelSpec cantilever4(Order a, Order b, Order c, Order d);
    static KernelSpec lidstone4(Order a, Order b);

    void validate() const;

    /// Weight exponent w of the solution representation
    /// x(t) = integral of G(t,s) h(s) s^(w-1) ds.
    double weight_order() const;
    /// Derivative orders, innermost first, as applied to a solution.
    std::vector<double> op_orders() const;
    /// +1 when the representation solves D...x = h, -1 for -D...x = h.
    double op_sign() const;
    int levels() const { return static_cast<int>(op_orders().size()); }
};

// ---- second order ----------------------------------------------------------

double g2_sl(double t, double s, Order alpha, const BcCoeffs& bc);
/// Both branch formulas of g2_sl evaluated at (t,s): {t<=s branch, s<=t branch}.
std::pair<double, double> g2_sl_branches(double t, double s, Order alpha, const BcCoeffs& bc);

double g2_conjugate(double t, double s, Order alpha);
double g2_rightfocal(double t, double s, Order alpha);

// ---- third order (right-focal, interior point tau) -------------------------

/// u(t,s) = [(a+b) t^a s^b - a t^(a+b)] / (a b (a+b)).
double u3(double t, double s, Order alpha, Order beta);
/// Cauchy function x(t,s) = [a t^a (t^b - s^b) + b s^b (s^a - t^a)] / (a b (a+b)).
double cauchy3(double t, double s, Order alpha, Order beta);
double g3_rightfocal(double t, double s, Order alpha, Order beta, double tau);

// ---- fourth order -----------------------------------------------------------

double g4_cantilever(double t, double s, Order alpha, Order beta, Order gamma);
std::pair<double, double> g4_cantilever_branches(double t, double s, Order alpha, Order beta,
                                                 Order gamma);
/// Branch-wise d/dt of the cantilever kernel; nonnegative on (0,1] x [0,1].
double g4_cantilever_dt(double t, double s, Order alpha, Order beta, Order gamma);

/// Cauchy function of the fourth-order cascade in closed form (two elementary
/// integrations of (xi^c - s^c) xi^(b-1) tau^(a-1) over s<=xi<=tau<=t).
double cauchy4(double t, double s, Order alpha, Order beta, Order gamma);
/// Same value by nested quadrature; used to gate the closed form.
double cauchy4_quadrature(double t, double s, Order alpha, Order beta, Order gamma,
                          int panels = 48, int nodes = 8);

/// Coefficients (b(s), d(s)) of the homogeneous part u(t,s) = b(s) t^a +
/// d(s) t^(a+b+c) of the general-gamma Lidstone construction; a(s)=c(s)=0.
std::pair<double, double> lidstone_coeffs(double s, Order alpha, Order beta, Order gamma);

double g4_lidstone(double t, double s, Order alpha, Order beta);
std::pair<double, double> g4_lidstone_branches(double t, double s, Order alpha, Order beta);

// ---- dispatch ---------------------------------------------------------------

double kernel_value(const KernelSpec& spec, double t, double s);

/// Integer-order (all orders = 1) textbook kernel for the four named families;
/// throws for Sl2 with general coefficients and for RightFocal3.
double classical_kernel(KernelFamily family, double t, double s, double tau = 0.0);

} // namespace confbvp
