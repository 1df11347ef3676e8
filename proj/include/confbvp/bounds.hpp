#pragma once

// Lower envelopes and positivity thresholds attached to the kernels:
// g(t) with g(t) * G(peak, s) <= G(t, s) <= G(peak, s), the tau threshold that
// keeps the third-order kernel positive up to t = 1, and the decreasing
// k-function behind the Lidstone positivity argument.

#include "confbvp/greens.hpp"
#include "confbvp/report.hpp"

#include <functional>

namespace confbvp {

/// Envelope for the second-order kernels:
/// min{ (a delta + gamma t^a) / (a delta + gamma),
///      (a zeta + eta (1 - t^a)) / (a zeta + eta) }.
double envelope_g2(double t, Order alpha, const BcCoeffs& bc);

/// Envelope for the third-order kernel:
/// min{ t^a [(a+b) tau^b - a t^b] / (b tau^(a+b)), (1-t)/(1-tau) }.
double envelope_g3(double t, Order alpha, Order beta, double tau);

/// (a/(a+b))^(1/b); the third-order bound needs tau above this value.
double g3_positivity_threshold(Order alpha, Order beta);

/// k(s) = b s^(a+b) - (a+b) s^b + a; k(0) = a, k(1) = 0, strictly decreasing.
double k_lidstone(double s, Order alpha, Order beta);

using KernelFn = std::function<double(double, double)>;

/// Scans a uniform n x n grid (endpoints included) for violations of the
/// two-sided envelope bound of the given family. The peak is G(s,s) for the
/// second-order families and G(tau,s) for the third-order one. An optional
/// kernel override substitutes the evaluated kernel (fault injection).
VerifyReport check_two_sided_bound(const KernelSpec& spec, int n = 101, double tol = 1e-12,
                                   const KernelFn& kernel = {});

/// Third-order profile shape: non-decreasing in t on [0,tau], non-increasing
/// on [tau,1], along every grid column.
VerifyReport check_monotonic_profile(const KernelSpec& spec, int n = 101, double tol = 1e-12,
                                     const KernelFn& kernel = {});

} // namespace confbvp
