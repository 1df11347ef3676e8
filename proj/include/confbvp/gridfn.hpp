#pragma once

#include "confbvp/fraccalc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace confbvp {

/// A scalar function sampled on a 1-D mesh over [0,1]. Solvers attach a
/// `dense` evaluator (the underlying integral representation) so verifiers
/// can sample between mesh points at full accuracy.
struct GridFunction {
    std::vector<double> mesh;
    std::vector<double> values;
    ScalarFn dense; // optional; empty when only samples exist

    double eval_linear(double t) const {
        if (mesh.size() < 2 || mesh.size() != values.size())
            throw std::logic_error("GridFunction: inconsistent mesh");
        if (t <= mesh.front()) return values.front();
        if (t >= mesh.back()) return values.back();
        size_t lo = 0, hi = mesh.size() - 1;
        while (hi - lo > 1) {
            size_t mid = (lo + hi) / 2;
            (mesh[mid] <= t ? lo : hi) = mid;
        }
        const double w = (t - mesh[lo]) / (mesh[lo + 1] - mesh[lo]);
        return values[lo] + w * (values[lo + 1] - values[lo]);
    }

    double sup_norm() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
};

/// Iterated conformable derivative of a grid function; requires the dense
/// evaluator (linear interpolation cannot sustain nested differencing).
inline double iterated_conf_diff(const GridFunction& x, std::span<const double> orders, double t,
                                 const DiffOptions& opts = {}) {
    if (!x.dense)
        throw std::invalid_argument(
            "iterated_conf_diff: GridFunction needs a dense evaluator for differencing");
    return iterated_conf_diff(x.dense, orders, t, opts);
}

} // namespace confbvp
