#include "confbvp/fraccalc.hpp"

#include "confbvp/numerics.hpp"

#include <cmath>
#include <unordered_map>

namespace confbvp {

namespace {

constexpr double kZeroLimitPoint = 1e-8; // where the t->0+ limit is sampled

// Classical first derivative by 4th-order central differences. Near the ends
// of [0,1] the stencil is shifted one-sided so f is never sampled outside.
double fd_first_derivative(const ScalarFn& f, double t) {
    // Near zero the step must shrink with t so the stencil stays positive and
    // the relative step stays small against fractional-power curvature.
    double h = 1e-5 * std::max(1.0, std::abs(t));
    if (t > 0.0) h = std::min(h, t / 64.0);
    if (t + 2.0 * h <= 1.0 && t - 2.0 * h >= 0.0) {
        return (-f(t + 2 * h) + 8 * f(t + h) - 8 * f(t - h) + f(t - 2 * h)) / (12 * h);
    }
    // One-sided 5-point stencil pointing into the domain.
    const double dir = (t + 2.0 * h > 1.0) ? -1.0 : 1.0;
    std::vector<double> nodes(5);
    for (int i = 0; i < 5; ++i) nodes[i] = t + dir * i * h;
    auto w = num::fd_weights(t, nodes, 1);
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += w[i] * f(nodes[i]);
    return s;
}

} // namespace

double conf_diff_closed(const ScalarFn&, const ScalarFn& fprime, Order alpha, double t) {
    if (t < 0.0) throw std::domain_error("conf_diff_closed: t must be nonnegative");
    if (t == 0.0) t = kZeroLimitPoint;
    double v = std::pow(t, 1.0 - alpha.value()) * fprime(t);
    if (!std::isfinite(v)) throw std::runtime_error("conf_diff_closed: non-finite derivative");
    return v;
}

double conf_diff_closed(const ScalarFn& f, Order alpha, double t) {
    if (t < 0.0) throw std::domain_error("conf_diff_closed: t must be nonnegative");
    if (t == 0.0) t = kZeroLimitPoint;
    double v = std::pow(t, 1.0 - alpha.value()) * fd_first_derivative(f, t);
    if (!std::isfinite(v)) throw std::runtime_error("conf_diff_closed: non-finite value near t");
    return v;
}

double conf_diff_limit(const ScalarFn& f, Order alpha, double t, double eps) {
    if (t <= 0.0) throw std::domain_error("conf_diff_limit: rescaling t e^{eps t^-a} needs t > 0");
    if (eps == 0.0) throw std::invalid_argument("conf_diff_limit: eps must be nonzero");
    const double scale = std::pow(t, -alpha.value());
    return (f(t * std::exp(eps * scale)) - f(t * std::exp(-eps * scale))) / (2.0 * eps);
}

double weighted_integral(const ScalarFn& f, double w, double a, double b,
                         const QuadratureRule& rule) {
    if (!(w > 0.0) || w > 1.0) throw std::domain_error("weighted_integral: weight order outside (0,1]");
    if (a > b) throw std::invalid_argument("weighted_integral: a > b");
    if (a < 0.0) throw std::domain_error("weighted_integral: negative lower endpoint");
    if (rule.panels < 1 || rule.nodes < 1) throw std::invalid_argument("weighted_integral: empty rule");
    if (a == b) return 0.0;

    // u = s^w maps the weight to du/w; a fractional-power integrand remains at
    // u = 0, which the graded panels absorb.
    const double ua = std::pow(a, w);
    const double ub = std::pow(b, w);
    const double len = ub - ua;
    const bool graded = (a == 0.0) || ua < 0.1;
    const double p = graded ? ((a == 0.0) ? rule.grading : 2.0) : 1.0;
    const auto& gauss = num::gauss_legendre(rule.nodes);
    const double invw = 1.0 / w;

    double total = 0.0;
    double lo = ua;
    for (int j = 1; j <= rule.panels; ++j) {
        const double frac = static_cast<double>(j) / rule.panels;
        const double hi = (j == rule.panels) ? ub : ua + len * std::pow(frac, p);
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (int k = 0; k < rule.nodes; ++k) {
            const double u = mid + half * gauss.nodes[k];
            acc += gauss.weights[k] * f(std::pow(u, invw));
        }
        total += acc * half;
        lo = hi;
    }
    return total / w;
}

double conf_integral(const ScalarFn& h, Order alpha, double a0, double b0,
                     const QuadratureRule& rule) {
    return weighted_integral(h, alpha.value(), a0, b0, rule);
}

double iterated_conf_diff(const ScalarFn& x, std::span<const double> orders, double t,
                          const DiffOptions& opts) {
    const int levels = static_cast<int>(orders.size());
    if (levels < 1 || levels > 4) throw std::invalid_argument("iterated_conf_diff: 1..4 orders");
    for (double a : orders)
        if (!(a > 0.0) || a > 1.0) throw std::domain_error("iterated_conf_diff: order outside (0,1]");
    const double dist = std::min(t, 1.0 - t);
    if (dist < opts.min_margin) throw StencilError(t, opts.min_margin);

    const int hw = opts.halfwidth;
    // Total stencil reach is hw * sum_k(base * growth^k); keep it inside the
    // domain with margin regardless of the configured relative step.
    double growth_sum = 0.0;
    for (int k = 0; k < levels; ++k) growth_sum += std::pow(opts.growth, k);
    const double base =
        std::min(opts.rel_step * dist, 0.9 * dist / (hw * growth_sum));

    // Per-level steps base * growth^k, expressed as integer multiples of a
    // common unit so stencil points collide bitwise and can be memoized.
    // growth = 3/2 gives step_int[k] = 3^k * 2^(levels-1-k).
    std::vector<double> hstep(levels);
    std::vector<long long> istep(levels);
    double unit;
    const bool exact_growth = (opts.growth == 1.5);
    if (exact_growth) {
        unit = base / static_cast<double>(1LL << (levels - 1));
        for (int k = 0; k < levels; ++k) {
            long long m = 1;
            for (int i = 0; i < k; ++i) m *= 3;
            for (int i = 0; i < levels - 1 - k; ++i) m *= 2;
            istep[k] = m;
            hstep[k] = unit * static_cast<double>(m);
        }
    } else {
        unit = 0.0;
        for (int k = 0; k < levels; ++k) {
            hstep[k] = base * std::pow(opts.growth, k);
            istep[k] = 0;
        }
    }

    // Stencil weights for the first derivative at unit spacing.
    std::vector<double> nodes;
    for (int j = -hw; j <= hw; ++j) nodes.push_back(static_cast<double>(j));
    const auto wts = num::fd_weights(0.0, nodes, 1);

    std::unordered_map<long long, double> memo; // key: offset_index * 8 + level

    std::function<double(int, long long, double)> eval =
        [&](int k, long long m, double off) -> double {
        if (k == 0) return x(t + (exact_growth ? unit * static_cast<double>(m) : off));
        long long key = 0;
        if (exact_growth) {
            key = m * 8 + k;
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        const double tk = t + (exact_growth ? unit * static_cast<double>(m) : off);
        const double h = hstep[k - 1];
        double deriv = 0.0;
        for (int j = -hw; j <= hw; ++j) {
            if (j == 0) continue;
            deriv += wts[j + hw] *
                     eval(k - 1, m + j * istep[k - 1], off + j * h);
        }
        deriv /= h;
        const double v = std::pow(tk, 1.0 - orders[k - 1]) * deriv;
        if (exact_growth) memo.emplace(key, v);
        return v;
    };

    double result = eval(levels, 0, 0.0);
    if (!std::isfinite(result)) throw std::runtime_error("iterated_conf_diff: non-finite value");
    return result;
}

} // namespace confbvp
