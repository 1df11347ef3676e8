#include "confbvp/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace confbvp::num {

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess for the i-th positive root.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P'_n(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return cache.emplace(n, std::move(rule)).first->second;
}

std::vector<double> fd_weights(double x0, std::span<const double> nodes, int m) {
    const int n = static_cast<int>(nodes.size());
    if (m < 0 || n < m + 1) throw std::invalid_argument("fd_weights: too few nodes for derivative order");
    // Fornberg recursion; c[i][k] is the weight of node i for the k-th derivative.
    std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        int mn = std::min(i, m);
        double c2 = 1.0;
        double c5 = c4;
        c4 = nodes[i] - x0;
        for (int j = 0; j < i; ++j) {
            double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) w[i] = c[i][m];
    return w;
}

std::vector<double> lstsq(std::vector<double> a, std::vector<double> b, int rows, int cols) {
    if (rows < cols || static_cast<int>(a.size()) != rows * cols || static_cast<int>(b.size()) != rows)
        throw std::invalid_argument("lstsq: bad dimensions");
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * cols + j]; };
    // Householder QR applied in place to [A | b].
    for (int j = 0; j < cols; ++j) {
        double norm = 0.0;
        for (int i = j; i < rows; ++i) norm += at(i, j) * at(i, j);
        norm = std::sqrt(norm);
        if (norm < 1e-300) throw std::runtime_error("lstsq: rank-deficient design matrix");
        if (at(j, j) > 0) norm = -norm;
        std::vector<double> v(rows - j);
        v[0] = at(j, j) - norm;
        for (int i = j + 1; i < rows; ++i) v[i - j] = at(i, j);
        double vtv = 0.0;
        for (double x : v) vtv += x * x;
        if (vtv < 1e-300) continue;
        for (int k = j; k < cols; ++k) {
            double dot = 0.0;
            for (int i = j; i < rows; ++i) dot += v[i - j] * at(i, k);
            double f = 2.0 * dot / vtv;
            for (int i = j; i < rows; ++i) at(i, k) -= f * v[i - j];
        }
        double dot = 0.0;
        for (int i = j; i < rows; ++i) dot += v[i - j] * b[i];
        double f = 2.0 * dot / vtv;
        for (int i = j; i < rows; ++i) b[i] -= f * v[i - j];
    }
    // Back substitution on the upper-triangular factor.
    std::vector<double> x(cols);
    for (int j = cols - 1; j >= 0; --j) {
        double s = b[j];
        for (int k = j + 1; k < cols; ++k) s -= at(j, k) * x[k];
        if (std::abs(at(j, j)) < 1e-300) throw std::runtime_error("lstsq: singular triangular factor");
        x[j] = s / at(j, j);
    }
    return x;
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 2) throw std::invalid_argument("linspace: need n >= 2");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    v.back() = b;
    return v;
}

} // namespace confbvp::num
