#pragma once
// Gauss-Legendre rules built by Newton iteration on P_n, for test oracles.

#include <cmath>
#include <vector>

namespace framelab::testing {

struct Rule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

inline Rule gauss_legendre_rule(int n) {
    Rule r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    const double pi = std::acos(-1.0);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.nodes[static_cast<std::size_t>(i)] = x;
        r.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

/// Composite rule: `cells` equal cells on [lo, hi], `n` nodes each.
template <class F>
auto integrate(F&& f, double lo, double hi, int cells, int n) {
    const Rule r = gauss_legendre_rule(n);
    const double h = (hi - lo) / cells;
    decltype(f(lo)) sum{};
    for (int c = 0; c < cells; ++c) {
        const double mid = lo + (c + 0.5) * h;
        for (int i = 0; i < n; ++i) {
            sum += r.weights[static_cast<std::size_t>(i)] * (h / 2) * f(mid + (h / 2) * r.nodes[static_cast<std::size_t>(i)]);
        }
    }
    return sum;
}

}  // namespace framelab::testing
