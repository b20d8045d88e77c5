#include "framelab/exponentials.hpp"

#include "framelab/errors.hpp"
#include "framelab/jacobi.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

namespace framelab::exponentials {

namespace {

using wide = boost::multiprecision::cpp_bin_float_50;

double gram_entry(double d) {
    if (d == 0.0) return 2.0 * kPi;
    if (d == std::round(d)) return 0.0;
    return 2.0 * std::sin(kPi * d) / d;
}

}  // namespace

LambdaSet::LambdaSet(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
    if (lambdas_.empty()) throw DomainError("LambdaSet: empty");
    for (std::size_t i = 0; i < lambdas_.size(); ++i) {
        if (!std::isfinite(lambdas_[i])) throw DomainError("LambdaSet: non-finite lambda");
        if (i > 0 && !(lambdas_[i] > lambdas_[i - 1])) throw DomainError("LambdaSet: lambdas must increase strictly");
    }
}

double LambdaSet::delta() const {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < lambdas_.size(); ++i) d = std::min(d, lambdas_[i] - lambdas_[i - 1]);
    return d;
}

LambdaSet LambdaSet::shifted(double c) const {
    std::vector<double> out = lambdas_;
    for (double& x : out) x += c;
    return LambdaSet(std::move(out));
}

LambdaSet LambdaSet::integers(int count) {
    if (count < 1) throw DomainError("LambdaSet::integers: count must be positive");
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = i;
    return LambdaSet(std::move(v));
}

LambdaSet LambdaSet::half_integers(int count) {
    if (count < 1) throw DomainError("LambdaSet::half_integers: count must be positive");
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = 0.5 * i;
    return LambdaSet(std::move(v));
}

cmat exp_gram(const LambdaSet& ls, bool normalized) {
    const auto n = static_cast<Eigen::Index>(ls.size());
    cmat g(n, n);
    const double scale = normalized ? 1.0 / (2.0 * kPi) : 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double d = ls.lambdas()[static_cast<std::size_t>(j)] - ls.lambdas()[static_cast<std::size_t>(k)];
            g(j, k) = gram_entry(d) * scale;
        }
    }
    return g;
}

LowerBound lower_bound_detail(const LambdaSet& ls) {
    const Eigen::MatrixXd g = exp_gram(ls).real();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues()(0);
    const double hi = es.eigenvalues()(g.rows() - 1);
    LowerBound out{lo, std::log10(std::max(lo, std::numeric_limits<double>::denorm_min())), false};
    if (lo >= 1e-8 * hi) return out;

    const std::size_t n = ls.size();
    const wide pi = boost::math::constants::pi<wide>();
    std::vector<wide> m(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            const wide d = wide(ls.lambdas()[j]) - wide(ls.lambdas()[k]);
            if (d == 0) {
                m[j * n + k] = 2 * pi;
            } else if (d == boost::multiprecision::round(d)) {
                m[j * n + k] = 0;
            } else {
                m[j * n + k] = 2 * boost::multiprecision::sin(pi * d) / d;
            }
        }
    }
    const std::vector<wide> eig = jacobi_eigenvalues(std::move(m), n);
    const wide low = eig.front();
    out.value = low.convert_to<double>();
    out.log10_value = low > 0 ? boost::multiprecision::log10(low).convert_to<double>()
                              : -std::numeric_limits<double>::infinity();
    out.extended_precision = true;
    return out;
}

double lower_bound(const LambdaSet& ls) { return lower_bound_detail(ls).value; }

CrudeBound crude_bound(int N, double delta) {
    if (N < 1) throw DomainError("crude_bound: N must be at least 1");
    if (!(delta > 0.0)) throw DomainError("crude_bound: delta must be positive");
    if (delta > 1.0) throw PreconditionError("crude_bound: the estimate needs delta <= 1");
    const double log10_value = std::log10(1.6e-14) + (2.0 * N + 1.0) * std::log10(delta / 2.0) -
                               8.0 * std::lgamma(N + 2.0) / std::log(10.0);
    const double value = log10_value < -307.0 ? 0.0 : std::pow(10.0, log10_value);
    return {value, log10_value};
}

DecayStudy decay_study(const std::function<LambdaSet(int)>& family, int N_max, Execution exec) {
    if (N_max < 1) throw DomainError("decay_study: N_max must be at least 1");
    DecayStudy out;
    out.rows = map_indices<DecayRow>(static_cast<std::size_t>(N_max), exec, [&](std::size_t i) {
        const int N = static_cast<int>(i) + 1;
        const LambdaSet ls = family(N);
        if (ls.size() != static_cast<std::size_t>(N)) {
            throw DomainError("decay_study: family(" + std::to_string(N) + ") has the wrong size");
        }
        const LowerBound lb = lower_bound_detail(ls);
        const double delta = std::min(1.0, ls.delta());
        const CrudeBound cb = crude_bound(N, delta);
        return DecayRow{N, lb.value, lb.log10_value, delta, cb.log10_value, cb.log10_value - lb.log10_value};
    });
    out.strictly_decreasing = true;
    out.crude_below_exact = true;
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
        if (i > 0 && !(out.rows[i].log10_lower < out.rows[i - 1].log10_lower)) out.strictly_decreasing = false;
        if (!(out.rows[i].log10_crude <= out.rows[i].log10_lower)) out.crude_below_exact = false;
    }
    return out;
}

}  // namespace framelab::exponentials
