#include "framelab/dilation.hpp"

#include "framelab/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace framelab::dilation {

using boost::multiprecision::cpp_rational;

bool Band::contains(double x) const {
    return std::any_of(intervals.begin(), intervals.end(), [x](const Interval& iv) { return iv.contains(x); });
}

Interval Band::hull() const {
    if (intervals.empty()) return {0.0, 0.0};
    Interval h = intervals.front();
    for (const Interval& iv : intervals) {
        h.lo = std::min(h.lo, iv.lo);
        h.hi = std::max(h.hi, iv.hi);
    }
    return h;
}

double Band::distance_from_zero() const {
    double d = std::numeric_limits<double>::infinity();
    for (const Interval& iv : intervals) {
        if (iv.contains(0.0)) return 0.0;
        d = std::min(d, std::min(std::abs(iv.lo), std::abs(iv.hi)));
    }
    return d;
}

Band Band::shifted(double c) const {
    Band out = *this;
    for (Interval& iv : out.intervals) {
        iv.lo += c;
        iv.hi += c;
    }
    return out;
}

namespace {

Band validated(Band band) {
    for (const Interval& iv : band.intervals) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
            throw UnsupportedError("FreqFunction: band must be compact");
        }
        if (iv.lo > iv.hi) throw DomainError("FreqFunction: band interval is reversed");
    }
    return band;
}

}  // namespace

FreqFunction::FreqFunction(std::function<cplx(double)> fn, Band band, std::optional<UniformGrid> grid)
    : fn_(std::move(fn)), band_(validated(std::move(band))), grid_(grid) {}

FreqFunction FreqFunction::from_samples(UniformGrid grid, std::vector<cplx> values, Band band) {
    if (!(grid.step > 0.0)) throw DomainError("FreqFunction: grid step must be positive");
    if (values.size() != grid.count) {
        throw DimensionError("FreqFunction: " + std::to_string(values.size()) + " values for a grid of " +
                             std::to_string(grid.count));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
            throw DomainError("FreqFunction: value " + std::to_string(i) + " is not finite");
        }
        if (values[i] != cplx(0.0, 0.0) && !band.contains(grid.at(i))) {
            throw DomainError("FreqFunction: nonzero value outside the band at gamma=" + std::to_string(grid.at(i)));
        }
    }
    auto fn = [grid, v = std::move(values)](double x) -> cplx {
        if (v.empty()) return 0.0;
        const double t = (x - grid.start) / grid.step;
        const double last = static_cast<double>(v.size() - 1);
        if (t < -1e-12 || t > last + 1e-12) return 0.0;
        const double tc = std::clamp(t, 0.0, last);
        const auto i = static_cast<std::size_t>(std::floor(tc));
        if (i + 1 >= v.size()) return v.back();
        const double w = tc - static_cast<double>(i);
        return (1.0 - w) * v[i] + w * v[i + 1];
    };
    return {std::move(fn), std::move(band), grid};
}

FreqFunction FreqFunction::from_callable(std::function<cplx(double)> fn, Band band) {
    return {std::move(fn), std::move(band)};
}

FreqFunction FreqFunction::indicator(Band band, cplx scale) {
    auto fn = [band, scale](double x) -> cplx {
        for (const Interval& iv : band.intervals) {
            if (iv.lo <= x && x < iv.hi) return scale;
        }
        return 0.0;
    };
    return {std::move(fn), band};
}

FreqFunction FreqFunction::zero() {
    return {[](double) { return cplx(0.0, 0.0); }, Band{}};
}

cplx FreqFunction::operator()(double gamma) const {
    return band_.contains(gamma) ? fn_(gamma) : cplx(0.0, 0.0);
}

FreqFunction FreqFunction::scaled(cplx factor) const {
    return {[fn = fn_, factor](double x) { return factor * fn(x); }, band_};
}

FreqFunction FreqFunction::plus(const FreqFunction& other) const {
    Band joined = band_;
    joined.intervals.insert(joined.intervals.end(), other.band_.intervals.begin(), other.band_.intervals.end());
    return {[x = *this, y = other](double g) { return x(g) + y(g); }, std::move(joined)};
}

std::vector<cplx> FreqFunction::sample(const UniformGrid& grid) const {
    std::vector<cplx> out(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) out[i] = (*this)(grid.at(i));
    return out;
}

namespace {

struct WaveletPoint {
    double res_i = 0.0;
    std::map<cpp_rational, cplx> alpha_sums;
};

cpp_rational dyadic(long long m, int j) {
    cpp_rational r(m);
    if (j >= 0) {
        r /= cpp_rational(boost::multiprecision::cpp_int(1) << j);
    } else {
        r *= cpp_rational(boost::multiprecision::cpp_int(1) << (-j));
    }
    return r;
}

WaveletPoint wavelet_point(const FreqFunction& psi, const FreqFunction& psit, double b, double gamma) {
    WaveletPoint out;
    cplx diag = 0.0;
    if (!psi.is_zero()) {
        const Interval h1 = psi.band().hull();
        const double d1 = psi.band().distance_from_zero();
        const double r1 = std::max(std::abs(h1.lo), std::abs(h1.hi));
        const double ag = std::abs(gamma);
        const int j_lo = static_cast<int>(std::floor(std::log2(d1 / ag))) - 1;
        const int j_hi = static_cast<int>(std::ceil(std::log2(r1 / ag))) + 1;
        Interval h2{0.0, 0.0};
        if (!psit.is_zero()) h2 = psit.band().hull();
        const auto m_lo = static_cast<long long>(std::floor(h2.lo - h1.hi)) - 1;
        const auto m_hi = static_cast<long long>(std::ceil(h2.hi - h1.lo)) + 1;
        for (int j = j_lo; j <= j_hi; ++j) {
            const double x = std::ldexp(gamma, j);
            const cplx p = psi(x);
            if (p == cplx(0.0, 0.0)) continue;
            diag += std::conj(p) * psit(x);
            if (psit.is_zero()) continue;
            for (long long m = m_lo; m <= m_hi; ++m) {
                if (m == 0) continue;
                const cplx t = std::conj(p) * psit(x + static_cast<double>(m));
                if (t == cplx(0.0, 0.0)) continue;
                out.alpha_sums[dyadic(m, j)] += t;
            }
        }
    }
    out.res_i = std::abs(diag - b);
    return out;
}

struct WaveletGridResult {
    double res_i = 0.0;
    double res_ii = 0.0;
    std::size_t alpha_count = 0;
};

WaveletGridResult wavelet_grid(const FreqFunction& psi, const FreqFunction& psit, double b, double radius,
                               std::size_t points, Execution exec) {
    const double step = 2.0 * radius / static_cast<double>(points);
    const auto per_point = map_indices<WaveletPoint>(points, exec, [&](std::size_t i) {
        const double gamma = -radius + static_cast<double>(i) * step;
        if (gamma == 0.0) return WaveletPoint{};
        return wavelet_point(psi, psit, b, gamma);
    });
    WaveletGridResult out;
    std::map<cpp_rational, double> worst;
    for (std::size_t i = 0; i < points; ++i) {
        if (-radius + static_cast<double>(i) * step == 0.0) continue;
        out.res_i = std::max(out.res_i, per_point[i].res_i);
        for (const auto& [alpha, s] : per_point[i].alpha_sums) {
            double& w = worst[alpha];
            w = std::max(w, std::abs(s));
        }
    }
    for (const auto& [alpha, w] : worst) out.res_ii = std::max(out.res_ii, w);
    out.alpha_count = worst.size();
    return out;
}

}  // namespace

AnalysisReport wavelet_duality_check(const FreqFunction& psi_hat, const FreqFunction& psi_tilde_hat, double b,
                                     double tolerance, const WaveletOptions& options) {
    if (!(b > 0.0)) throw DomainError("wavelet_duality_check: b must be positive");
    if (options.grid_points < 2) throw DomainError("wavelet_duality_check: need at least two grid points");
    for (const FreqFunction* f : {&psi_hat, &psi_tilde_hat}) {
        if (!f->is_zero() && !(f->band().distance_from_zero() > 0.0)) {
            throw TruncationError("wavelet_duality_check: a band touches 0, the dilation sum is infinite");
        }
    }
    double radius = 1.0;
    if (options.radius) {
        radius = *options.radius;
    } else {
        double r = 0.0;
        for (const FreqFunction* f : {&psi_hat, &psi_tilde_hat}) {
            if (f->is_zero()) continue;
            const Interval h = f->band().hull();
            r = std::max({r, std::abs(h.lo), std::abs(h.hi)});
        }
        if (r > 0.0) radius = r;
    }
    if (!(radius > 0.0)) throw DomainError("wavelet_duality_check: radius must be positive");

    const WaveletGridResult coarse = wavelet_grid(psi_hat, psi_tilde_hat, b, radius, options.grid_points, options.exec);
    WaveletGridResult fine = coarse;
    if (options.refine) {
        fine = wavelet_grid(psi_hat, psi_tilde_hat, b, radius, 2 * options.grid_points, options.exec);
    }
    AnalysisReport r = AnalysisReport::from_residuals(
        {{"condition_i", std::max(coarse.res_i, fine.res_i)}, {"condition_ii", std::max(coarse.res_ii, fine.res_ii)}},
        tolerance, "sup over a uniform grid on [-R, R)");
    r.with_metric("radius", radius)
        .with_metric("grid_points", static_cast<double>(options.grid_points))
        .with_metric("alpha_count", static_cast<double>(std::max(coarse.alpha_count, fine.alpha_count)))
        .with_metric("refinement_delta",
                     std::max(std::abs(fine.res_i - coarse.res_i), std::abs(fine.res_ii - coarse.res_ii)));
    return r;
}

}  // namespace framelab::dilation
