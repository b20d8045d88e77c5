#include "framelab/sampled_window.hpp"

#include "framelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace framelab {

bool integral_ratio(double x, double step, long long& out) {
    const double r = x / step;
    const double nearest = std::round(r);
    if (std::abs(r - nearest) > 1e-9 * std::max(1.0, std::abs(r))) return false;
    out = static_cast<long long>(nearest);
    return true;
}

SampledWindow::SampledWindow(double x0, double step, std::vector<cplx> samples, Interval support)
    : x0_(x0), step_(step), samples_(std::move(samples)), support_(support) {
    if (!(step > 0.0) || !std::isfinite(step)) throw DomainError("SampledWindow: step must be positive");
    if (!std::isfinite(x0)) throw DomainError("SampledWindow: x0 must be finite");
    if (!(support.lo <= support.hi)) throw DomainError("SampledWindow: support interval is reversed");
    if (!std::isfinite(support.lo) || !std::isfinite(support.hi)) {
        throw UnsupportedError("SampledWindow: support must be compact");
    }
    const double slack = 1e-9 * step;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const cplx s = samples_[i];
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw DomainError("SampledWindow: sample " + std::to_string(i) + " is not finite");
        }
        const double x = x0_ + static_cast<double>(i) * step_;
        if (s != cplx(0.0, 0.0) && (x < support_.lo - slack || x > support_.hi + slack)) {
            throw DomainError("SampledWindow: nonzero sample outside the support hint at x=" +
                              std::to_string(x));
        }
    }
}

SampledWindow::SampledWindow(double x0, double step, std::vector<cplx> samples)
    : SampledWindow(x0, step, samples,
                    Interval{x0, x0 + step * static_cast<double>(samples.empty() ? 0 : samples.size() - 1)}) {}

long long SampledWindow::origin_index() const {
    long long j = 0;
    if (!integral_ratio(x0_, step_, j)) {
        throw GridError("SampledWindow: x0 is not on the lattice step*Z");
    }
    return j;
}

cplx SampledWindow::at_lattice(long long j) const {
    const long long i = j - origin_index();
    if (i < 0 || i >= static_cast<long long>(samples_.size())) return {0.0, 0.0};
    return samples_[static_cast<std::size_t>(i)];
}

cplx SampledWindow::interpolate(double x) const {
    if (samples_.empty()) return {0.0, 0.0};
    const double t = (x - x0_) / step_;
    const double last = static_cast<double>(samples_.size() - 1);
    if (t < -1e-12 || t > last + 1e-12) return {0.0, 0.0};
    const double tc = std::clamp(t, 0.0, last);
    const auto i = static_cast<std::size_t>(std::floor(tc));
    if (i + 1 >= samples_.size()) return samples_.back();
    const double w = tc - static_cast<double>(i);
    return (1.0 - w) * samples_[i] + w * samples_[i + 1];
}

double SampledWindow::l2_norm_squared() const {
    double s = 0.0;
    for (const cplx v : samples_) s += std::norm(v);
    return s * step_;
}

bool SampledWindow::is_zero() const {
    for (const cplx v : samples_) {
        if (v != cplx(0.0, 0.0)) return false;
    }
    return true;
}

SampledWindow SampledWindow::conjugated() const {
    std::vector<cplx> out(samples_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::conj(samples_[i]);
    return {x0_, step_, std::move(out), support_};
}

SampledWindow SampledWindow::scaled(cplx factor) const {
    std::vector<cplx> out(samples_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = factor * samples_[i];
    return {x0_, step_, std::move(out), support_};
}

SampledWindow AnalyticWindow::sample(double step) const {
    if (!(step > 0.0)) throw DomainError("AnalyticWindow::sample: step must be positive");
    const auto first = static_cast<long long>(std::ceil(support.lo / step - 1e-9));
    const auto last = static_cast<long long>(std::floor(support.hi / step + 1e-9));
    std::vector<cplx> values;
    for (long long j = first; j <= last; ++j) {
        const double x = static_cast<double>(j) * step;
        values.push_back(support.contains(x) ? value(x) : cplx(0.0, 0.0));
    }
    return {static_cast<double>(first) * step, step, std::move(values), support};
}

AnalyticWindow AnalyticWindow::from_sampled(const SampledWindow& w) {
    return {[w](double x) { return w.interpolate(x); }, w.support()};
}

AnalyticWindow AnalyticWindow::gaussian(double width, double radius) {
    return {[width](double x) { return cplx(std::exp(-kPi * x * x / (width * width)), 0.0); },
            Interval{-radius, radius}};
}

AnalyticWindow AnalyticWindow::indicator(Interval iv) {
    // half-open [lo, hi)
    return {[iv](double x) { return cplx(x < iv.hi ? 1.0 : 0.0, 0.0); }, iv};
}

}  // namespace framelab
