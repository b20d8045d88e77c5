#pragma once

// Windows on the real line: uniformly sampled (x_i = x0 + i*h) or given by a
// callable with a compact support interval.

#include "framelab/types.hpp"

#include <functional>
#include <vector>

namespace framelab {

class SampledWindow {
 public:
    /// Samples at x0 + i*step. `support` must contain every nonzero sample.
    SampledWindow(double x0, double step, std::vector<cplx> samples, Interval support);
    /// Support taken as the hull of the sample grid.
    SampledWindow(double x0, double step, std::vector<cplx> samples);

    [[nodiscard]] double x0() const { return x0_; }
    [[nodiscard]] double step() const { return step_; }
    [[nodiscard]] const std::vector<cplx>& samples() const { return samples_; }
    [[nodiscard]] const Interval& support() const { return support_; }
    [[nodiscard]] std::size_t size() const { return samples_.size(); }

    /// Integer offset of x0 on the lattice step*Z; throws GridError if x0/step
    /// is not an integer.
    [[nodiscard]] long long origin_index() const;

    /// Sample at lattice point j*step (0 off the stored range).
    [[nodiscard]] cplx at_lattice(long long j) const;

    /// Piecewise-linear interpolation, 0 outside the stored range.
    [[nodiscard]] cplx interpolate(double x) const;

    [[nodiscard]] double l2_norm_squared() const;  // Riemann sum h * sum |s_i|^2
    [[nodiscard]] bool is_zero() const;

    [[nodiscard]] SampledWindow conjugated() const;
    [[nodiscard]] SampledWindow scaled(cplx factor) const;

 private:
    double x0_;
    double step_;
    std::vector<cplx> samples_;
    Interval support_;
};

/// A window given pointwise, vanishing outside `support`.
struct AnalyticWindow {
    std::function<cplx(double)> value;
    Interval support;

    [[nodiscard]] cplx operator()(double x) const {
        return support.contains(x) ? value(x) : cplx(0.0, 0.0);
    }

    /// Samples on step*Z restricted to support (grid aligned to 0).
    [[nodiscard]] SampledWindow sample(double step) const;

    static AnalyticWindow from_sampled(const SampledWindow& w);
    static AnalyticWindow gaussian(double width = 1.0, double radius = 8.0);
    static AnalyticWindow indicator(Interval iv);
};

/// Whether x/step is within 1e-9 of an integer; writes the integer to `out`.
bool integral_ratio(double x, double step, long long& out);

}  // namespace framelab
