#pragma once

// Cardinal B-splines B_1 = indicator of [0, 1), B_{N+1} = B_N * B_1, and the
// Gabor systems {E_{mb} T_{na} B_N} they generate.

#include "framelab/frame_core.hpp"
#include "framelab/parallel.hpp"
#include "framelab/sampled_window.hpp"

#include <string>
#include <vector>

namespace framelab::bspline {

/// B_N(x) via the order-raising recurrence. B_1 is the half-open indicator.
double eval(int N, double x);
/// B_N'(x) = B_{N-1}(x) - B_{N-1}(x - 1) for N >= 2.
double derivative(int N, double x);
/// ((1 - exp(-2 pi i g)) / (2 pi i g))^N, equal to 1 at g = 0 and 0 at nonzero integers.
cplx fourier(int N, double gamma);

struct PropertyOptions {
    /// Partition of unity is tested as sum_k B_N(x - k (1 + shift)); nonzero shift is a negative control.
    double partition_shift = 0.0;
    std::size_t grid_points = 1000;
    double tolerance = kDefaultTolerance;
};

/// Support, positivity on ]0, N[, unit integral (Gauss-Legendre per unit cell)
/// and partition of unity.
AnalysisReport property_suite(int N, const PropertyOptions& options = {});

enum class CellStatus { frame_certified, lower_bound_zero_certified, undecided };

const char* to_string(CellStatus s);

struct PhaseDiagramCell {
    double a = 0.0;
    double b = 0.0;
    CellStatus status = CellStatus::undecided;
    FrameBounds bounds_estimate;
    std::string method;
};

struct ScanOptions {
    std::size_t period_points = 1024;  // grid per period [0, a)
    int section_rows = 8;              // finite section uses rows |l| <= section_rows
    std::size_t section_points = 64;   // x0 samples in [0, a) for the finite section
    Execution exec = Execution::parallel;
};

/// One cell of the (a, b) diagram.
PhaseDiagramCell scan_cell(int N, double a, double b, const ScanOptions& options = {});

/// Cells in row-major order over (a_grid, b_grid).
std::vector<PhaseDiagramCell> gabor_scan(int N, const std::vector<double>& a_grid, const std::vector<double>& b_grid,
                                         const ScanOptions& options = {});

/// Extreme eigenvalues over x0 of the finite sections (1/b) P(x0) P(x0)^*, with
/// P(x0)_{l,n} = g(x0 - n a - l/b), |l| <= rows. Every value lies inside the
/// optimal frame bounds of {E_{mb} T_{na} g}.
FrameBounds finite_section_estimate(const std::function<double(double)>& g, Interval support, double a, double b,
                                    int rows, std::size_t x_points);

struct DualWindow {
    std::vector<double> coefficients;  // c_{-K}, ..., c_K
    SampledWindow window;              // h sampled on the check grid
    AnalysisReport report;
};

/// Dual window h = sum_{k=-K}^{K} c_k B_N(. + k) for translation step 1 and
/// modulation step b <= 1/(2N - 1), solved by least squares.
DualWindow dual_window_solve(int N, double b, int K, double tolerance = 1e-8);

/// B_N sampled on step*Z over [0, N].
SampledWindow sampled(int N, double step);

}  // namespace framelab::bspline
