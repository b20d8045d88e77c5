#include "framelab/bspline.hpp"

#include "framelab/dilation.hpp"
#include "framelab/errors.hpp"
#include "framelab/gabor.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace framelab::bspline {

namespace {

void require_order(int N) {
    if (N < 1) throw DomainError("B-spline order must be at least 1, got " + std::to_string(N));
}

// Nodes and weights of n-point Gauss-Legendre on [0, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
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
        nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);
        weights[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
}

struct PainlessBounds {
    FrameBounds raw;        // b^{-1} inf / sup of the periodic sum on the grid
    FrameBounds certified;  // with the Lipschitz slack
    bool zero_certified = false;
};

PainlessBounds painless(int N, double a, double b, std::size_t points) {
    PainlessBounds out;
    if (N == 1) {
        // the periodic sum counts the points of aZ in a half-open unit interval
        const double inv = 1.0 / a;
        const double nearest = std::round(inv);
        const bool integral = std::abs(inv - nearest) < 1e-12 * std::max(1.0, inv);
        double lo = integral ? nearest : std::floor(inv);
        double hi = integral ? nearest : std::ceil(inv);
        if (a > 1.0 && !integral) {
            lo = 0.0;
            hi = 1.0;
        }
        out.raw = {lo / b, hi / b};
        out.certified = out.raw;
        out.zero_certified = lo == 0.0;
        return out;
    }
    double inf = std::numeric_limits<double>::infinity();
    double sup = 0.0;
    const double dx = a / static_cast<double>(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double x = static_cast<double>(i) * dx;
        const auto n_lo = static_cast<long long>(std::ceil((x - N) / a)) - 1;
        const auto n_hi = static_cast<long long>(std::floor(x / a)) + 1;
        double f = 0.0;
        for (long long n = n_lo; n <= n_hi; ++n) {
            const double v = eval(N, x - static_cast<double>(n) * a);
            f += v * v;
        }
        inf = std::min(inf, f);
        sup = std::max(sup, f);
    }
    // |B_N| <= 1 and |B_N'| <= 1 for N >= 2
    const double lipschitz = 2.0 * (std::ceil(N / a) + 1.0);
    const double slack = lipschitz * dx / 2.0;
    out.raw = {inf / b, sup / b};
    out.certified = {(inf - slack) / b, (sup + slack) / b};
    out.zero_certified = a >= N;  // the grid point x = 0 gives an exactly vanishing sum
    return out;
}

std::function<double(double)> spline_fn(int N) {
    return [N](double x) { return eval(N, x); };
}

}  // namespace

double eval(int N, double x) {
    require_order(N);
    if (!(x >= 0.0) || !(x < static_cast<double>(N))) return 0.0;
    // v[s] = B_k(x - s) for the current order k
    std::vector<double> v(static_cast<std::size_t>(N) + 1, 0.0);
    const auto cell = static_cast<std::size_t>(std::floor(x));
    v[cell] = 1.0;
    for (int k = 2; k <= N; ++k) {
        for (std::size_t s = 0; s + 1 <= static_cast<std::size_t>(N); ++s) {
            const double t = x - static_cast<double>(s);
            v[s] = (t * v[s] + (static_cast<double>(k) - t) * v[s + 1]) / static_cast<double>(k - 1);
        }
    }
    return v[0];
}

double derivative(int N, double x) {
    require_order(N);
    if (N == 1) return 0.0;
    return eval(N - 1, x) - eval(N - 1, x - 1.0);
}

cplx fourier(int N, double gamma) {
    require_order(N);
    if (gamma == 0.0) return 1.0;
    if (gamma == std::round(gamma)) return 0.0;
    const double s = std::sin(kPi * gamma) / (kPi * gamma);
    const cplx base = std::polar(s, -kPi * gamma);
    cplx out = 1.0;
    for (int i = 0; i < N; ++i) out *= base;
    return out;
}

AnalysisReport property_suite(int N, const PropertyOptions& options) {
    require_order(N);
    const std::size_t pts = std::max<std::size_t>(options.grid_points, 2);
    double support = 0.0;
    for (std::size_t i = 0; i < pts; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(pts);
        support = std::max({support, std::abs(eval(N, -1.0 + t)), std::abs(eval(N, N + t))});
    }
    double min_interior = std::numeric_limits<double>::infinity();
    double nonpositive = 0.0;
    for (std::size_t i = 0; i < pts; ++i) {
        const double x = N * (static_cast<double>(i) + 0.5) / static_cast<double>(pts);
        const double v = eval(N, x);
        min_interior = std::min(min_interior, v);
        if (!(v > 0.0)) nonpositive += 1.0;
    }
    std::vector<double> nodes;
    std::vector<double> weights;
    gauss_legendre(std::max(N, 2), nodes, weights);
    double integral = 0.0;
    for (int cell = 0; cell < N; ++cell) {
        for (std::size_t q = 0; q < nodes.size(); ++q) integral += weights[q] * eval(N, cell + nodes[q]);
    }
    const double spacing = 1.0 + options.partition_shift;
    if (!(spacing > 0.0)) throw DomainError("property_suite: partition shift must exceed -1");
    double partition = 0.0;
    for (std::size_t i = 0; i < pts; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(pts);
        const auto k_lo = static_cast<long long>(std::floor((x - N) / spacing)) - 1;
        const auto k_hi = static_cast<long long>(std::ceil(x / spacing)) + 1;
        double s = 0.0;
        for (long long k = k_lo; k <= k_hi; ++k) s += eval(N, x - static_cast<double>(k) * spacing);
        partition = std::max(partition, std::abs(s - 1.0));
    }
    AnalysisReport r = AnalysisReport::from_residuals({{"support", support},
                                                       {"positivity", nonpositive},
                                                       {"integral", std::abs(integral - 1.0)},
                                                       {"partition", partition}},
                                                      options.tolerance);
    r.with_metric("N", N).with_metric("min_interior", min_interior).with_metric("partition_shift", options.partition_shift);
    return r;
}

const char* to_string(CellStatus s) {
    switch (s) {
        case CellStatus::frame_certified: return "frame_certified";
        case CellStatus::lower_bound_zero_certified: return "lower_bound_zero_certified";
        case CellStatus::undecided: return "undecided";
    }
    return "undecided";
}

FrameBounds finite_section_estimate(const std::function<double(double)>& g, Interval support, double a, double b,
                                    int rows, std::size_t x_points) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("finite_section_estimate: a and b must be positive");
    if (rows < 0 || x_points == 0) throw DomainError("finite_section_estimate: empty section");
    const int size = 2 * rows + 1;
    FrameBounds out{std::numeric_limits<double>::infinity(), 0.0};
    for (std::size_t i = 0; i < x_points; ++i) {
        const double x0 = a * static_cast<double>(i) / static_cast<double>(x_points);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size, size);
        // columns n with any nonzero entry in the chosen rows
        const double top = x0 + rows / b;
        const double bottom = x0 - rows / b;
        const auto n_lo = static_cast<long long>(std::floor((bottom - support.hi) / a)) - 1;
        const auto n_hi = static_cast<long long>(std::ceil((top - support.lo) / a)) + 1;
        Eigen::VectorXd col(size);
        for (long long n = n_lo; n <= n_hi; ++n) {
            for (int l = -rows; l <= rows; ++l) col(l + rows) = g(x0 - static_cast<double>(n) * a - l / b);
            m.noalias() += col * col.transpose();
        }
        m /= b;
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
        out.lower = std::min(out.lower, es.eigenvalues()(0));
        out.upper = std::max(out.upper, es.eigenvalues()(size - 1));
    }
    out.lower = std::max(out.lower, 0.0);
    return out;
}

PhaseDiagramCell scan_cell(int N, double a, double b, const ScanOptions& options) {
    require_order(N);
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("gabor_scan: a and b must be positive");
    if (options.period_points == 0) throw DomainError("gabor_scan: need period points");
    PhaseDiagramCell cell{a, b, CellStatus::undecided, {}, {}};

    if (b * N <= 1.0) {
        const PainlessBounds p = painless(N, a, b, options.period_points);
        if (p.zero_certified) {
            cell.status = CellStatus::lower_bound_zero_certified;
            cell.bounds_estimate = {0.0, p.certified.upper};
            cell.method = "painless: periodic sum vanishes";
            return cell;
        }
        if (p.certified.lower > 0.0) {
            cell.status = CellStatus::frame_certified;
            cell.bounds_estimate = p.certified;
            cell.method = "painless";
            return cell;
        }
    } else if (N >= 2) {
        dilation::WavePacketGrid grid;
        grid.a_values = {1.0};
        grid.b = b;
        const auto m_lo = static_cast<long long>(std::floor(-N / a)) - 2;
        for (long long m = m_lo; m <= 2; ++m) grid.c_values.push_back(static_cast<double>(m) * a);
        dilation::WavePacketOptions wp;
        wp.gamma_range = Interval{0.0, a};
        wp.grid_points = options.period_points;
        wp.refine = false;
        wp.exec = Execution::serial;
        const auto g_hat = dilation::FreqFunction::from_callable(
            [N](double x) { return cplx(eval(N, x), 0.0); }, dilation::Band{{{0.0, static_cast<double>(N)}}});
        const dilation::WavePacketFrameBounds fb = dilation::wave_packet_frame_bounds(g_hat, grid, wp);
        const double terms = (std::ceil(N / a) + 1.0) * (2.0 * std::ceil(N * b) + 1.0);
        const double slack = 2.0 * terms * (a / static_cast<double>(options.period_points)) / 2.0;
        const double lower = fb.raw_lower - slack / b;
        if (lower > 0.0) {
            cell.status = CellStatus::frame_certified;
            cell.bounds_estimate = {lower, fb.bounds.upper + slack / b};
            cell.method = "wave packet sufficient condition";
            return cell;
        }
    }
    cell.bounds_estimate = finite_section_estimate(spline_fn(N), Interval{0.0, static_cast<double>(N)}, a, b,
                                                   options.section_rows, options.section_points);
    cell.method = "finite-section estimate";
    return cell;
}

std::vector<PhaseDiagramCell> gabor_scan(int N, const std::vector<double>& a_grid, const std::vector<double>& b_grid,
                                         const ScanOptions& options) {
    require_order(N);
    const std::size_t nb = b_grid.size();
    return map_indices<PhaseDiagramCell>(a_grid.size() * nb, options.exec, [&](std::size_t i) {
        return scan_cell(N, a_grid[i / nb], b_grid[i % nb], options);
    });
}

SampledWindow sampled(int N, double step) {
    require_order(N);
    if (!(step > 0.0)) throw DomainError("bspline::sampled: step must be positive");
    const auto count = static_cast<std::size_t>(std::llround(N / step)) + 1;
    std::vector<cplx> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = eval(N, static_cast<double>(i) * step);
    return {0.0, step, std::move(v), Interval{0.0, static_cast<double>(N)}};
}

DualWindow dual_window_solve(int N, double b, int K, double tolerance) {
    require_order(N);
    if (!(b > 0.0) || b > 1.0 / (2.0 * N - 1.0) + 1e-15) {
        throw PreconditionError("dual_window_solve: need 0 < b <= 1/(2N-1) = " + std::to_string(1.0 / (2.0 * N - 1.0)));
    }
    if (K < N - 1) throw PreconditionError("dual_window_solve: need K >= N-1 shifts");

    const int unknowns = 2 * K + 1;
    const int per_unit = 4 * K + 4;
    const double diam = static_cast<double>(N + 2 * K + N);  // hull of supp g and supp h
    const auto n_max = static_cast<long long>(std::ceil(diam * b));
    std::vector<Eigen::VectorXd> rows;
    std::vector<double> rhs;
    for (long long n = -n_max; n <= n_max; ++n) {
        for (int i = 0; i < per_unit; ++i) {
            const double x = static_cast<double>(i) / per_unit;
            Eigen::VectorXd row = Eigen::VectorXd::Zero(unknowns);
            // sum_k g(x - n/b - k) h(x - k), h = sum_j c_j B_N(. + j)
            const auto k_lo = static_cast<long long>(std::floor(x - N - K)) - 1;
            const auto k_hi = static_cast<long long>(std::ceil(x + K)) + 1;
            for (long long k = k_lo; k <= k_hi; ++k) {
                const double gv = eval(N, x - static_cast<double>(n) / b - static_cast<double>(k));
                if (gv == 0.0) continue;
                for (int j = -K; j <= K; ++j) row(j + K) += gv * eval(N, x - static_cast<double>(k) + j);
            }
            rows.push_back(row);
            rhs.push_back(n == 0 ? b : 0.0);
        }
    }
    Eigen::MatrixXd sys(static_cast<Eigen::Index>(rows.size()), unknowns);
    Eigen::VectorXd target(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        sys.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
        target(static_cast<Eigen::Index>(r)) = rhs[r];
    }
    const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(sys);
    const Eigen::VectorXd c = cod.solve(target);
    const double ls_residual = (sys * c - target).cwiseAbs().maxCoeff();

    // check grid: step 1/M with M/b integral
    double step = 0.0;
    for (int M = 64; M <= 64 * 64; M += 64) {
        long long q = 0;
        if (integral_ratio(static_cast<double>(M), b, q)) {
            step = 1.0 / M;
            break;
        }
    }
    if (step == 0.0) throw GridError("dual_window_solve: no sampling step makes 1/(b h) integral");

    const auto first = static_cast<long long>(std::llround(-K / step));
    const auto last = static_cast<long long>(std::llround((N + K) / step));
    std::vector<cplx> hv;
    for (long long j = first; j <= last; ++j) {
        const double x = static_cast<double>(j) * step;
        double s = 0.0;
        for (int k = -K; k <= K; ++k) s += c(k + K) * eval(N, x + k);
        hv.emplace_back(s, 0.0);
    }
    SampledWindow h(static_cast<double>(first) * step, step, std::move(hv),
                    Interval{-static_cast<double>(K), static_cast<double>(N + K)});
    AnalysisReport check = gabor::ron_shen_duality_check(sampled(N, step), h, 1.0, b, tolerance);
    check.residuals["least_squares"] = ls_residual;
    check = [&] {
        AnalysisReport merged = AnalysisReport::from_residuals(check.residuals, tolerance, "solved by least squares");
        merged.metrics = check.metrics;
        merged.with_metric("rank", static_cast<double>(cod.rank())).with_metric("unknowns", unknowns);
        return merged;
    }();
    std::vector<double> coeffs(c.data(), c.data() + c.size());
    return {std::move(coeffs), std::move(h), std::move(check)};
}

}  // namespace framelab::bspline
