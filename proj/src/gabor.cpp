#include "framelab/gabor.hpp"

#include "framelab/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace framelab::gabor {

namespace {

long long pos_mod(long long x, long long m) {
    const long long r = x % m;
    return r < 0 ? r + m : r;
}

cplx phase(long long num, long long den) {
    // exp(2 pi i num / den) with the argument reduced first
    const double angle = 2.0 * kPi * static_cast<double>(pos_mod(num, den)) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

void require_same_lattice(const GaborSpec& g, const GaborSpec& h, const char* who) {
    if (g.L != h.L || g.a != h.a || g.b != h.b) {
        throw DimensionError(std::string(who) + ": the two specs use different lattices");
    }
}

std::map<std::string, double> bound_agreement(const FrameBounds& x, const FrameBounds& y) {
    const double scale = std::max({x.upper, y.upper, std::numeric_limits<double>::min()});
    return {{"lower", std::abs(x.lower - y.lower) / scale},
            {"upper", std::abs(x.upper - y.upper) / scale}};
}

void check_common_step(const SampledWindow& g, const SampledWindow& h, const char* who) {
    if (std::abs(g.step() - h.step()) > 1e-12 * g.step()) {
        throw GridError(std::string(who) + ": windows are sampled on different steps");
    }
}

long long integral_or_throw(double x, double step, const char* what) {
    long long out = 0;
    if (!integral_ratio(x, step, out) || out <= 0) {
        throw GridError(std::string(what) + " is not a positive multiple of the sampling step");
    }
    return out;
}

cvec random_window(std::mt19937_64& rng, int L) {
    std::normal_distribution<double> normal;
    cvec w(L);
    for (int t = 0; t < L; ++t) {
        const double re = normal(rng);
        const double im = normal(rng);
        w(t) = cplx(re, im);
    }
    return w / w.norm();
}

std::vector<int> divisors(int L) {
    std::vector<int> out;
    for (int d = 1; d <= L; ++d) {
        if (L % d == 0) out.push_back(d);
    }
    return out;
}

}  // namespace

void GaborSpec::validate() const {
    if (L <= 0) throw DomainError("GaborSpec: L must be positive");
    if (a <= 0 || b <= 0) throw DomainError("GaborSpec: a and b must be positive");
    if (L % a != 0) throw DomainError("GaborSpec: a=" + std::to_string(a) + " does not divide L=" + std::to_string(L));
    if (L % b != 0) throw DomainError("GaborSpec: b=" + std::to_string(b) + " does not divide L=" + std::to_string(L));
    if (window.size() != L) {
        throw DimensionError("GaborSpec: window has length " + std::to_string(window.size()) +
                             ", expected " + std::to_string(L));
    }
}

VectorSystem finite_gabor_system(const GaborSpec& spec) {
    spec.validate();
    const int nt = spec.time_count();
    const int nf = spec.freq_count();
    cmat cols(spec.L, static_cast<Eigen::Index>(spec.system_size()));
    Eigen::Index col = 0;
    for (int n = 0; n < nt; ++n) {
        for (int m = 0; m < nf; ++m) {
            for (int t = 0; t < spec.L; ++t) {
                const long long src = pos_mod(static_cast<long long>(t) - static_cast<long long>(n) * spec.a, spec.L);
                cols(t, col) = phase(static_cast<long long>(m) * spec.b * t, spec.L) * spec.window(src);
            }
            ++col;
        }
    }
    return VectorSystem::from_columns(
        cols, "gabor L=" + std::to_string(spec.L) + " a=" + std::to_string(spec.a) + " b=" + std::to_string(spec.b));
}

GaborSpec adjoint_spec(const GaborSpec& spec) {
    spec.validate();
    GaborSpec adj;
    adj.L = spec.L;
    adj.a = spec.L / spec.b;
    adj.b = spec.L / spec.a;
    adj.window = spec.window * std::sqrt(static_cast<double>(spec.L) / (static_cast<double>(spec.a) * spec.b));
    return adj;
}

AnalysisReport duality_principle_check(const GaborSpec& spec, double rtol) {
    const FrameBounds frame = frame_bounds(finite_gabor_system(spec));
    const FrameBounds riesz = riesz_bounds(finite_gabor_system(adjoint_spec(spec)));
    AnalysisReport r = AnalysisReport::from_residuals(bound_agreement(frame, riesz), rtol,
                                                      "frame bounds of (a,b) vs Riesz bounds of (L/b,L/a)");
    r.with_metric("frame_lower", frame.lower)
        .with_metric("frame_upper", frame.upper)
        .with_metric("adjoint_riesz_lower", riesz.lower)
        .with_metric("adjoint_riesz_upper", riesz.upper);
    return r;
}

AnalysisReport wexler_raz_check(const GaborSpec& g, const GaborSpec& h, double tolerance) {
    require_same_lattice(g, h, "wexler_raz_check");
    const AnalysisReport dual = duality_check(finite_gabor_system(g), finite_gabor_system(h), tolerance);
    const double bio = biorthogonality_residual(
        cross_gram(finite_gabor_system(adjoint_spec(g)), finite_gabor_system(adjoint_spec(h))));
    const bool dual_ok = dual.passed();
    const bool bio_ok = bio <= tolerance;

    AnalysisReport r;
    r.tolerance_used = tolerance;
    r.verdict = dual_ok == bio_ok ? Verdict::pass : Verdict::fail;
    r.metrics = {{"duality", dual.residuals.at("duality")},
                 {"biorthogonality", bio},
                 {"dual_frames", dual_ok ? 1.0 : 0.0},
                 {"biorthogonal", bio_ok ? 1.0 : 0.0}};
    r.notes = std::string("verdicts ") + (dual_ok == bio_ok ? "agree" : "disagree") + ": windows " +
              (dual_ok ? "generate" : "do not generate") + " dual frames; adjoint systems " +
              (bio_ok ? "are" : "are not") + " biorthogonal";
    return r;
}

cvec canonical_dual_window(const GaborSpec& spec, double tolerance) {
    return inverse_frame_operator(finite_gabor_system(spec), BoundsMode::full_space, tolerance) * spec.window;
}

AnalysisReport frame_operator_commutation_check(const GaborSpec& spec, std::optional<Lattice> probe,
                                                double tolerance) {
    const VectorSystem sys = finite_gabor_system(spec);
    const cmat sinv = inverse_frame_operator(sys, BoundsMode::full_space, tolerance);
    const Lattice lat = probe.value_or(Lattice{spec.a, spec.b});
    if (lat.a <= 0 || lat.b <= 0 || spec.L % lat.a != 0 || spec.L % lat.b != 0) {
        throw DomainError("frame_operator_commutation_check: probe lattice must divide L");
    }
    const long long L = spec.L;
    double worst = 0.0;
    for (long long n = 0; n < L / lat.a; ++n) {
        const long long shift = n * lat.a;
        for (long long m = 0; m < L / lat.b; ++m) {
            double sq = 0.0;
            for (long long t = 0; t < L; ++t) {
                const cplx row_phase = phase(m * lat.b * t, L);
                for (long long s = 0; s < L; ++s) {
                    const long long u = pos_mod(s + shift, L);
                    const cplx left = sinv(t, u) * phase(m * lat.b * u, L);
                    const cplx right = row_phase * sinv(pos_mod(t - shift, L), s);
                    sq += std::norm(left - right);
                }
            }
            worst = std::max(worst, std::sqrt(sq));
        }
    }

    GaborSpec dual_spec = spec;
    dual_spec.window = sinv * spec.window;
    const cmat diff = canonical_dual(sys, BoundsMode::full_space, tolerance).synthesis_matrix() -
                      finite_gabor_system(dual_spec).synthesis_matrix();
    AnalysisReport r = AnalysisReport::from_residuals(
        {{"commutator", worst}}, tolerance,
        probe ? "shifts taken from probe lattice a=" + std::to_string(lat.a) + " b=" + std::to_string(lat.b)
              : "shifts taken from the system lattice");
    r.with_metric("dual_structure", diff.cwiseAbs().maxCoeff());
    return r;
}

AnalysisReport ron_shen_duality_check(const SampledWindow& g, const SampledWindow& h, double a, double b,
                                      double tolerance) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("ron_shen_duality_check: a and b must be positive");
    check_common_step(g, h, "ron_shen_duality_check");
    const double step = g.step();
    const long long A = integral_or_throw(a, step, "a");
    const long long P = integral_or_throw(1.0 / b, step, "1/b");
    const long long h0 = h.origin_index();
    const long long hn = static_cast<long long>(h.size());

    const double lo = std::min(g.support().lo, h.support().lo);
    const double hi = std::max(g.support().hi, h.support().hi);
    const auto n_max = static_cast<long long>(std::ceil((hi - lo) * b));

    double worst = 0.0;
    long long worst_n = 0;
    for (long long n = -n_max; n <= n_max; ++n) {
        const double target = n == 0 ? b : 0.0;
        for (long long i = 0; i < A; ++i) {
            // h(x - k a) is nonzero only for h0 <= i - kA < h0 + hn
            const long long k_lo = static_cast<long long>(std::ceil(static_cast<double>(i - (h0 + hn - 1)) / static_cast<double>(A)));
            const long long k_hi = static_cast<long long>(std::floor(static_cast<double>(i - h0) / static_cast<double>(A)));
            cplx sum = 0.0;
            for (long long k = k_lo; k <= k_hi; ++k) {
                const cplx hv = h.at_lattice(i - k * A);
                if (hv == cplx(0.0, 0.0)) continue;
                sum += std::conj(g.at_lattice(i - n * P - k * A)) * hv;
            }
            const double err = std::abs(sum - target);
            if (err > worst) {
                worst = err;
                worst_n = n;
            }
        }
    }
    AnalysisReport r = AnalysisReport::from_residuals({{"ron_shen", worst}}, tolerance);
    r.with_metric("grid_points", static_cast<double>(A))
        .with_metric("n_range", static_cast<double>(n_max))
        .with_metric("worst_n", static_cast<double>(worst_n));
    return r;
}

FiniteExtension gabor_extension_finite(const GaborSpec& g1, const GaborSpec& h1,
                                       std::optional<std::pair<cvec, cvec>> pair, double tolerance) {
    g1.validate();
    h1.validate();
    require_same_lattice(g1, h1, "gabor_extension");
    if (static_cast<long long>(g1.a) * g1.b > g1.L) {
        throw InfeasibleError("gabor_extension: a*b > L, no dual pair exists on this lattice");
    }
    GaborSpec r1{g1.L, g1.a, g1.b, cvec::Zero(g1.L)};
    GaborSpec r2 = r1;
    if (pair) {
        r1.window = pair->first;
        r2.window = pair->second;
        if (!duality_check(finite_gabor_system(r1), finite_gabor_system(r2), tolerance).passed()) {
            throw PreconditionError("gabor_extension: auxiliary windows are not dual on the lattice");
        }
    } else {
        r1.window.head(g1.a).setOnes();
        r2.window = r1.window * (static_cast<double>(g1.b) / g1.L);
    }
    const VectorSystem sys_g = finite_gabor_system(g1);
    const VectorSystem sys_h = finite_gabor_system(h1);
    const cvec coeffs = analysis(sys_h, r1.window);
    FiniteExtension out;
    out.g2 = r1.window - synthesis(sys_g, coeffs);
    out.h2 = r2.window;

    GaborSpec g2 = g1;
    g2.window = out.g2;
    GaborSpec h2 = h1;
    h2.window = out.h2;
    out.report = duality_check(sys_g.concatenated(finite_gabor_system(g2)),
                               sys_h.concatenated(finite_gabor_system(h2)), tolerance);
    out.report.with_metric("g2_norm", out.g2.norm());
    return out;
}

SampledExtension gabor_extension(const SampledWindow& g1, const SampledWindow& h1, double a, double b,
                                 double tolerance) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("gabor_extension: a and b must be positive");
    check_common_step(g1, h1, "gabor_extension");
    const double step = g1.step();
    const long long A = integral_or_throw(a, step, "a");
    const long long P = integral_or_throw(1.0 / b, step, "1/b");
    if (A > P) throw InfeasibleError("gabor_extension: ab > 1, no dual pair exists on the lattice");

    const long long lo = std::min(g1.origin_index(), h1.origin_index());
    const long long hi = std::max(g1.origin_index() + static_cast<long long>(g1.size()),
                                  h1.origin_index() + static_cast<long long>(h1.size()));
    const long long period = std::lcm(A, P);
    const long long extent = std::max<long long>(hi - lo, 1);
    const long long L = ((extent + period - 1) / period) * period;
    if (L > 1 << 16) throw ModelError("gabor_extension: cyclic realization would need L=" + std::to_string(L));

    auto place = [&](const SampledWindow& w) {
        cvec out = cvec::Zero(L);
        for (std::size_t i = 0; i < w.size(); ++i) {
            out(pos_mod(w.origin_index() + static_cast<long long>(i), L)) += w.samples()[i];
        }
        return out;
    };
    GaborSpec sg{static_cast<int>(L), static_cast<int>(A), static_cast<int>(L / P), place(g1)};
    GaborSpec sh{sg.L, sg.a, sg.b, place(h1)};
    FiniteExtension fin = gabor_extension_finite(sg, sh, std::nullopt, tolerance);

    const Interval support{0.0, static_cast<double>(L - 1) * step};
    std::vector<cplx> g2(fin.g2.data(), fin.g2.data() + L);
    std::vector<cplx> h2(fin.h2.data(), fin.h2.data() + L);
    SampledExtension out{SampledWindow(0.0, step, std::move(g2), support),
                         SampledWindow(0.0, step, std::move(h2), support), sg, fin.report};
    out.report.notes = "solved on the cyclic group Z_" + std::to_string(L) + " with a=" + std::to_string(sg.a) +
                       ", b=" + std::to_string(sg.b) + "; windows are one period";
    return out;
}

namespace {

AnalysisReport hrt_core(const std::function<cplx(double)>& g, Interval support,
                        const std::vector<TFPoint>& points, const HrtOptions& options) {
    if (points.empty()) throw DomainError("hrt_independence: no points");
    if (!(options.step > 0.0)) throw DomainError("hrt_independence: step must be positive");
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].lambda == points[j].lambda && points[i].mu == points[j].mu) {
                throw PreconditionError("hrt_independence: duplicate time-frequency point");
            }
        }
    }
    double mu_lo = points[0].mu;
    double mu_hi = points[0].mu;
    for (const TFPoint& p : points) {
        mu_lo = std::min(mu_lo, p.mu);
        mu_hi = std::max(mu_hi, p.mu);
    }
    const auto first = static_cast<long long>(std::floor((mu_lo + support.lo) / options.step));
    const auto last = static_cast<long long>(std::ceil((mu_hi + support.hi) / options.step));
    const Eigen::Index rows = last - first + 1;
    const auto cols = static_cast<Eigen::Index>(points.size());
    cmat m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        const TFPoint& p = points[static_cast<std::size_t>(c)];
        for (Eigen::Index r = 0; r < rows; ++r) {
            const double x = static_cast<double>(first + r) * options.step;
            const double angle = 2.0 * kPi * p.lambda * x;
            m(r, c) = cplx(std::cos(angle), std::sin(angle)) * g(x - p.mu);
        }
        const double nrm = m.col(c).norm();
        if (!(nrm > 0.0)) throw PreconditionError("hrt_independence: window vanishes on the grid");
        m.col(c) /= nrm;
    }
    const Eigen::JacobiSVD<cmat> svd(m);
    const rvec sv = svd.singularValues();
    const double sigma_min = sv(sv.size() - 1);
    const double tol = options.tolerance.value_or(1e-8 * std::sqrt(static_cast<double>(points.size())));

    AnalysisReport r;
    r.tolerance_used = tol;
    r.verdict = sigma_min > tol ? Verdict::pass : Verdict::fail;
    r.metrics = {{"sigma_min", sigma_min},
                 {"sigma_max", sv(0)},
                 {"grid_points", static_cast<double>(rows)},
                 {"step", options.step}};
    r.notes = std::string(sigma_min > tol ? "numerically independent" : "numerically dependent at this tolerance") +
              "; numerical evidence only, a small sigma_min does not prove dependence";
    return r;
}

}  // namespace

AnalysisReport hrt_independence(const AnalyticWindow& g, const std::vector<TFPoint>& points,
                                const HrtOptions& options) {
    return hrt_core(std::cref(g), g.support, points, options);
}

AnalysisReport hrt_independence(const SampledWindow& g, const std::vector<TFPoint>& points,
                                const HrtOptions& options) {
    if (g.is_zero()) throw PreconditionError("hrt_independence: zero window");
    return hrt_core([&g](double x) { return g.interpolate(x); }, g.support(), points, options);
}

std::vector<SweepRow> duality_sweep(int L_min, int L_max, int windows_per_lattice, std::uint64_t seed,
                                    Execution exec) {
    if (L_min < 1 || L_max < L_min || windows_per_lattice < 1) {
        throw DomainError("duality_sweep: need 1 <= L_min <= L_max and a positive window count");
    }
    std::mt19937_64 rng(seed);
    std::vector<GaborSpec> tasks;
    for (int L = L_min; L <= L_max; ++L) {
        const std::vector<int> divs = divisors(L);
        for (const int a : divs) {
            for (const int b : divs) {
                for (int w = 0; w < windows_per_lattice; ++w) tasks.push_back({L, a, b, random_window(rng, L)});
            }
        }
    }
    return map_indices<SweepRow>(tasks.size(), exec, [&](std::size_t i) {
        const GaborSpec& s = tasks[i];
        const AnalysisReport r = duality_principle_check(s);
        return SweepRow{s.L,
                        s.a,
                        s.b,
                        r.metrics.at("frame_lower"),
                        r.metrics.at("frame_upper"),
                        r.metrics.at("adjoint_riesz_lower"),
                        r.metrics.at("adjoint_riesz_upper"),
                        max_residual(r)};
    });
}

}  // namespace framelab::gabor
