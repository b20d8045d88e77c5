#include "framelab/dilation.hpp"

#include "framelab/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace framelab::dilation {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

void WavePacketGrid::validate() const {
    if (a_values.empty()) throw DomainError("WavePacketGrid: a_values must be nonempty");
    for (const double a : a_values) {
        if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("WavePacketGrid: a_j must be positive");
    }
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("WavePacketGrid: b must be positive");
    for (const double c : c_values) {
        if (!std::isfinite(c)) throw DomainError("WavePacketGrid: c_m must be finite");
    }
}

namespace {

struct PointSums {
    double total = 0.0;  // sum over all k
    double diag = 0.0;   // k = 0 term, |g^|^2
    double off = 0.0;    // k != 0 terms
};

// Indices of sorted c with c in [lo, hi].
std::pair<std::size_t, std::size_t> c_window(const std::vector<double>& sorted_c, double lo, double hi) {
    const auto first = std::lower_bound(sorted_c.begin(), sorted_c.end(), lo);
    const auto last = std::upper_bound(sorted_c.begin(), sorted_c.end(), hi);
    return {static_cast<std::size_t>(first - sorted_c.begin()), static_cast<std::size_t>(last - sorted_c.begin())};
}

PointSums point_sums(const FreqFunction& g, const std::vector<double>& a_values, const std::vector<double>& sorted_c,
                     double b, double gamma) {
    PointSums s;
    const Interval h = g.band().hull();
    for (const double a : a_values) {
        const double x = gamma / a;
        const auto [m0, m1] = c_window(sorted_c, x - h.hi, x - h.lo);
        for (std::size_t mi = m0; mi < m1; ++mi) {
            const double u = x - sorted_c[mi];
            const double gu = std::abs(g(u));
            if (gu == 0.0) continue;
            const auto k_lo = static_cast<long long>(std::floor(b * (u - h.hi))) - 1;
            const auto k_hi = static_cast<long long>(std::ceil(b * (u - h.lo))) + 1;
            for (long long k = k_lo; k <= k_hi; ++k) {
                const double t = k == 0 ? gu * gu : gu * std::abs(g(u - static_cast<double>(k) / b));
                s.total += t;
                if (k == 0) {
                    s.diag += t;
                } else {
                    s.off += t;
                }
            }
        }
    }
    return s;
}

struct GridExtremes {
    double sup_total = 0.0;
    double inf_lower = std::numeric_limits<double>::infinity();
};

GridExtremes scan(const FreqFunction& g, const std::vector<double>& a_values, std::vector<double> c_values,
                  double b, Interval range, std::size_t points, Execution exec) {
    std::sort(c_values.begin(), c_values.end());
    const double step = range.length() / static_cast<double>(points);
    const auto sums = map_indices<PointSums>(points, exec, [&](std::size_t i) {
        return point_sums(g, a_values, c_values, b, range.lo + static_cast<double>(i) * step);
    });
    GridExtremes e;
    for (const PointSums& s : sums) {
        e.sup_total = std::max(e.sup_total, s.total / b);
        e.inf_lower = std::min(e.inf_lower, (s.diag - s.off) / b);
    }
    if (sums.empty()) e.inf_lower = 0.0;
    return e;
}

Interval default_range(const FreqFunction& g, const WavePacketGrid& grid) {
    const Interval h = g.band().hull();
    Interval out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const double a : grid.a_values) {
        for (const double c : grid.c_values) {
            out.lo = std::min(out.lo, a * (h.lo + c));
            out.hi = std::max(out.hi, a * (h.hi + c));
        }
    }
    return out;
}

GridExtremes refined_scan(const FreqFunction& g, const WavePacketGrid& grid, Interval range,
                          const GridOptions& options, double& delta) {
    const GridExtremes coarse = scan(g, grid.a_values, grid.c_values, grid.b, range, options.grid_points, options.exec);
    delta = 0.0;
    if (!options.refine) return coarse;
    const GridExtremes fine = scan(g, grid.a_values, grid.c_values, grid.b, range, 2 * options.grid_points, options.exec);
    delta = std::max(std::abs(fine.sup_total - coarse.sup_total), std::abs(fine.inf_lower - coarse.inf_lower));
    return {std::max(coarse.sup_total, fine.sup_total), std::min(coarse.inf_lower, fine.inf_lower)};
}

WavePacketGrid inner_shell(const WavePacketGrid& grid) {
    WavePacketGrid in = grid;
    in.a_values.clear();
    if (grid.a_values.size() > 2) in.a_values.assign(grid.a_values.begin() + 1, grid.a_values.end() - 1);
    std::vector<double> c = grid.c_values;
    std::sort(c.begin(), c.end());
    in.c_values.clear();
    if (c.size() > 2) in.c_values.assign(c.begin() + 1, c.end() - 1);
    return in;
}

struct Prepared {
    bool trivial = false;  // zero generator or no translates
    Interval range{0.0, 0.0};
};

Prepared prepare(const FreqFunction& g, const WavePacketGrid& grid, const WavePacketOptions& options) {
    grid.validate();
    if (options.grid_points < 1) throw DomainError("wave packet: need at least one grid point");
    Prepared p;
    p.trivial = g.is_zero() || grid.c_values.empty();
    if (options.gamma_range) {
        p.range = *options.gamma_range;
        if (!(p.range.hi > p.range.lo)) throw DomainError("wave packet: empty gamma range");
    } else if (!p.trivial) {
        p.range = default_range(g, grid);
    }
    return p;
}

}  // namespace

BesselBound wave_packet_bessel_bound(const FreqFunction& g_hat, const WavePacketGrid& grid,
                                     const WavePacketOptions& options) {
    const Prepared p = prepare(g_hat, grid, options);
    BesselBound out;
    if (p.trivial) {
        out.bound = 0.0;
        out.report.verdict = Verdict::pass;
        out.report.metrics = {{"B", 0.0}, {"tail_estimate", 0.0}};
        out.report.notes = "zero generator or no modulation parameters";
        return out;
    }
    double delta = 0.0;
    const GridExtremes e = refined_scan(g_hat, grid, p.range, options, delta);
    const WavePacketGrid in = inner_shell(grid);
    double inner_b = 0.0;
    if (!in.a_values.empty() && !in.c_values.empty()) {
        inner_b = scan(g_hat, in.a_values, in.c_values, in.b, p.range, options.grid_points, options.exec).sup_total;
    }
    out.tail_estimate = e.sup_total - inner_b;
    out.diverged = !(e.sup_total <= options.ceiling);
    if (!out.diverged) out.bound = e.sup_total;
    out.report.tolerance_used = options.ceiling;
    out.report.verdict = out.diverged ? Verdict::fail : Verdict::pass;
    out.report.metrics = {{"B", e.sup_total},
                          {"tail_estimate", out.tail_estimate},
                          {"refinement_delta", delta},
                          {"gamma_lo", p.range.lo},
                          {"gamma_hi", p.range.hi}};
    out.report.notes = out.diverged ? "unbounded: partial sums exceed the ceiling, Bessel property violated"
                                    : "sup over a uniform grid of the truncated sums";
    return out;
}

WavePacketFrameBounds wave_packet_frame_bounds(const FreqFunction& g_hat, const WavePacketGrid& grid,
                                               const WavePacketOptions& options) {
    const Prepared p = prepare(g_hat, grid, options);
    WavePacketFrameBounds out;
    if (p.trivial) {
        out.report.verdict = Verdict::undecided;
        out.report.notes = "sufficient condition inconclusive: zero generator";
        return out;
    }
    double delta = 0.0;
    const GridExtremes e = refined_scan(g_hat, grid, p.range, options, delta);
    out.raw_lower = e.inf_lower;
    const bool bounded = e.sup_total <= options.ceiling;
    out.bounds = {std::max(e.inf_lower, 0.0), e.sup_total};
    out.certified = bounded && e.inf_lower > 0.0;
    out.report.tolerance_used = 0.0;
    out.report.verdict = out.certified ? Verdict::pass : (bounded ? Verdict::undecided : Verdict::fail);
    out.report.metrics = {{"A", e.inf_lower}, {"B", e.sup_total}, {"refinement_delta", delta},
                          {"gamma_lo", p.range.lo}, {"gamma_hi", p.range.hi}};
    if (!bounded) {
        out.report.notes = "unbounded: Bessel sums exceed the ceiling";
    } else if (!out.certified) {
        out.report.notes = "sufficient condition inconclusive (A <= 0); this does not show the system fails to be a frame";
    } else {
        out.report.notes = "frame with bounds A and B on the sampled range";
    }
    return out;
}

namespace {

struct RationalDilation {
    cpp_int num;
    cpp_int den;
};

std::optional<RationalDilation> rational_approx(double x) {
    // continued fractions, denominators up to 1e6
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int it = 0; it < 40; ++it) {
        const double fl = std::floor(r);
        const auto q = static_cast<long long>(fl);
        const long long h2 = q * h1 + h0;
        const long long k2 = q * k1 + k0;
        if (k2 > 1'000'000) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - x) <= 1e-12 * std::abs(x)) {
            return RationalDilation{cpp_int(h1), cpp_int(k1)};
        }
        const double frac = r - fl;
        if (frac < 1e-15) break;
        r = 1.0 / frac;
    }
    return std::nullopt;
}

cpp_rational rational_power(const RationalDilation& a, int j) {
    const unsigned e = static_cast<unsigned>(std::abs(j));
    const cpp_int n = boost::multiprecision::pow(a.num, e);
    const cpp_int d = boost::multiprecision::pow(a.den, e);
    return j >= 0 ? cpp_rational(n, d) : cpp_rational(d, n);
}

struct DualityPoint {
    double c1 = 0.0;
    std::map<cpp_rational, cplx> alpha_sums;  // alpha != 0, keyed by a^j n
};

struct DualityContext {
    const FreqFunction* psi;
    const FreqFunction* psit;
    double a;
    double b;
    std::vector<double> sorted_c;
    double near;  // distance of the shifted bands from 0
    double far;   // largest |gamma| of the shifted bands
    std::optional<RationalDilation> ra;
};

DualityPoint duality_point(const DualityContext& ctx, double gamma, bool full) {
    DualityPoint out;
    cplx diag = 0.0;
    if (!ctx.psi->is_zero() && !ctx.sorted_c.empty() && gamma != 0.0) {
        const Interval h1 = ctx.psi->band().hull();
        const Interval h2 = ctx.psit->is_zero() ? Interval{0.0, 0.0} : ctx.psit->band().hull();
        const double la = std::log(ctx.a);
        const double ag = std::abs(gamma);
        const int j_lo = static_cast<int>(std::floor(std::log(ag / ctx.far) / la)) - 1;
        const int j_hi = static_cast<int>(std::ceil(std::log(ag / ctx.near) / la)) + 1;
        for (int j = j_lo; j <= j_hi; ++j) {
            const double x = gamma * std::pow(ctx.a, -j);
            const auto [m0, m1] = c_window(ctx.sorted_c, x - h1.hi, x - h1.lo);
            std::optional<cpp_rational> aj;
            for (std::size_t mi = m0; mi < m1; ++mi) {
                const double u = x - ctx.sorted_c[mi];
                const cplx p = (*ctx.psi)(u);
                if (p == cplx(0.0, 0.0)) continue;
                diag += p * std::conj((*ctx.psit)(u));
                if (!full || ctx.psit->is_zero()) continue;
                const auto n_lo = static_cast<long long>(std::floor(ctx.b * (h2.lo - u))) - 1;
                const auto n_hi = static_cast<long long>(std::ceil(ctx.b * (h2.hi - u))) + 1;
                for (long long n = n_lo; n <= n_hi; ++n) {
                    if (n == 0) continue;
                    const cplx t = p * std::conj((*ctx.psit)(u + static_cast<double>(n) / ctx.b));
                    if (t == cplx(0.0, 0.0)) continue;
                    if (!aj) aj = rational_power(*ctx.ra, j);
                    out.alpha_sums[*aj * n] += t;
                }
            }
        }
    }
    out.c1 = std::abs(diag - ctx.b);
    return out;
}

struct DualityGrid {
    double c1 = 0.0;
    double g1 = 0.0;
    std::size_t alpha_count = 0;
};

DualityGrid duality_grid(const DualityContext& ctx, Interval range, std::size_t points, bool full, Execution exec) {
    const double step = range.length() / static_cast<double>(points);
    const auto per_point = map_indices<DualityPoint>(points, exec, [&](std::size_t i) {
        return duality_point(ctx, range.lo + static_cast<double>(i) * step, full);
    });
    DualityGrid out;
    std::map<cpp_rational, double> worst;
    for (std::size_t i = 0; i < points; ++i) {
        if (range.lo + static_cast<double>(i) * step == 0.0) continue;
        out.c1 = std::max(out.c1, per_point[i].c1);
        for (const auto& [alpha, s] : per_point[i].alpha_sums) {
            double& w = worst[alpha];
            w = std::max(w, std::abs(s));
        }
    }
    for (const auto& [alpha, w] : worst) out.g1 = std::max(out.g1, w);
    out.alpha_count = worst.size();
    return out;
}

double condition_c2(const FreqFunction& psi, const FreqFunction& psit, double b, std::size_t points) {
    if (psi.is_zero() || psit.is_zero()) return 0.0;
    const Interval h1 = psi.band().hull();
    const Interval h2 = psit.band().hull();
    const auto k_lo = static_cast<long long>(std::floor(b * (h2.lo - h1.hi))) - 1;
    const auto k_hi = static_cast<long long>(std::ceil(b * (h2.hi - h1.lo))) + 1;
    const double step = h1.length() / static_cast<double>(std::max<std::size_t>(points, 1));
    double worst = 0.0;
    for (long long k = k_lo; k <= k_hi; ++k) {
        if (k == 0) continue;
        const double q = static_cast<double>(k) / b;
        for (std::size_t i = 0; i <= points; ++i) {
            const double g = h1.lo + static_cast<double>(i) * step;
            worst = std::max(worst, std::abs(psi(g) * std::conj(psit(g + q))));
        }
    }
    return worst;
}

}  // namespace

AnalysisReport wave_packet_duality_check(const FreqFunction& psi_hat, const FreqFunction& psi_tilde_hat, double a,
                                         double b, const std::vector<double>& c_values, double tolerance,
                                         const WavePacketDualityOptions& options) {
    if (!(a > 1.0) || !std::isfinite(a)) throw DomainError("wave_packet_duality_check: a must exceed 1");
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("wave_packet_duality_check: b must be positive");
    if (options.grid_points < 2) throw DomainError("wave_packet_duality_check: need at least two grid points");

    DualityContext ctx{&psi_hat, &psi_tilde_hat, a, b, c_values, std::numeric_limits<double>::infinity(), 0.0, {}};
    std::sort(ctx.sorted_c.begin(), ctx.sorted_c.end());
    if (!psi_hat.is_zero()) {
        for (const double c : ctx.sorted_c) {
            const Band shifted = psi_hat.band().shifted(c);
            const double d = shifted.distance_from_zero();
            if (!(d > 0.0)) {
                throw TruncationError("wave_packet_duality_check: band shifted by c=" + std::to_string(c) +
                                      " touches 0, the dilation sum is infinite");
            }
            const Interval h = shifted.hull();
            ctx.near = std::min(ctx.near, d);
            ctx.far = std::max({ctx.far, std::abs(h.lo), std::abs(h.hi)});
        }
    }
    bool full = options.full_check;
    std::string notes = "sup over a uniform grid";
    if (full) {
        ctx.ra = rational_approx(a);
        if (!ctx.ra) {
            full = false;
            notes += "; full alpha check skipped, a is not a small rational";
        }
    }
    Interval range = options.gamma_range.value_or(Interval{-ctx.far, ctx.far});
    if (!(range.hi > range.lo)) range = {-1.0, 1.0};

    const DualityGrid coarse = duality_grid(ctx, range, options.grid_points, full, options.exec);
    DualityGrid fine = coarse;
    if (options.refine) fine = duality_grid(ctx, range, 2 * options.grid_points, full, options.exec);
    const double c2 = std::max(condition_c2(psi_hat, psi_tilde_hat, b, options.grid_points),
                               options.refine ? condition_c2(psi_hat, psi_tilde_hat, b, 2 * options.grid_points) : 0.0);

    std::map<std::string, double> residuals{{"c1", std::max(coarse.c1, fine.c1)}, {"c2", c2}};
    if (full) residuals["g1"] = std::max({coarse.c1, fine.c1, coarse.g1, fine.g1});
    AnalysisReport r = AnalysisReport::from_residuals(residuals, tolerance, notes);
    const bool sufficient = residuals["c1"] <= tolerance && c2 <= tolerance;
    r.with_metric("sufficient_conditions", sufficient ? 1.0 : 0.0)
        .with_metric("alpha_count", static_cast<double>(std::max(coarse.alpha_count, fine.alpha_count)))
        .with_metric("refinement_delta", std::abs(fine.c1 - coarse.c1));
    return r;
}

LicResult lic_estimate(const FreqFunction& psi_hat, double a, double b, const std::vector<double>& c_values,
                       const FreqFunction& f_hat, int j_min, int j_max, std::size_t quadrature_points) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("lic_estimate: a and b must be positive");
    if (j_min > j_max) throw DomainError("lic_estimate: empty dilation range");
    if (quadrature_points == 0) throw DomainError("lic_estimate: need quadrature points");
    LicResult out;
    out.report.tolerance_used = 0.0;
    if (psi_hat.is_zero() || f_hat.is_zero() || c_values.empty()) {
        out.report.verdict = Verdict::pass;
        out.report.metrics = {{"L", 0.0}, {"last_shell", 0.0}};
        out.report.notes = "empty integrand";
        for (int j = j_min; j <= j_max; ++j) out.trace.emplace_back(j, 0.0);
        return out;
    }
    std::vector<double> sorted_c = c_values;
    std::sort(sorted_c.begin(), sorted_c.end());
    const Interval hf = f_hat.band().hull();
    const Interval hp = psi_hat.band().hull();
    const double dg = hf.length() / static_cast<double>(quadrature_points);

    // shells ordered by |j|
    std::vector<int> order;
    for (int j = j_min; j <= j_max; ++j) order.push_back(j);
    std::stable_sort(order.begin(), order.end(), [](int x, int y) { return std::abs(x) < std::abs(y); });

    double total = 0.0;
    double last_shell = 0.0;
    for (const int j : order) {
        const double aj = std::pow(a, j);
        double shell = 0.0;
        for (std::size_t i = 0; i < quadrature_points; ++i) {
            const double g = hf.lo + (static_cast<double>(i) + 0.5) * dg;
            const double x = g / aj;
            const auto [m0, m1] = c_window(sorted_c, x - hp.hi, x - hp.lo);
            double psi_part = 0.0;
            for (std::size_t mi = m0; mi < m1; ++mi) psi_part += std::norm(psi_hat(x - sorted_c[mi]));
            if (psi_part == 0.0) continue;
            const double shift = aj / b;
            const auto n_lo = static_cast<long long>(std::floor((hf.lo - g) / shift)) - 1;
            const auto n_hi = static_cast<long long>(std::ceil((hf.hi - g) / shift)) + 1;
            double f_part = 0.0;
            for (long long n = n_lo; n <= n_hi; ++n) f_part += std::norm(f_hat(g + static_cast<double>(n) * shift));
            shell += f_part * psi_part * dg;
        }
        total += shell;
        last_shell = shell;
        out.trace.emplace_back(j, total);
    }
    out.value = total;
    const bool settled = last_shell <= 1e-12 * std::max(1.0, total);
    out.report.verdict = std::isfinite(total) ? (settled ? Verdict::pass : Verdict::undecided) : Verdict::fail;
    out.report.metrics = {{"L", total}, {"last_shell", last_shell}, {"j_min", j_min}, {"j_max", j_max}};
    out.report.notes = settled ? "outermost dilation shell contributes nothing; truncated value is the full sum"
                               : "outermost dilation shell still contributes; finiteness not settled";
    return out;
}

BesselProbe wave_packet_bessel_probe(const FreqFunction& g_hat, const std::function<double(long long)>& dilation,
                                     double b, double r, const BesselProbeOptions& options) {
    if (!(b > 0.0) || !(r > 0.0)) throw DomainError("wave_packet_bessel_probe: b and r must be positive");
    if (options.probe_gammas.empty()) throw DomainError("wave_packet_bessel_probe: no probe frequencies");
    BesselProbe out;
    out.report.tolerance_used = options.ceiling;
    if (g_hat.is_zero()) {
        out.report.verdict = Verdict::pass;
        out.report.notes = "zero generator";
        return out;
    }
    const Interval h = g_hat.band().hull();
    std::vector<double> partial(options.probe_gammas.size(), 0.0);
    double previous = 0.0;
    long long next_trace = 1;
    for (long long j = 0; j < options.max_terms; ++j) {
        const double a = dilation(j);
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw DomainError("wave_packet_bessel_probe: dilation " + std::to_string(j) + " is not positive");
        }
        double best = 0.0;
        for (std::size_t p = 0; p < partial.size(); ++p) {
            const double x = options.probe_gammas[p] / a;
            // u runs over (x - r Z) intersected with the band hull
            double u = x - r * std::floor((x - h.lo) / r);
            for (; u <= h.hi; u += r) {
                const double gu = std::abs(g_hat(u));
                if (gu == 0.0) continue;
                const auto k_lo = static_cast<long long>(std::floor(b * (u - h.hi))) - 1;
                const auto k_hi = static_cast<long long>(std::ceil(b * (u - h.lo))) + 1;
                double s = 0.0;
                for (long long k = k_lo; k <= k_hi; ++k) s += gu * std::abs(g_hat(u - static_cast<double>(k) / b));
                partial[p] += s / b;
            }
            best = std::max(best, partial[p]);
        }
        if (!(best >= previous)) out.monotone = false;
        previous = best;
        if (j + 1 == next_trace) {
            out.trace.emplace_back(j + 1, best);
            next_trace *= 2;
        }
        if (best > options.ceiling) {
            out.exceeded = true;
            out.terms_to_exceed = j + 1;
            out.trace.emplace_back(j + 1, best);
            break;
        }
    }
    out.final_partial = previous;
    out.report.verdict = out.exceeded ? Verdict::fail : Verdict::undecided;
    out.report.metrics = {{"final_partial", previous},
                          {"terms_to_exceed", static_cast<double>(out.terms_to_exceed)},
                          {"monotone", out.monotone ? 1.0 : 0.0}};
    out.report.notes = out.exceeded ? "partial Bessel sums exceed the ceiling: no Bessel bound exists"
                                    : "ceiling not reached within the term budget";
    return out;
}

}  // namespace framelab::dilation
