// framelab: command-line front end for the frame analysis library.

#include "framelab/bspline.hpp"
#include "framelab/dilation.hpp"
#include "framelab/errors.hpp"
#include "framelab/exponentials.hpp"
#include "framelab/extension.hpp"
#include "framelab/frame_core.hpp"
#include "framelab/gabor.hpp"
#include "framelab/io.hpp"
#include "framelab/parallel.hpp"
#include "framelab/rdual.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace framelab;
using io::json;

struct Globals {
    double tol = kDefaultTolerance;
    std::uint64_t seed = 0;
    std::string output = "json";
    std::string out_path;
    int jobs = 0;
};

struct Outcome {
    json result = json::object();
    std::optional<AnalysisReport> report;
    std::string csv;  // tabular commands fill this
    Verdict verdict = Verdict::pass;
};

std::string pretty_text(const std::string& command, const Outcome& o) {
    std::ostringstream os;
    os << command << ": " << to_string(o.verdict) << '\n';
    if (o.report) {
        for (const auto& [k, v] : o.report->residuals) os << "  residual " << k << " = " << io::format_number(v) << '\n';
        for (const auto& [k, v] : o.report->metrics) os << "  " << k << " = " << io::format_number(v) << '\n';
        os << "  tolerance = " << io::format_number(o.report->tolerance_used) << '\n';
        if (!o.report->notes.empty()) os << "  note: " << o.report->notes << '\n';
    }
    if (!o.result.empty()) os << o.result.dump(2) << '\n';
    return os.str();
}

std::string flat_csv(const Outcome& o) {
    std::ostringstream os;
    os << "key,value\nverdict," << to_string(o.verdict) << '\n';
    if (o.report) {
        for (const auto& [k, v] : o.report->residuals) os << "residual." << k << ',' << io::format_number(v) << '\n';
        for (const auto& [k, v] : o.report->metrics) os << "metric." << k << ',' << io::format_number(v) << '\n';
        os << "tolerance_used," << io::format_number(o.report->tolerance_used) << '\n';
    }
    for (const auto& [k, v] : o.result.items()) {
        if (v.is_number()) os << k << ',' << io::format_number(v.get<double>()) << '\n';
    }
    return os.str();
}

void emit(const Globals& g, const std::string& command, const Outcome& o) {
    std::string text;
    if (g.output == "json") {
        json doc{{"schema", io::kSchemaVersion}, {"command", command}, {"verdict", to_string(o.verdict)}, {"result", o.result}};
        if (o.report) doc["report"] = io::to_json(*o.report);
        text = doc.dump(2) + "\n";
    } else if (g.output == "csv") {
        text = o.csv.empty() ? flat_csv(o) : o.csv;
    } else {
        text = pretty_text(command, o);
    }
    if (g.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(g.out_path, std::ios::binary);
        if (!out) throw DomainError("cannot write '" + g.out_path + "'");
        out << text;
    }
}

Outcome from_report(AnalysisReport r, json result = json::object()) {
    Outcome o;
    o.verdict = r.verdict;
    o.report = std::move(r);
    o.result = std::move(result);
    return o;
}

VectorSystem load_system(const std::string& path) {
    if (path.size() > 4 && path.substr(path.size() - 4) == ".csv") return io::vector_system_from_csv(io::read_file(path));
    return io::vector_system_from_json(io::read_json_file(path));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw DomainError("bad number '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw DomainError("bad number '" + s + "'");
    }
}

// shannon | zero | indicator:lo:hi | bspline:N | path to FreqFunction JSON
dilation::FreqFunction parse_freq(const std::string& spec) {
    using dilation::Band;
    using dilation::FreqFunction;
    const auto parts = split(spec, ':');
    if (spec == "shannon") return FreqFunction::indicator(Band{{{-1.0, -0.5}, {0.5, 1.0}}});
    if (spec == "zero") return FreqFunction::zero();
    if (parts.size() == 3 && parts[0] == "indicator") {
        return FreqFunction::indicator(Band{{{parse_double(parts[1]), parse_double(parts[2])}}});
    }
    if (parts.size() == 2 && parts[0] == "bspline") {
        const int N = static_cast<int>(parse_double(parts[1]));
        return FreqFunction::from_callable([N](double x) { return cplx(bspline::eval(N, x), 0.0); },
                                           Band{{{0.0, static_cast<double>(N)}}});
    }
    return io::freq_function_from_json(io::read_json_file(spec));
}

// indicator:lo:hi | bspline:N | gaussian | path to SampledWindow JSON
SampledWindow parse_sampled(const std::string& spec, double step) {
    const auto parts = split(spec, ':');
    if (parts.size() == 3 && parts[0] == "indicator") {
        return AnalyticWindow::indicator({parse_double(parts[1]), parse_double(parts[2])}).sample(step);
    }
    if (parts.size() == 2 && parts[0] == "bspline") return bspline::sampled(static_cast<int>(parse_double(parts[1])), step);
    if (spec == "gaussian") return AnalyticWindow::gaussian().sample(step);
    return io::sampled_window_from_json(io::read_json_file(spec));
}

cvec make_window(const std::string& kind, int L, std::mt19937_64& rng) {
    if (L <= 0) throw DomainError("L must be positive");
    cvec w = cvec::Zero(L);
    if (kind == "delta") {
        w(0) = 1.0;
    } else if (kind == "random") {
        std::normal_distribution<double> normal;
        for (int t = 0; t < L; ++t) {
            const double re = normal(rng);
            const double im = normal(rng);
            w(t) = cplx(re, im);
        }
        w /= w.norm();
    } else if (kind == "gaussian") {
        for (int t = 0; t < L; ++t) {
            const double d = std::min(t, L - t);
            w(t) = std::exp(-kPi * d * d / L);
        }
        w /= w.norm();
    } else if (kind.rfind("box", 0) == 0) {
        const auto parts = split(kind, ':');
        const int width = parts.size() == 2 ? static_cast<int>(parse_double(parts[1])) : 1;
        if (width < 1 || width > L) throw DomainError("box width must lie in [1, L]");
        w.head(width).setOnes();
        w /= w.norm();
    } else {
        throw DomainError("unknown window '" + kind + "' (delta, random, gaussian, box[:width])");
    }
    return w;
}

struct SpecArgs {
    std::string spec_path;
    int L = 0;
    int a = 1;
    int b = 1;
    std::string window = "random";
};

void add_spec_options(CLI::App* sub, SpecArgs& s) {
    sub->add_option("--spec", s.spec_path, "GaborSpec JSON {L,a,b,window}");
    sub->add_option("--L", s.L, "cyclic length");
    sub->add_option("--a", s.a, "time step (divides L)");
    sub->add_option("--b", s.b, "frequency step (divides L)");
    sub->add_option("--window", s.window, "delta | random | gaussian | box[:width]");
}

gabor::GaborSpec build_spec(const SpecArgs& s, std::mt19937_64& rng) {
    if (!s.spec_path.empty()) return io::gabor_spec_from_json(io::read_json_file(s.spec_path));
    gabor::GaborSpec spec{s.L, s.a, s.b, make_window(s.window, s.L, rng)};
    spec.validate();
    return spec;
}

std::vector<double> c_values_from(const std::vector<double>& values, const std::vector<double>& range) {
    if (!values.empty()) return values;
    if (range.size() != 3) throw DomainError("give --c-values or --c-range m_min,m_max,spacing");
    std::vector<double> out;
    for (auto m = static_cast<long long>(range[0]); m <= static_cast<long long>(range[1]); ++m) {
        out.push_back(static_cast<double>(m) * range[2]);
    }
    return out;
}

json bounds_json(const FrameBounds& b) { return io::to_json(b); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"framelab: numerical checks for frames, Gabor, wavelet and wave packet systems, B-splines and exponentials"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file with option values");
    Globals g;
    app.add_option("--tol", g.tol, "tolerance for pass/fail")->envname("FRAMELAB_TOLERANCE");
    app.add_option("--seed", g.seed, "seed for random windows and systems");
    app.add_option("--output", g.output, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--out", g.out_path, "write output to this file instead of stdout");
    app.add_option("--jobs", g.jobs, "worker threads for sweeps (0 = all)");

    std::vector<std::pair<CLI::App*, std::function<Outcome()>>> handlers;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Outcome()> fn) {
        CLI::App* sub = parent->add_subcommand(name, help);
        handlers.emplace_back(sub, std::move(fn));
        return sub;
    };
    std::mt19937_64 rng;
    auto seeded = [&]() -> std::mt19937_64& {
        rng.seed(g.seed);
        return rng;
    };

    // frame
    std::string frame_in;
    std::string frame_mode = "full";
    auto* frame_cmd = leaf(&app, "frame",
                           "Optimal frame and Riesz bounds, canonical dual and its reconstruction residual "
                           "(frame reconstruction formula).",
                           [&] {
                               const VectorSystem sys = load_system(frame_in);
                               const BoundsMode mode = frame_mode == "span" ? BoundsMode::span : BoundsMode::full_space;
                               const FrameBounds fb = frame_bounds(sys, mode);
                               json result{{"frame_bounds", bounds_json(fb)}, {"riesz_bounds", bounds_json(riesz_bounds(sys))}};
                               if (!is_frame(fb)) {
                                   AnalysisReport r;
                                   r.verdict = Verdict::fail;
                                   r.tolerance_used = g.tol;
                                   r.notes = "not a frame for the space";
                                   return from_report(r, result);
                               }
                               const VectorSystem dual = canonical_dual(sys, mode, g.tol);
                               result["canonical_dual"] = io::to_json(dual);
                               AnalysisReport r = mode == BoundsMode::span
                                                      ? AnalysisReport::from_residuals({}, g.tol, "span mode")
                                                      : duality_check(sys, dual, g.tol);
                               return from_report(r, result);
                           });
    frame_cmd->add_option("--in", frame_in, "VectorSystem JSON or CSV")->required();
    frame_cmd->add_option("--mode", frame_mode, "full | span")->check(CLI::IsMember({"full", "span"}));

    // rdual
    std::string rdual_in;
    std::string rdual_g;
    auto* rdual_cmd = leaf(&app, "rdual",
                           "R-dual sequence across the standard orthonormal pair; checks that frame bounds of f equal "
                           "Riesz bounds of the R-dual and that the construction is an involution (R-dual theorem).",
                           [&] {
                               const VectorSystem f = load_system(rdual_in);
                               const auto pair = rdual::OrthonormalPair::standard(f.ambient_dim());
                               const VectorSystem omega = rdual::r_dual(f, pair);
                               json result{{"omega", io::to_json(omega)}};
                               if (!rdual_g.empty()) {
                                   const VectorSystem gs = load_system(rdual_g);
                                   return from_report(rdual::verify_dual_pair_biorthogonality(f, gs, pair, g.tol), result);
                               }
                               return from_report(rdual::verify_rdual_theorem(f, pair, g.tol).report, result);
                           });
    rdual_cmd->add_option("--in", rdual_in, "VectorSystem with N vectors in C^N")->required();
    rdual_cmd->add_option("--dual", rdual_g,
                          "second system: check that duality of (f, g) matches biorthogonality of their R-duals");

    // extend
    std::string ext_f, ext_g, ext_a, ext_b;
    bool ext_prune = false;
    auto* ext_cmd = leaf(&app, "extend",
                         "Extends two Bessel sequences to a pair of dual frames (dual-frame extension theorem).",
                         [&] {
                             const VectorSystem f = load_system(ext_f);
                             const VectorSystem gs = load_system(ext_g);
                             std::optional<VectorSystem> a, b;
                             if (!ext_a.empty()) a = load_system(ext_a);
                             if (!ext_b.empty()) b = load_system(ext_b);
                             extension::ExtensionOptions opt{g.tol, ext_prune};
                             const auto ext = extension::extend_to_dual_pair(f, gs, a, b, opt);
                             AnalysisReport r = extension::verify_extension(f, gs, ext.p, ext.q, g.tol);
                             r.with_metric("collapsed", ext.collapsed ? 1.0 : 0.0);
                             return from_report(r, {{"p", io::to_json(ext.p)}, {"q", io::to_json(ext.q)}});
                         });
    ext_cmd->add_option("--f", ext_f, "first Bessel sequence")->required();
    ext_cmd->add_option("--g", ext_g, "second Bessel sequence")->required();
    ext_cmd->add_option("--a", ext_a, "auxiliary dual pair, first half (default: standard basis)");
    ext_cmd->add_option("--b", ext_b, "auxiliary dual pair, second half (default: standard basis)");
    ext_cmd->add_flag("--prune", ext_prune, "drop vanishing p_j with their q_j");

    // gabor
    CLI::App* gabor_cmd = app.add_subcommand("gabor", "Gabor systems on Z_L and on the real line");
    gabor_cmd->require_subcommand(1);
    SpecArgs gb;
    auto* gb_bounds = leaf(gabor_cmd, "bounds", "Frame bounds of the finite Gabor system {M_mb T_na g}.", [&] {
        const gabor::GaborSpec spec = build_spec(gb, seeded());
        const FrameBounds fb = frame_bounds(gabor::finite_gabor_system(spec));
        AnalysisReport r;
        r.tolerance_used = g.tol;
        r.verdict = fb.lower > g.tol ? Verdict::pass : Verdict::fail;
        r.metrics = {{"lower", fb.lower}, {"upper", fb.upper}};
        r.notes = r.passed() ? "frame" : "not a frame";
        return from_report(r, {{"spec", io::to_json(spec)}, {"bounds", bounds_json(fb)}});
    });
    add_spec_options(gb_bounds, gb);

    SpecArgs gd;
    auto* gb_duality = leaf(gabor_cmd, "duality",
                            "Duality principle: frame bounds on the (a,b) lattice equal the Riesz bounds of the "
                            "rescaled system on the adjoint lattice (L/b, L/a).",
                            [&] {
                                const gabor::GaborSpec spec = build_spec(gd, seeded());
                                return from_report(gabor::duality_principle_check(spec, g.tol), {{"spec", io::to_json(spec)}});
                            });
    add_spec_options(gb_duality, gd);

    SpecArgs gw;
    std::string wr_h = "canonical";
    auto* gb_wr = leaf(gabor_cmd, "wexler-raz",
                       "Wexler-Raz biorthogonality relations: two windows give dual frames iff the adjoint-lattice "
                       "systems are biorthogonal.",
                       [&] {
                           std::mt19937_64& r = seeded();
                           const gabor::GaborSpec spec = build_spec(gw, r);
                           gabor::GaborSpec h = spec;
                           if (wr_h == "canonical") {
                               h.window = gabor::canonical_dual_window(spec, g.tol);
                           } else if (wr_h == "random") {
                               h.window = make_window("random", spec.L, r);
                           } else {
                               h = io::gabor_spec_from_json(io::read_json_file(wr_h));
                           }
                           return from_report(gabor::wexler_raz_check(spec, h, g.tol),
                                              {{"g", io::to_json(spec)}, {"h", io::to_json(h)}});
                       });
    add_spec_options(gb_wr, gw);
    gb_wr->add_option("--dual", wr_h, "canonical | random | GaborSpec JSON for the second window");

    SpecArgs gc;
    std::vector<int> probe;
    auto* gb_commute = leaf(gabor_cmd, "commute",
                            "The inverse frame operator commutes with the lattice time-frequency shifts, so the "
                            "canonical dual is the Gabor system of S^{-1} g.",
                            [&] {
                                const gabor::GaborSpec spec = build_spec(gc, seeded());
                                std::optional<gabor::Lattice> lat;
                                if (probe.size() == 2) lat = gabor::Lattice{probe[0], probe[1]};
                                return from_report(gabor::frame_operator_commutation_check(spec, lat, g.tol),
                                                   {{"spec", io::to_json(spec)}});
                            });
    add_spec_options(gb_commute, gc);
    gb_commute->add_option("--probe", probe, "a,b of another lattice (negative control)")->delimiter(',')->expected(2);

    std::string rs_g = "indicator:0:1", rs_h = "indicator:0:1";
    double rs_a = 1.0, rs_b = 1.0, rs_step = 1.0 / 64.0;
    auto* gb_rs = leaf(gabor_cmd, "ron-shen",
                       "Ron-Shen duality conditions for compactly supported windows: "
                       "sum_k conj(g(x - n/b - ka)) h(x - ka) = b delta_{n,0}.",
                       [&] {
                           const SampledWindow gw_ = parse_sampled(rs_g, rs_step);
                           const SampledWindow hw = parse_sampled(rs_h, rs_step);
                           return from_report(gabor::ron_shen_duality_check(gw_, hw, rs_a, rs_b, g.tol));
                       });
    gb_rs->add_option("--g", rs_g, "indicator:lo:hi | bspline:N | gaussian | SampledWindow JSON");
    gb_rs->add_option("--dual", rs_h, "second window, same forms");
    gb_rs->add_option("--a", rs_a, "translation step");
    gb_rs->add_option("--b", rs_b, "modulation step");
    gb_rs->add_option("--step", rs_step, "sampling step for built-in windows");

    std::string ge_g1, ge_h1;
    double ge_a = 1.0, ge_b = 0.5, ge_step = 1.0 / 8.0;
    SpecArgs ge_spec;
    auto* gb_ext = leaf(gabor_cmd, "extend",
                        "Gabor extension theorem: Bessel Gabor systems on a lattice with ab <= 1 extend to dual "
                        "Gabor frames by adding one window each.",
                        [&] {
                            if (ge_g1.empty()) {
                                std::mt19937_64& r = seeded();
                                const gabor::GaborSpec s1 = build_spec(ge_spec, r);
                                gabor::GaborSpec s2 = s1;
                                s2.window = make_window(ge_spec.window, s1.L, r);
                                const auto ext = gabor::gabor_extension_finite(s1, s2, std::nullopt, g.tol);
                                gabor::GaborSpec o1 = s1, o2 = s1;
                                o1.window = ext.g2;
                                o2.window = ext.h2;
                                return from_report(ext.report, {{"g1", io::to_json(s1)},
                                                                {"h1", io::to_json(s2)},
                                                                {"g2", io::to_json(o1)},
                                                                {"h2", io::to_json(o2)}});
                            }
                            const SampledWindow w1 = parse_sampled(ge_g1, ge_step);
                            const SampledWindow w2 = parse_sampled(ge_h1.empty() ? ge_g1 : ge_h1, ge_step);
                            const auto ext = gabor::gabor_extension(w1, w2, ge_a, ge_b, g.tol);
                            return from_report(ext.report, {{"g2", io::to_json(ext.g2)}, {"h2", io::to_json(ext.h2)}});
                        });
    add_spec_options(gb_ext, ge_spec);
    gb_ext->add_option("--g1", ge_g1, "sampled first window (real-line mode)");
    gb_ext->add_option("--h1", ge_h1, "sampled second window (default: same as g1)");
    gb_ext->add_option("--real-a", ge_a, "translation step on the real line");
    gb_ext->add_option("--real-b", ge_b, "modulation step on the real line");
    gb_ext->add_option("--step", ge_step, "sampling step for built-in windows");

    std::string hrt_window = "gaussian";
    std::vector<double> hrt_points;
    bool hrt_special = false;
    double hrt_step = 1.0 / 64.0;
    auto* gb_hrt = leaf(gabor_cmd, "hrt",
                        "Linear independence of finitely many time-frequency shifts (HRT conjecture): smallest "
                        "singular value of the normalized sampled system. Numerical evidence, never a proof.",
                        [&] {
                            std::vector<gabor::TFPoint> pts;
                            if (hrt_special) {
                                pts = {{0, 0}, {0, 1}, {1, 0}, {std::sqrt(2.0), std::sqrt(2.0)}};
                            } else if (!hrt_points.empty()) {
                                if (hrt_points.size() % 2 != 0) throw DomainError("--points needs lambda,mu pairs");
                                for (std::size_t i = 0; i < hrt_points.size(); i += 2) pts.push_back({hrt_points[i], hrt_points[i + 1]});
                            } else {
                                pts = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
                            }
                            gabor::HrtOptions opt;
                            opt.step = hrt_step;
                            if (hrt_window == "gaussian") return from_report(gabor::hrt_independence(AnalyticWindow::gaussian(), pts, opt));
                            return from_report(gabor::hrt_independence(parse_sampled(hrt_window, hrt_step), pts, opt));
                        });
    gb_hrt->add_option("--window", hrt_window, "gaussian | indicator:lo:hi | bspline:N | SampledWindow JSON");
    gb_hrt->add_option("--points", hrt_points, "lambda,mu,lambda,mu,... (default: the 2x2 integer lattice)")->delimiter(',');
    gb_hrt->add_flag("--special", hrt_special, "use g, T_1 g, E_1 g, E_sqrt2 T_sqrt2 g");
    gb_hrt->add_option("--step", hrt_step, "sampling step");

    int sw_lmin = 4, sw_lmax = 12, sw_windows = 3;
    auto* gb_sweep = leaf(gabor_cmd, "sweep",
                          "Duality principle over every divisor lattice of each L in a range, with seeded random windows.",
                          [&] {
                              const auto rows = gabor::duality_sweep(sw_lmin, sw_lmax, sw_windows, g.seed);
                              Outcome o;
                              double worst = 0.0;
                              for (const auto& r : rows) worst = std::max(worst, r.residual);
                              AnalysisReport rep = AnalysisReport::from_residuals({{"max_relative_mismatch", worst}}, g.tol);
                              rep.with_metric("rows", static_cast<double>(rows.size()));
                              o.verdict = rep.verdict;
                              o.report = rep;
                              o.csv = io::sweep_to_csv(rows);
                              json arr = json::array();
                              for (const auto& r : rows) {
                                  arr.push_back({{"L", r.L}, {"a", r.a}, {"b", r.b}, {"lowerA", r.lowerA}, {"upperB", r.upperB},
                                                 {"adjoint_lower", r.adjoint_lower}, {"adjoint_upper", r.adjoint_upper},
                                                 {"residual", r.residual}});
                              }
                              o.result = {{"rows", arr}};
                              return o;
                          });
    gb_sweep->add_option("--L-min", sw_lmin, "smallest L");
    gb_sweep->add_option("--L-max", sw_lmax, "largest L");
    gb_sweep->add_option("--windows", sw_windows, "random windows per lattice");

    // wavelet
    CLI::App* wavelet_cmd = app.add_subcommand("wavelet", "Dyadic wavelet systems");
    wavelet_cmd->require_subcommand(1);
    std::string wv_psi = "shannon", wv_psit = "shannon";
    double wv_b = 1.0;
    std::size_t wv_points = 4096;
    auto* wv_check = leaf(wavelet_cmd, "check-dual",
                          "Characterization of dual dyadic wavelet frames by the two frequency-domain conditions "
                          "(the dilation sum equals b; the alpha-sums vanish).",
                          [&] {
                              dilation::WaveletOptions opt;
                              opt.grid_points = wv_points;
                              return from_report(dilation::wavelet_duality_check(parse_freq(wv_psi), parse_freq(wv_psit), wv_b, g.tol, opt));
                          });
    wv_check->add_option("--psi", wv_psi, "shannon | zero | indicator:lo:hi | FreqFunction JSON");
    wv_check->add_option("--psi-tilde", wv_psit, "second generator, same forms");
    wv_check->add_option("--b", wv_b, "right-hand constant of the dilation condition");
    wv_check->add_option("--points", wv_points, "grid points on [-R, R)");

    // wavepacket
    CLI::App* wp_cmd = app.add_subcommand("wavepacket", "Wave packet systems {D_aj T_kb E_cm g}");
    wp_cmd->require_subcommand(1);
    std::string wp_g = "indicator:0:1";
    std::vector<double> wp_a{1.0}, wp_c, wp_crange;
    double wp_b = 1.0, wp_ceiling = 1e6;
    std::size_t wp_points = 4096;
    auto* wp_bounds = leaf(wp_cmd, "bounds",
                           "Sufficient conditions for Bessel and frame bounds of a wave packet system (the B and A "
                           "formulas of the wave packet frame theorem).",
                           [&] {
                               dilation::WavePacketGrid grid{wp_a, wp_b, c_values_from(wp_c, wp_crange)};
                               dilation::WavePacketOptions opt;
                               opt.grid_points = wp_points;
                               opt.ceiling = wp_ceiling;
                               const auto fn = parse_freq(wp_g);
                               const auto fb = dilation::wave_packet_frame_bounds(fn, grid, opt);
                               const auto bb = dilation::wave_packet_bessel_bound(fn, grid, opt);
                               AnalysisReport r = fb.report;
                               r.with_metric("tail_estimate", bb.tail_estimate);
                               json result{{"A", fb.raw_lower}, {"B", fb.bounds.upper}, {"certified", fb.certified},
                                           {"diverged", bb.diverged}};
                               return from_report(r, result);
                           });
    wp_bounds->add_option("--g", wp_g, "indicator:lo:hi | bspline:N | FreqFunction JSON");
    wp_bounds->add_option("--a-values", wp_a, "dilations a_j")->delimiter(',');
    wp_bounds->add_option("--b", wp_b, "translation step");
    wp_bounds->add_option("--c-values", wp_c, "modulations c_m")->delimiter(',');
    wp_bounds->add_option("--c-range", wp_crange, "m_min,m_max,spacing: c_m = m * spacing")->delimiter(',');
    wp_bounds->add_option("--points", wp_points, "grid points");
    wp_bounds->add_option("--ceiling", wp_ceiling, "divergence ceiling");

    std::string wd_psi = "shannon", wd_psit = "shannon";
    double wd_a = 2.0, wd_b = 1.0;
    std::vector<double> wd_c{0.0}, wd_crange;
    auto* wp_dual = leaf(wp_cmd, "check-dual",
                         "Sufficient conditions for dual wave packet frames (dilation sum equals b, shifted products "
                         "vanish) and the full alpha-indexed characterization.",
                         [&] {
                             return from_report(dilation::wave_packet_duality_check(parse_freq(wd_psi), parse_freq(wd_psit), wd_a, wd_b,
                                                                                    c_values_from(wd_c, wd_crange), g.tol));
                         });
    wp_dual->add_option("--psi", wd_psi, "first generator");
    wp_dual->add_option("--psi-tilde", wd_psit, "second generator");
    wp_dual->add_option("--a", wd_a, "dilation base a > 1");
    wp_dual->add_option("--b", wd_b, "translation step");
    wp_dual->add_option("--c-values", wd_c, "modulations c_m")->delimiter(',');
    wp_dual->add_option("--c-range", wd_crange, "m_min,m_max,spacing")->delimiter(',');

    std::string lic_psi = "indicator:0:1", lic_f = "indicator:0:1";
    double lic_a = 2.0, lic_b = 1.0;
    std::vector<double> lic_c{0.0}, lic_crange;
    int lic_jmin = -8, lic_jmax = 8;
    auto* wp_lic = leaf(wp_cmd, "lic",
                        "Local integrability sum L(f) of the wave packet duality characterization, truncated in j "
                        "with a partial-sum trace.",
                        [&] {
                            const auto res = dilation::lic_estimate(parse_freq(lic_psi), lic_a, lic_b, c_values_from(lic_c, lic_crange),
                                                                    parse_freq(lic_f), lic_jmin, lic_jmax);
                            json trace = json::array();
                            for (const auto& [j, v] : res.trace) trace.push_back({{"j", j}, {"partial", v}});
                            return from_report(res.report, {{"L", res.value}, {"trace", trace}});
                        });
    wp_lic->add_option("--psi", lic_psi, "generator");
    wp_lic->add_option("--f", lic_f, "test function f^ (band-limited)");
    wp_lic->add_option("--a", lic_a, "dilation base");
    wp_lic->add_option("--b", lic_b, "translation step");
    wp_lic->add_option("--c-values", lic_c, "modulations")->delimiter(',');
    wp_lic->add_option("--c-range", lic_crange, "m_min,m_max,spacing")->delimiter(',');
    wp_lic->add_option("--j-min", lic_jmin, "first dilation index");
    wp_lic->add_option("--j-max", lic_jmax, "last dilation index");

    std::string bp_g = "indicator:0:1";
    double bp_b = 1.0, bp_r = 1.0, bp_ceiling = 1e6;
    int bp_period = 16;
    auto* wp_probe = leaf(wp_cmd, "bessel-probe",
                          "Bounded dilations on an infinite index set plus modulations covering the line rule out "
                          "the Bessel property: partial Bessel sums grow past any ceiling.",
                          [&] {
                              dilation::BesselProbeOptions opt;
                              opt.ceiling = bp_ceiling;
                              const int period = bp_period;
                              const auto res = dilation::wave_packet_bessel_probe(
                                  parse_freq(bp_g), [period](long long j) { return std::ldexp(1.0, -static_cast<int>(j % period)); },
                                  bp_b, bp_r, opt);
                              json trace = json::array();
                              for (const auto& [j, v] : res.trace) trace.push_back({{"terms", j}, {"partial", v}});
                              return from_report(res.report, {{"exceeded", res.exceeded}, {"monotone", res.monotone}, {"trace", trace}});
                          });
    wp_probe->add_option("--g", bp_g, "generator");
    wp_probe->add_option("--b", bp_b, "translation step");
    wp_probe->add_option("--r", bp_r, "spacing of c_m = m r");
    wp_probe->add_option("--period", bp_period, "dilations a_j = 2^-(j mod period)");
    wp_probe->add_option("--ceiling", bp_ceiling, "ceiling for the partial sums");

    // bspline
    CLI::App* bs_cmd = app.add_subcommand("bspline", "Cardinal B-splines and their Gabor systems");
    bs_cmd->require_subcommand(1);
    int bs_N = 2;
    std::vector<double> bs_x{0.5};
    auto* bs_eval = leaf(bs_cmd, "eval", "B_N(x) from the order-raising recurrence B_{N+1} = B_N * B_1.", [&] {
        json vals = json::array();
        for (const double x : bs_x) vals.push_back({{"x", x}, {"value", bspline::eval(bs_N, x)}});
        Outcome o;
        o.result = {{"N", bs_N}, {"values", vals}};
        return o;
    });
    bs_eval->add_option("--N", bs_N, "order")->required();
    bs_eval->add_option("--x", bs_x, "points")->delimiter(',');

    std::vector<double> bs_gamma{0.5};
    auto* bs_fourier = leaf(bs_cmd, "fourier", "Fourier transform ((1 - e^{-2 pi i g}) / (2 pi i g))^N.", [&] {
        json vals = json::array();
        for (const double x : bs_gamma) vals.push_back({{"gamma", x}, {"value", io::complex_to_json(bspline::fourier(bs_N, x))}});
        Outcome o;
        o.result = {{"N", bs_N}, {"values", vals}};
        return o;
    });
    bs_fourier->add_option("--N", bs_N, "order")->required();
    bs_fourier->add_option("--gamma", bs_gamma, "frequencies")->delimiter(',');

    double bs_shift = 0.0;
    auto* bs_props = leaf(bs_cmd, "props",
                          "Support [0, N], positivity inside, unit integral and partition of unity.", [&] {
                              bspline::PropertyOptions opt;
                              opt.partition_shift = bs_shift;
                              opt.tolerance = g.tol;
                              return from_report(bspline::property_suite(bs_N, opt));
                          });
    bs_props->add_option("--N", bs_N, "order")->required();
    bs_props->add_option("--partition-shift", bs_shift, "negative control: spacing 1 + shift");

    std::vector<double> sc_a{0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
    std::vector<double> sc_b{0.1, 0.2, 0.25, 0.3, 0.4, 0.45, 0.5, 0.75, 1.0, 2.0};
    auto* bs_scan = leaf(bs_cmd, "scan",
                         "Phase diagram of (a,b) for which B_N generates a Gabor frame: painless certificates, "
                         "the wave packet sufficient condition, otherwise undecided.",
                         [&] {
                             const auto cells = bspline::gabor_scan(bs_N, sc_a, sc_b);
                             Outcome o;
                             o.csv = io::scan_to_csv(cells);
                             json arr = json::array();
                             for (const auto& c : cells) {
                                 arr.push_back({{"a", c.a}, {"b", c.b}, {"status", bspline::to_string(c.status)},
                                                {"A", c.bounds_estimate.lower}, {"B", c.bounds_estimate.upper}, {"method", c.method}});
                             }
                             o.result = {{"N", bs_N}, {"cells", arr}};
                             return o;
                         });
    bs_scan->add_option("--N", bs_N, "order")->required();
    bs_scan->add_option("--a-values", sc_a, "translation steps")->delimiter(',');
    bs_scan->add_option("--b-values", sc_b, "modulation steps")->delimiter(',');

    double dw_b = 1.0 / 3.0;
    int dw_K = -1;
    auto* bs_dual = leaf(bs_cmd, "dual-window",
                         "Dual window as a finite combination of integer shifts of B_N for b <= 1/(2N-1), "
                         "verified by the Ron-Shen conditions.",
                         [&] {
                             const int K = dw_K < 0 ? bs_N - 1 : dw_K;
                             const auto dw = bspline::dual_window_solve(bs_N, dw_b, K, g.tol < 1e-8 ? 1e-8 : g.tol);
                             return from_report(dw.report, {{"coefficients", dw.coefficients}, {"K", K}});
                         });
    bs_dual->add_option("--N", bs_N, "order")->required();
    bs_dual->add_option("--b", dw_b, "modulation step");
    bs_dual->add_option("--K", dw_K, "shift range (default N-1)");

    // exp
    CLI::App* exp_cmd = app.add_subcommand("exp", "Finite exponential systems in L^2(-pi, pi)");
    exp_cmd->require_subcommand(1);
    std::string ex_file;
    std::vector<double> ex_values;
    auto lambda_set = [&] {
        if (!ex_file.empty()) return io::lambda_set_from_json(io::read_json_file(ex_file));
        if (ex_values.empty()) throw DomainError("give --lambdas or --values");
        return exponentials::LambdaSet(ex_values);
    };
    bool ex_norm = false;
    auto* ex_gram = leaf(exp_cmd, "gram", "Gram matrix 2 sin(pi d)/d of the exponentials, diagonal 2 pi.", [&] {
        const cmat gm = exponentials::exp_gram(lambda_set(), ex_norm);
        json rows = json::array();
        for (Eigen::Index i = 0; i < gm.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < gm.cols(); ++j) row.push_back(gm(i, j).real());
            rows.push_back(row);
        }
        Outcome o;
        o.result = {{"gram", rows}};
        return o;
    });
    ex_gram->add_option("--lambdas", ex_file, "LambdaSet JSON");
    ex_gram->add_option("--values", ex_values, "lambdas inline")->delimiter(',');
    ex_gram->add_flag("--normalized", ex_norm, "divide by 2 pi");

    auto* ex_bound = leaf(exp_cmd, "bound", "Optimal lower frame bound of the exponentials for their span.", [&] {
        const auto ls = lambda_set();
        const auto lb = exponentials::lower_bound_detail(ls);
        Outcome o;
        o.result = {{"lower_bound", lb.value}, {"log10", lb.log10_value}, {"extended_precision", lb.extended_precision},
                    {"delta", ls.size() > 1 ? ls.delta() : 0.0}};
        return o;
    });
    ex_bound->add_option("--lambdas", ex_file, "LambdaSet JSON");
    ex_bound->add_option("--values", ex_values, "lambdas inline")->delimiter(',');

    int cr_N = 2;
    double cr_delta = 0.5;
    auto* ex_crude = leaf(exp_cmd, "crude",
                          "Explicit lower frame bound 1.6e-14 (delta/2)^(2N+1) / ((N+1)!)^8 for N exponentials with gap delta.",
                          [&] {
                              const auto cb = exponentials::crude_bound(cr_N, cr_delta);
                              Outcome o;
                              o.result = {{"value", cb.value}, {"log10", cb.log10_value}};
                              return o;
                          });
    ex_crude->add_option("--N", cr_N, "number of exponentials")->required();
    ex_crude->add_option("--delta", cr_delta, "minimal gap, 0 < delta <= 1")->required();

    std::string dc_family = "half-integer";
    int dc_nmax = 20;
    auto* ex_decay = leaf(exp_cmd, "decay",
                          "Decay of the optimal lower bounds of nested finite sections of an overcomplete family, "
                          "against the explicit estimate.",
                          [&] {
                              std::function<exponentials::LambdaSet(int)> fam;
                              if (dc_family == "integer") {
                                  fam = exponentials::LambdaSet::integers;
                              } else {
                                  fam = exponentials::LambdaSet::half_integers;
                              }
                              const auto st = exponentials::decay_study(fam, dc_nmax);
                              Outcome o;
                              o.csv = io::decay_to_csv(st);
                              json arr = json::array();
                              for (const auto& r : st.rows) {
                                  arr.push_back({{"N", r.N}, {"lower_bound", r.lower}, {"log10_lower", r.log10_lower},
                                                 {"log10_crude", r.log10_crude}, {"log10_ratio", r.log10_ratio}});
                              }
                              o.result = {{"rows", arr}, {"strictly_decreasing", st.strictly_decreasing},
                                          {"crude_below_exact", st.crude_below_exact}};
                              o.verdict = st.crude_below_exact ? Verdict::pass : Verdict::fail;
                              return o;
                          });
    ex_decay->add_option("--family", dc_family, "integer | half-integer")->check(CLI::IsMember({"integer", "half-integer"}));
    ex_decay->add_option("--N-max", dc_nmax, "largest section");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_worker_count(g.jobs);
        for (const auto& [sub, fn] : handlers) {
            if (!sub->parsed()) continue;
            std::string path = sub->get_name();
            for (const CLI::App* p = sub->get_parent(); p && p != &app; p = p->get_parent()) path = p->get_name() + " " + path;
            const Outcome o = fn();
            emit(g, path, o);
            return o.verdict == Verdict::fail ? 1 : 0;
        }
    } catch (const framelab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    std::cerr << app.help();
    return 2;
}
