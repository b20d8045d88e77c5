#include "framelab/io.hpp"

#include "framelab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace framelab::io {

namespace {

template <class Fn>
auto guarded(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw DomainError(std::string(what) + ": " + e.what());
    }
}

cvec complex_vector_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("expected an array of complex numbers");
    cvec v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
}

json complex_vector_to_json(const cvec& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

std::string scientific_from_log10(double lg) {
    if (!std::isfinite(lg)) return lg < 0 ? "0" : "inf";
    const double e = std::floor(lg);
    const double mant = std::pow(10.0, lg - e);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6fe%+d", mant, static_cast<int>(e));
    return buf;
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw DomainError("expected a complex number as [re, im] or a real number, got " + j.dump());
}

json to_json(const AnalysisReport& r) {
    json out;
    out["verdict"] = to_string(r.verdict);
    out["residuals"] = json::object();
    for (const auto& [k, v] : r.residuals) out["residuals"][k] = v;
    out["metrics"] = json::object();
    for (const auto& [k, v] : r.metrics) out["metrics"][k] = v;
    out["tolerance_used"] = r.tolerance_used;
    out["notes"] = r.notes;
    return out;
}

json to_json(const FrameBounds& b) { return {{"lower", b.lower}, {"upper", b.upper}}; }

json to_json(const VectorSystem& sys) {
    json vectors = json::array();
    for (std::size_t k = 0; k < sys.size(); ++k) vectors.push_back(complex_vector_to_json(sys.vector(k)));
    return {{"ambient_dim", sys.ambient_dim()}, {"vectors", vectors}, {"label", sys.label()}};
}

VectorSystem vector_system_from_json(const json& j) {
    return guarded("VectorSystem JSON", [&] {
        const auto dim = j.at("ambient_dim").get<std::size_t>();
        std::vector<cvec> vectors;
        for (const json& v : j.at("vectors")) vectors.push_back(complex_vector_from_json(v));
        return VectorSystem(dim, vectors, j.value("label", std::string{}));
    });
}

std::string vector_system_to_csv(const VectorSystem& sys) {
    std::ostringstream os;
    for (std::size_t i = 0; i < sys.ambient_dim(); ++i) {
        os << (i ? "," : "") << "re_" << i << ",im_" << i;
    }
    os << '\n';
    for (std::size_t k = 0; k < sys.size(); ++k) {
        const cvec v = sys.vector(k);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            os << (i ? "," : "") << format_number(v(i).real()) << ',' << format_number(v(i).imag());
        }
        os << '\n';
    }
    return os.str();
}

VectorSystem vector_system_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw DomainError("VectorSystem CSV: missing header");
    const std::size_t columns = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
    if (columns % 2 != 0) throw DomainError("VectorSystem CSV: header needs re/im column pairs");
    const std::size_t dim = columns / 2;
    std::vector<cvec> vectors;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<double> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                cells.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw DomainError("VectorSystem CSV: bad number '" + cell + "'");
            }
        }
        if (cells.size() != columns) throw DimensionError("VectorSystem CSV: row has the wrong number of cells");
        cvec v(static_cast<Eigen::Index>(dim));
        for (std::size_t i = 0; i < dim; ++i) v(static_cast<Eigen::Index>(i)) = {cells[2 * i], cells[2 * i + 1]};
        vectors.push_back(v);
    }
    return VectorSystem(dim, vectors);
}

json to_json(const gabor::GaborSpec& spec) {
    return {{"L", spec.L}, {"a", spec.a}, {"b", spec.b}, {"window", complex_vector_to_json(spec.window)}};
}

gabor::GaborSpec gabor_spec_from_json(const json& j) {
    return guarded("GaborSpec JSON", [&] {
        gabor::GaborSpec s{j.at("L").get<int>(), j.at("a").get<int>(), j.at("b").get<int>(),
                           complex_vector_from_json(j.at("window"))};
        s.validate();
        return s;
    });
}

json to_json(const SampledWindow& w) {
    json samples = json::array();
    for (const cplx z : w.samples()) samples.push_back(complex_to_json(z));
    return {{"x0", w.x0()}, {"step", w.step()}, {"samples", samples}, {"support", {w.support().lo, w.support().hi}}};
}

SampledWindow sampled_window_from_json(const json& j) {
    return guarded("SampledWindow JSON", [&] {
        std::vector<cplx> samples;
        for (const json& z : j.at("samples")) samples.push_back(complex_from_json(z));
        const double x0 = j.at("x0").get<double>();
        const double step = j.at("step").get<double>();
        if (j.contains("support")) {
            const json& s = j.at("support");
            return SampledWindow(x0, step, std::move(samples), Interval{s.at(0).get<double>(), s.at(1).get<double>()});
        }
        return SampledWindow(x0, step, std::move(samples));
    });
}

namespace {

dilation::Band band_from_json(const json& j) {
    dilation::Band band;
    for (const json& iv : j) band.intervals.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
    return band;
}

}  // namespace

dilation::FreqFunction freq_function_from_json(const json& j) {
    return guarded("FreqFunction JSON", [&] {
        if (j.contains("indicator")) {
            const cplx scale = j.contains("scale") ? complex_from_json(j.at("scale")) : cplx(1.0, 0.0);
            return dilation::FreqFunction::indicator(band_from_json(j.at("indicator")), scale);
        }
        const json& g = j.at("grid");
        dilation::UniformGrid grid{g.at("start").get<double>(), g.at("step").get<double>(), g.at("count").get<std::size_t>()};
        std::vector<cplx> values;
        for (const json& z : j.at("values")) values.push_back(complex_from_json(z));
        return dilation::FreqFunction::from_samples(grid, std::move(values), band_from_json(j.at("band")));
    });
}

json freq_function_to_json(const dilation::FreqFunction& f, const dilation::UniformGrid& grid) {
    json values = json::array();
    for (const cplx z : f.sample(grid)) values.push_back(complex_to_json(z));
    json band = json::array();
    for (const Interval& iv : f.band().intervals) band.push_back({iv.lo, iv.hi});
    return {{"grid", {{"start", grid.start}, {"step", grid.step}, {"count", grid.count}}}, {"values", values}, {"band", band}};
}

json to_json(const exponentials::LambdaSet& ls) { return {{"lambdas", ls.lambdas()}}; }

exponentials::LambdaSet lambda_set_from_json(const json& j) {
    return guarded("LambdaSet JSON", [&] { return exponentials::LambdaSet(j.at("lambdas").get<std::vector<double>>()); });
}

std::string sweep_to_csv(const std::vector<gabor::SweepRow>& rows) {
    std::ostringstream os;
    os << "L,a,b,lowerA,upperB,adjoint_lower,adjoint_upper,residual\n";
    for (const auto& r : rows) {
        os << r.L << ',' << r.a << ',' << r.b << ',' << format_number(r.lowerA) << ',' << format_number(r.upperB)
           << ',' << format_number(r.adjoint_lower) << ',' << format_number(r.adjoint_upper) << ','
           << format_number(r.residual) << '\n';
    }
    return os.str();
}

std::string scan_to_csv(const std::vector<bspline::PhaseDiagramCell>& cells) {
    std::ostringstream os;
    os << "a,b,status,A,B,method\n";
    for (const auto& c : cells) {
        os << format_number(c.a) << ',' << format_number(c.b) << ',' << bspline::to_string(c.status) << ','
           << format_number(c.bounds_estimate.lower) << ',' << format_number(c.bounds_estimate.upper) << ",\""
           << c.method << "\"\n";
    }
    return os.str();
}

std::string decay_to_csv(const exponentials::DecayStudy& study) {
    std::ostringstream os;
    os << "N,lower_bound,crude_bound,ratio,log10_lower,log10_crude,log10_ratio,delta\n";
    for (const auto& r : study.rows) {
        os << r.N << ',' << scientific_from_log10(r.log10_lower) << ',' << scientific_from_log10(r.log10_crude) << ','
           << scientific_from_log10(r.log10_ratio) << ',' << format_number(r.log10_lower) << ','
           << format_number(r.log10_crude) << ',' << format_number(r.log10_ratio) << ',' << format_number(r.delta)
           << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json read_json_file(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace framelab::io
