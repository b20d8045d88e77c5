#include "framelab/report.hpp"

#include <algorithm>
#include <cmath>

namespace framelab {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::undecided: return "undecided";
    }
    return "undecided";
}

AnalysisReport AnalysisReport::from_residuals(std::map<std::string, double> residuals,
                                              double tolerance, std::string notes) {
    AnalysisReport r;
    r.residuals = std::move(residuals);
    r.tolerance_used = tolerance;
    r.notes = std::move(notes);
    const bool ok = std::all_of(r.residuals.begin(), r.residuals.end(), [&](const auto& kv) {
        return std::isfinite(kv.second) && kv.second <= tolerance;
    });
    r.verdict = ok ? Verdict::pass : Verdict::fail;
    return r;
}

double max_residual(const AnalysisReport& report) {
    double m = 0.0;
    for (const auto& [key, value] : report.residuals) m = std::max(m, value);
    return m;
}

}  // namespace framelab
