#pragma once

#include <map>
#include <string>

namespace framelab {

enum class Verdict { pass, fail, undecided };

const char* to_string(Verdict v);

/// Outcome of a verification. `residuals` are the quantities compared against
/// `tolerance_used`; `metrics` carry informational values (bounds, singular
/// values, grid sizes) that take no part in the verdict.
struct AnalysisReport {
    Verdict verdict = Verdict::undecided;
    std::map<std::string, double> residuals;
    std::map<std::string, double> metrics;
    double tolerance_used = 0.0;
    std::string notes;

    [[nodiscard]] bool passed() const { return verdict == Verdict::pass; }

    /// pass iff every residual is finite and <= tolerance.
    static AnalysisReport from_residuals(std::map<std::string, double> residuals,
                                         double tolerance, std::string notes = {});

    AnalysisReport& with_metric(const std::string& key, double value) {
        metrics[key] = value;
        return *this;
    }
};

/// Largest residual of a report (0 for an empty map).
double max_residual(const AnalysisReport& report);

}  // namespace framelab
