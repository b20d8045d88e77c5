#pragma once

// JSON and CSV forms of the library's inputs and results. JSON objects use
// sorted keys; complex numbers are [re, im] pairs (a bare number is read as real).

#include "framelab/bspline.hpp"
#include "framelab/dilation.hpp"
#include "framelab/exponentials.hpp"
#include "framelab/frame_core.hpp"
#include "framelab/gabor.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace framelab::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Shortest round-trip decimal form used in every CSV cell.
std::string format_number(double x);

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const AnalysisReport& r);
json to_json(const FrameBounds& b);

/// {ambient_dim, vectors: [[[re, im], ...], ...], label}
json to_json(const VectorSystem& sys);
VectorSystem vector_system_from_json(const json& j);
/// One row per vector: re_0,im_0,re_1,im_1,... with a header row.
std::string vector_system_to_csv(const VectorSystem& sys);
VectorSystem vector_system_from_csv(const std::string& text);

/// {L, a, b, window}
json to_json(const gabor::GaborSpec& spec);
gabor::GaborSpec gabor_spec_from_json(const json& j);

/// {x0, step, samples, support: [lo, hi]}
json to_json(const SampledWindow& w);
SampledWindow sampled_window_from_json(const json& j);

/// {grid: {start, step, count}, values, band: [[lo, hi], ...]}, or the shorthand
/// {indicator: [[lo, hi], ...], scale} for a half-open indicator.
dilation::FreqFunction freq_function_from_json(const json& j);
json freq_function_to_json(const dilation::FreqFunction& f, const dilation::UniformGrid& grid);

/// {lambdas: [...]}
json to_json(const exponentials::LambdaSet& ls);
exponentials::LambdaSet lambda_set_from_json(const json& j);

std::string sweep_to_csv(const std::vector<gabor::SweepRow>& rows);
std::string scan_to_csv(const std::vector<bspline::PhaseDiagramCell>& cells);
std::string decay_to_csv(const exponentials::DecayStudy& study);

/// Reads a whole file; throws DomainError when it cannot be opened.
std::string read_file(const std::string& path);
json read_json_file(const std::string& path);

}  // namespace framelab::io
