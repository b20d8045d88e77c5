#include "framelab/errors.hpp"
#include "framelab/io.hpp"
#include "support/random_systems.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace framelab;
using framelab::io::json;

TEST_CASE("numbers round-trip through their shortest form") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
        CHECK(std::stod(io::format_number(x)) == x);
    }
}

TEST_CASE("complex numbers are pairs, bare numbers read as real") {
    CHECK(io::complex_from_json(io::complex_to_json(cplx(1.5, -2.0))) == cplx(1.5, -2.0));
    CHECK(io::complex_from_json(json(3.0)) == cplx(3.0, 0.0));
    CHECK_THROWS_AS(io::complex_from_json(json::array({1, 2, 3})), DomainError);
}

TEST_CASE("VectorSystem round-trips through JSON and CSV bit for bit") {
    std::mt19937_64 rng(91);
    const auto sys = framelab::testing::random_system(rng, 3, 4);
    const auto back = io::vector_system_from_json(json::parse(io::to_json(sys).dump()));
    CHECK(back.synthesis_matrix() == sys.synthesis_matrix());
    const auto csv = io::vector_system_from_csv(io::vector_system_to_csv(sys));
    CHECK(csv.synthesis_matrix() == sys.synthesis_matrix());
}

TEST_CASE("GaborSpec, SampledWindow and LambdaSet round-trip") {
    std::mt19937_64 rng(92);
    const gabor::GaborSpec spec{6, 2, 3, framelab::testing::random_vector(rng, 6)};
    const auto s2 = io::gabor_spec_from_json(io::to_json(spec));
    CHECK(s2.L == 6);
    CHECK(s2.window == spec.window);

    const auto w = AnalyticWindow::gaussian().sample(0.25);
    const auto w2 = io::sampled_window_from_json(io::to_json(w));
    CHECK(w2.samples() == w.samples());
    CHECK(w2.x0() == w.x0());

    const exponentials::LambdaSet ls({0.0, 0.5, 1.25});
    CHECK(io::lambda_set_from_json(io::to_json(ls)).lambdas() == ls.lambdas());
}

TEST_CASE("FreqFunction JSON: sampled form and indicator shorthand") {
    const json sampled = json::parse(R"({"grid": {"start": 0.0, "step": 0.5, "count": 3},
                                         "values": [0.0, [1.0, 0.0], 0.0], "band": [[0.0, 1.0]]})");
    const auto f = io::freq_function_from_json(sampled);
    CHECK(f(0.25).real() == doctest::Approx(0.5));
    const auto g = io::freq_function_from_json(json::parse(R"({"indicator": [[0.5, 1.0]], "scale": 2})"));
    CHECK(g(0.75) == cplx(2.0, 0.0));
    CHECK(g(1.0) == cplx(0.0, 0.0));
    const auto round = io::freq_function_from_json(io::freq_function_to_json(f, *f.grid()));
    CHECK(round(0.25) == f(0.25));
}

TEST_CASE("malformed inputs raise library errors") {
    CHECK_THROWS_AS(io::vector_system_from_json(json::parse(R"({"vectors": 3})")), DomainError);
    CHECK_THROWS_AS(io::gabor_spec_from_json(json::parse(R"({"L": 6})")), DomainError);
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), DomainError);
    CHECK_THROWS_AS(io::vector_system_from_csv("re_0,im_0\n1,2,3\n"), DimensionError);
}

TEST_CASE("report JSON carries every field with sorted keys") {
    auto r = AnalysisReport::from_residuals({{"z", 1e-12}, {"a", 0.0}}, 1e-10, "note");
    r.with_metric("m", 2.0);
    const json j = io::to_json(r);
    CHECK(j.at("verdict") == "pass");
    CHECK(j.at("tolerance_used") == 1e-10);
    CHECK(j.at("notes") == "note");
    const std::string text = j.dump();
    CHECK(text.find("\"metrics\"") < text.find("\"notes\""));
    CHECK(text.find("\"a\"") < text.find("\"z\""));
}

TEST_CASE("CSV tables have the documented headers") {
    const auto scan = bspline::gabor_scan(2, {0.5}, {0.25});
    CHECK(io::scan_to_csv(scan).rfind("a,b,status,A,B,method\n", 0) == 0);
    const auto sweep = gabor::duality_sweep(4, 4, 1, 1);
    CHECK(io::sweep_to_csv(sweep).rfind("L,a,b,lowerA,upperB,", 0) == 0);
    const auto decay = exponentials::decay_study(exponentials::LambdaSet::half_integers, 3);
    CHECK(io::decay_to_csv(decay).rfind("N,lower_bound,", 0) == 0);
}
