#include "framelab/dilation.hpp"
#include "framelab/errors.hpp"

#include <doctest.h>

using namespace framelab;
using namespace framelab::dilation;

namespace {

FreqFunction shannon() { return FreqFunction::indicator(Band{{{-1.0, -0.5}, {0.5, 1.0}}}); }

}  // namespace

TEST_CASE("Shannon pair satisfies both conditions exactly") {
    const auto r = wavelet_duality_check(shannon(), shannon(), 1.0, 1e-12);
    CHECK(r.passed());
    CHECK(r.residuals.at("condition_i") == 0.0);
    CHECK(r.residuals.at("condition_ii") == 0.0);
}

TEST_CASE("zero second generator fails condition (i) with residual b") {
    for (double b : {1.0, 0.5}) {
        const auto r = wavelet_duality_check(shannon(), FreqFunction::zero(), b);
        CHECK_FALSE(r.passed());
        CHECK(r.residuals.at("condition_i") == b);
    }
}

TEST_CASE("the product is what matters: psi * 2 against psit / 2") {
    const auto r = wavelet_duality_check(shannon().scaled(2.0), shannon().scaled(0.5), 1.0, 1e-12);
    CHECK(r.passed());
}

TEST_CASE("perturbing the dual generator by eps moves condition (i) by eps") {
    for (double eps : {1e-3, 1e-6}) {
        const auto bump = FreqFunction::indicator(Band{{{0.5, 0.75}}}, eps);
        const auto r = wavelet_duality_check(shannon(), shannon().plus(bump), 1.0, 1e-12);
        CHECK_FALSE(r.passed());
        CHECK(r.residuals.at("condition_i") == doctest::Approx(eps).epsilon(1e-9));
    }
}

TEST_CASE("one-sided Shannon generator misses the negative frequencies") {
    const auto half = FreqFunction::indicator(Band{{{0.5, 1.0}}});
    const auto r = wavelet_duality_check(half, half);
    CHECK_FALSE(r.passed());
    CHECK(r.residuals.at("condition_i") == doctest::Approx(1.0));
}

TEST_CASE("overlapping dilates break the tiling and produce alpha sums") {
    const auto wide = FreqFunction::indicator(Band{{{-1.5, -0.5}, {0.5, 1.5}}});
    const auto r = wavelet_duality_check(wide, wide);
    CHECK_FALSE(r.passed());
    CHECK(r.residuals.at("condition_i") >= 1.0 - 1e-12);
    CHECK(r.residuals.at("condition_ii") > 0.5);
    CHECK(r.metrics.at("alpha_count") >= 1.0);
}

TEST_CASE("bands touching 0 are rejected") {
    const auto touching = FreqFunction::indicator(Band{{{0.0, 1.0}}});
    CHECK_THROWS_AS(wavelet_duality_check(touching, shannon()), TruncationError);
}

TEST_CASE("serial and parallel grids agree") {
    const auto wide = FreqFunction::indicator(Band{{{-1.5, -0.5}, {0.5, 1.5}}});
    WaveletOptions ser;
    ser.exec = Execution::serial;
    WaveletOptions par;
    par.exec = Execution::parallel;
    const auto a = wavelet_duality_check(wide, shannon(), 1.0, 1e-10, ser);
    const auto b = wavelet_duality_check(wide, shannon(), 1.0, 1e-10, par);
    CHECK(a.residuals == b.residuals);
}

TEST_CASE("FreqFunction basics") {
    const auto f = FreqFunction::from_samples(UniformGrid{0.0, 0.5, 5}, {0.0, 1.0, 2.0, 1.0, 0.0}, Band{{{0.0, 2.0}}});
    CHECK(f(0.75).real() == doctest::Approx(1.5));
    CHECK(f(3.0) == cplx(0.0, 0.0));
    CHECK(f.is_sampled());
    CHECK_THROWS_AS(FreqFunction::from_samples(UniformGrid{0.0, 0.5, 3}, {1.0, 1.0, 1.0}, Band{{{0.0, 0.5}}}),
                    DomainError);
    CHECK(shannon().band().distance_from_zero() == doctest::Approx(0.5));
}
