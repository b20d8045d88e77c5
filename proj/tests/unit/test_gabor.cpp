#include "framelab/errors.hpp"
#include "framelab/gabor.hpp"
#include "support/random_systems.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

using namespace framelab;
using namespace framelab::gabor;
using framelab::testing::random_unit_vector;

namespace {

GaborSpec random_spec(std::mt19937_64& rng, int L, int a, int b) {
    return GaborSpec{L, a, b, random_unit_vector(rng, static_cast<std::size_t>(L))};
}

}  // namespace

TEST_CASE("finite Gabor vectors match the direct formula") {
    std::mt19937_64 rng(41);
    const GaborSpec spec = random_spec(rng, 6, 2, 3);
    const auto sys = finite_gabor_system(spec);
    REQUIRE(sys.size() == 6);
    std::size_t col = 0;
    for (int n = 0; n < 3; ++n) {
        for (int m = 0; m < 2; ++m, ++col) {
            const cvec v = sys.vector(col);
            for (int t = 0; t < 6; ++t) {
                const double ang = 2 * kPi * m * 3 * t / 6.0;
                const cplx expect = std::polar(1.0, ang) * spec.window(((t - n * 2) % 6 + 6) % 6);
                CHECK(std::abs(v(t) - expect) < 1e-14);
            }
        }
    }
}

TEST_CASE("critical integer lattice on Z_L gives S = L |g|^2 I") {
    std::mt19937_64 rng(42);
    const GaborSpec spec = random_spec(rng, 5, 1, 1);
    const FrameBounds fb = frame_bounds(finite_gabor_system(spec));
    CHECK(fb.lower == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(fb.upper == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("painless windows have diagonal frame operator (L/b) sum_n |g(t - na)|^2") {
    std::mt19937_64 rng(43);
    // support length 3 <= L/b = 4
    const int L = 12, a = 2, b = 3;
    GaborSpec spec{L, a, b, cvec::Zero(L)};
    spec.window.head(3) = framelab::testing::random_vector(rng, 3);
    double lo = INFINITY, hi = 0.0;
    for (int t = 0; t < L; ++t) {
        double s = 0.0;
        for (int n = 0; n < L / a; ++n) s += std::norm(spec.window(((t - n * a) % L + L) % L));
        lo = std::min(lo, s * L / b);
        hi = std::max(hi, s * L / b);
    }
    const FrameBounds fb = frame_bounds(finite_gabor_system(spec));
    CHECK(fb.lower == doctest::Approx(lo).epsilon(1e-12));
    CHECK(fb.upper == doctest::Approx(hi).epsilon(1e-12));
}

TEST_CASE("adjoint lattice swaps the steps and rescales the window") {
    std::mt19937_64 rng(44);
    const GaborSpec spec = random_spec(rng, 12, 3, 2);
    const GaborSpec adj = adjoint_spec(spec);
    CHECK(adj.a == 6);
    CHECK(adj.b == 4);
    CHECK(adj.window.norm() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("duality principle on the worked example L=6, a=2, b=3") {
    std::mt19937_64 rng(45);
    const auto r = duality_principle_check(random_spec(rng, 6, 2, 3), 1e-10);
    CHECK(r.passed());
    CHECK(r.metrics.at("frame_lower") == doctest::Approx(r.metrics.at("adjoint_riesz_lower")).epsilon(1e-9));
}

TEST_CASE("duality principle holds on every divisor lattice of L = 8") {
    std::mt19937_64 rng(46);
    for (int a : {1, 2, 4, 8}) {
        for (int b : {1, 2, 4, 8}) {
            const auto r = duality_principle_check(random_spec(rng, 8, a, b), 1e-10);
            CHECK_MESSAGE(r.passed(), "a=" << a << " b=" << b);
        }
    }
}

TEST_CASE("Wexler-Raz: canonical dual windows pass both sides, random windows fail both") {
    std::mt19937_64 rng(47);
    const GaborSpec g = random_spec(rng, 12, 2, 3);
    GaborSpec h = g;
    h.window = canonical_dual_window(g);
    const auto yes = wexler_raz_check(g, h);
    CHECK(yes.passed());
    CHECK(yes.metrics.at("dual_frames") == 1.0);
    CHECK(yes.metrics.at("biorthogonal") == 1.0);
    const auto no = wexler_raz_check(g, random_spec(rng, 12, 2, 3));
    CHECK(no.passed());
    CHECK(no.metrics.at("dual_frames") == 0.0);
    CHECK(no.metrics.at("biorthogonal") == 0.0);
}

TEST_CASE("canonical dual window generates the canonical dual system") {
    std::mt19937_64 rng(48);
    const GaborSpec g = random_spec(rng, 12, 3, 2);
    const auto r = frame_operator_commutation_check(g);
    CHECK(r.passed());
    CHECK(r.residuals.at("commutator") < 1e-10);
    CHECK(r.metrics.at("dual_structure") < 1e-10);
}

TEST_CASE("shifts off the lattice do not commute with S^{-1}") {
    std::mt19937_64 rng(49);
    const GaborSpec g = random_spec(rng, 12, 3, 2);
    const auto r = frame_operator_commutation_check(g, Lattice{1, 1});
    CHECK_FALSE(r.passed());
}

TEST_CASE("non-frames are rejected where a dual is needed") {
    GaborSpec spec{6, 3, 3, cvec::Zero(6)};
    spec.window(0) = 1.0;
    CHECK_THROWS_AS(canonical_dual_window(spec), SingularFrameError);
    CHECK_THROWS_AS(finite_gabor_system(GaborSpec{6, 4, 1, cvec::Ones(6)}), DomainError);
    CHECK_THROWS_AS(finite_gabor_system(GaborSpec{6, 2, 1, cvec::Ones(5)}), DimensionError);
}

TEST_CASE("Ron-Shen: indicator of [0,1) is its own dual at a = b = 1") {
    const auto g = AnalyticWindow::indicator({0.0, 1.0}).sample(1.0 / 64.0);
    const auto r = ron_shen_duality_check(g, g, 1.0, 1.0, 1e-12);
    CHECK(r.passed());
    CHECK(r.residuals.at("ron_shen") <= 1e-12);
}

TEST_CASE("Ron-Shen detects both failure modes") {
    const auto g = AnalyticWindow::indicator({0.0, 1.0}).sample(1.0 / 64.0);
    // wrong normalization: the n = 0 sum is 1, not b = 2
    CHECK_FALSE(ron_shen_duality_check(g, g, 1.0, 2.0).passed());
    // right normalization, but the n = 1 shift by 1/2 overlaps
    CHECK_FALSE(ron_shen_duality_check(g, g.scaled(2.0), 1.0, 2.0).passed());
    // incommensurate a
    CHECK_THROWS_AS(ron_shen_duality_check(g, g, 1.0 / 3.0, 1.0), GridError);
}

TEST_CASE("finite Gabor extension yields dual Gabor frames") {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 5; ++trial) {
        const GaborSpec g1 = random_spec(rng, 12, 3, 2);
        const GaborSpec h1 = random_spec(rng, 12, 3, 2);
        const auto ext = gabor_extension_finite(g1, h1);
        CHECK(ext.report.passed());
    }
    CHECK_THROWS_AS(gabor_extension_finite(random_spec(rng, 6, 3, 3), random_spec(rng, 6, 3, 3)), InfeasibleError);
}

TEST_CASE("a dual pair of Gabor windows extends with g2 = 0") {
    std::mt19937_64 rng(51);
    const GaborSpec g1 = random_spec(rng, 12, 2, 3);
    GaborSpec h1 = g1;
    h1.window = canonical_dual_window(g1);
    const auto ext = gabor_extension_finite(g1, h1);
    CHECK(ext.report.passed());
    CHECK(ext.report.metrics.at("g2_norm") < 1e-10);
}

TEST_CASE("sampled Gabor extension on the real line") {
    const double h = 1.0 / 8.0;
    const auto g1 = AnalyticWindow::indicator({0.0, 0.5}).sample(h);
    const auto h1 = AnalyticWindow::indicator({0.25, 1.0}).sample(h);
    const auto ext = gabor_extension(g1, h1, 1.0, 0.5, 1e-10);
    CHECK(ext.report.passed());
    CHECK(ext.g2.step() == h);
    CHECK_THROWS_AS(gabor_extension(g1, h1, 2.0, 1.0), InfeasibleError);
}

TEST_CASE("HRT probe reports evidence and always carries the caveat") {
    const std::vector<TFPoint> lattice{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    const auto r = hrt_independence(AnalyticWindow::gaussian(), lattice);
    CHECK(r.passed());
    CHECK(r.metrics.at("sigma_min") > 1e-3);
    CHECK(r.notes.find("does not prove dependence") != std::string::npos);

    const std::vector<TFPoint> special{{0, 0}, {0, 1}, {1, 0}, {std::sqrt(2.0), std::sqrt(2.0)}};
    const auto s = hrt_independence(AnalyticWindow::gaussian(), special);
    CHECK(s.notes.find("numerical evidence only") != std::string::npos);

    CHECK_THROWS_AS(hrt_independence(AnalyticWindow::gaussian(), {{0, 0}, {0, 0}}), PreconditionError);
}

TEST_CASE("integer translates of the indicator are orthonormal on the grid") {
    const auto box = AnalyticWindow::indicator({0.0, 1.0});
    const auto r = hrt_independence(box, {{0, 0}, {0, 1}, {0, 2}});
    CHECK(r.passed());
    CHECK(r.metrics.at("sigma_min") == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("duality sweep is identical in serial and parallel mode") {
    const auto s = duality_sweep(4, 8, 2, 99, Execution::serial);
    const auto p = duality_sweep(4, 8, 2, 99, Execution::parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].L == p[i].L);
        CHECK(s[i].a == p[i].a);
        CHECK(s[i].lowerA == p[i].lowerA);
        CHECK(s[i].residual == p[i].residual);
        CHECK(s[i].residual <= 1e-10);
    }
}
