#include "framelab/errors.hpp"
#include "framelab/extension.hpp"
#include "support/random_systems.hpp"

#include <doctest.h>

using namespace framelab;
using namespace framelab::extension;
using framelab::testing::random_system;

TEST_CASE("random Bessel pairs extend to dual frames") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(trial % 4);
        const auto f = random_system(rng, d, 1 + static_cast<std::size_t>(trial % 5));
        const auto g = random_system(rng, d, f.size());
        const auto ext = extend_to_dual_pair(f, g);
        CHECK(ext.p.size() == d);
        CHECK(ext.q.size() == d);
        const auto rep = verify_extension(f, g, ext.p, ext.q, 1e-10);
        CHECK(rep.passed());
        CHECK(rep.metrics.at("f_union_lower") > 0.0);
        CHECK(defect_identity_residual(f, g, ext.p, ext.q) < 1e-10);
    }
}

TEST_CASE("an already dual pair gives a vanishing extension") {
    std::mt19937_64 rng(32);
    const auto f = random_system(rng, 3, 5);
    const auto g = canonical_dual(f);
    const auto ext = extend_to_dual_pair(f, g);
    CHECK(ext.collapsed);
    CHECK(ext.p.synthesis_matrix().norm() < 1e-10);
    const auto pruned = extend_to_dual_pair(f, g, std::nullopt, std::nullopt, {1e-10, true});
    CHECK(pruned.p.empty());
    CHECK(pruned.q.empty());
}

TEST_CASE("a custom auxiliary dual pair is honored and checked") {
    std::mt19937_64 rng(33);
    const auto f = random_system(rng, 3, 2);
    const auto g = random_system(rng, 3, 2);
    const auto a = random_system(rng, 3, 4);
    const auto b = canonical_dual(a);
    const auto ext = extend_to_dual_pair(f, g, a, b);
    CHECK(ext.q.size() == 4);
    CHECK((ext.q.synthesis_matrix() - b.synthesis_matrix()).norm() == 0.0);
    CHECK(verify_extension(f, g, ext.p, ext.q).passed());
    CHECK_THROWS_AS(extend_to_dual_pair(f, g, a, random_system(rng, 3, 4)), PreconditionError);
}

TEST_CASE("the defect operator is I - U T*") {
    std::mt19937_64 rng(34);
    const auto f = random_system(rng, 3, 3);
    const auto g = random_system(rng, 3, 3);
    const cmat d = defect_operator(f, g);
    const cmat expect = cmat::Identity(3, 3) - g.synthesis_matrix() * f.synthesis_matrix().adjoint();
    CHECK((d - expect).norm() < 1e-13);
}

TEST_CASE("empty Bessel sequences extend to the auxiliary pair") {
    const auto f = VectorSystem::empty(3);
    const auto ext = extend_to_dual_pair(f, f);
    CHECK(verify_extension(f, f, ext.p, ext.q).passed());
    CHECK((ext.p.synthesis_matrix() - cmat::Identity(3, 3)).norm() < 1e-14);
}
