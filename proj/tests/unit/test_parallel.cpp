#include "framelab/errors.hpp"
#include "framelab/parallel.hpp"

#include <doctest.h>

#include <numeric>
#include <stdexcept>

using namespace framelab;

TEST_CASE("map_indices keeps input order in both modes") {
    const auto s = map_indices<long long>(1000, Execution::serial, [](std::size_t i) { return static_cast<long long>(i * i); });
    const auto p = map_indices<long long>(1000, Execution::parallel, [](std::size_t i) { return static_cast<long long>(i * i); });
    CHECK(s == p);
    CHECK(s[31] == 961);
}

TEST_CASE("exceptions inside the parallel loop reach the caller") {
    CHECK_THROWS_AS(for_each_index(100, Execution::parallel,
                                   [](std::size_t i) {
                                       if (i == 57) throw DomainError("boom");
                                   }),
                    DomainError);
}

TEST_CASE("worker count can be set and the loop still covers every index") {
    set_worker_count(2);
    std::vector<int> hit(500, 0);
    for_each_index(hit.size(), Execution::parallel, [&](std::size_t i) { hit[i] += 1; });
    CHECK(std::accumulate(hit.begin(), hit.end(), 0) == 500);
    set_worker_count(0);
}
