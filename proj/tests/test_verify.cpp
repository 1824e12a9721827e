#include "doctest.h"

#include "dynred/verify.hpp"

#include <atomic>

using namespace dynred;

TEST_CASE("parameter strings") {
    const auto s = parse_params("n=1,d=2..3,p=2,3,5,B=4");
    CHECK(s.n == std::vector<unsigned>{1});
    CHECK(s.d == std::vector<unsigned>{2, 3});
    CHECK(s.p == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(s.bound == 4);
    CHECK(parse_params("").p == std::vector<std::uint64_t>{2, 3, 5});
    CHECK_THROWS_AS(parse_params("p=4"), UsageError);
    CHECK_THROWS_AS(parse_params("q=1"), UsageError);
    CHECK_THROWS_AS(parse_params("3"), UsageError);
    CHECK_THROWS_AS(parse_params("d=3..2"), UsageError);
}

TEST_CASE("suites pass and are deterministic") {
    for (const auto& suite : suite_names()) {
        const auto params = parse_params(suite == "globalize" ? "n=1,d=2,p=2,3" : "n=1,d=2..3,p=2,3,5");
        const auto a = run_suite(suite, params, 3, 12, 1);
        const auto b = run_suite(suite, params, 3, 12, 3);
        CAPTURE(suite);
        CHECK(a.failed == 0);
        CHECK(a.passed == 12);
        CHECK(a.notes == b.notes);
        CHECK(b.failed == 0);
    }
    CHECK_THROWS_AS(run_suite("nope", {}, 1, 1), UsageError);
}

TEST_CASE("valuation and containment suites also cover n = 2") {
    const auto params = parse_params("n=2,d=2,p=2,3");
    CHECK(run_suite("prop22", params, 5, 6).failed == 0);
    CHECK(run_suite("homss", params, 5, 6).failed == 0);
}

TEST_CASE("parallel_for visits every index once") {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) CHECK(h.load() == 1);
}
