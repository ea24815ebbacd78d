#include <catch2/catch_amalgamated.hpp>

#include "mpqw/graph.hpp"

using namespace mpqw;

TEST_CASE("degree is (M-1)N", "[graph]") {
    CHECK(GraphConfig(4, 5, 2, GraphCase::EverySet).degree() == 15);
    CHECK(GraphConfig(2, 1, 0, GraphCase::EverySet).degree() == 1);
    CHECK(GraphConfig(1000, 10000, 10, GraphCase::EverySet).degree() == 9'990'000);
}

TEST_CASE("edge space dimension is M(M-1)N^2", "[graph]") {
    CHECK(GraphConfig(3, 2, 1, GraphCase::EverySet).edge_space_dimension() == 24);
    CHECK(GraphConfig(3, 4, 1, GraphCase::EverySet).edge_space_dimension() == 96);
    CHECK(GraphConfig(2, 1, 0, GraphCase::EverySet).edge_space_dimension() == 2);
}

TEST_CASE("edge space dimension equals vertices times degree", "[graph]") {
    for (int M = 2; M <= 8; ++M)
        for (long long N = 1; N <= 8; ++N) {
            const GraphConfig g(M, N, 0, GraphCase::EverySet);
            CHECK(g.edge_space_dimension() == static_cast<long long>(M) * N * g.degree());
        }
}

TEST_CASE("marking predicate", "[graph]") {
    const GraphConfig every(4, 5, 2, GraphCase::EverySet);
    CHECK(every.is_marked({3, 1}));
    CHECK(every.is_marked({0, 0}));
    CHECK_FALSE(every.is_marked({3, 2}));

    const GraphConfig one(4, 5, 2, GraphCase::OneSet);
    CHECK_FALSE(one.is_marked({1, 0}));
    CHECK(one.is_marked({0, 1}));
    CHECK_FALSE(one.is_marked({0, 2}));

    const GraphConfig none(3, 4, 0, GraphCase::EverySet);
    for (int s = 0; s < none.M; ++s)
        for (long long v = 0; v < none.N; ++v) CHECK_FALSE(none.is_marked({s, v}));
}

TEST_CASE("marking rejects out-of-range vertices", "[graph]") {
    const GraphConfig g(3, 4, 1, GraphCase::EverySet);
    CHECK_THROWS_AS(g.is_marked({3, 0}), std::out_of_range);
    CHECK_THROWS_AS(g.is_marked({0, 4}), std::out_of_range);
    CHECK_THROWS_AS(g.is_marked({-1, 0}), std::out_of_range);
    CHECK_THROWS_AS(g.is_marked({0, -1}), std::out_of_range);
}

TEST_CASE("config validation", "[graph]") {
    CHECK_THROWS_AS(GraphConfig(1, 4, 1, GraphCase::EverySet), std::domain_error);
    CHECK_THROWS_AS(GraphConfig(2, 4, 1, GraphCase::OneSet), std::domain_error);
    CHECK_THROWS_AS(GraphConfig(3, 0, 0, GraphCase::EverySet), std::domain_error);
    CHECK_THROWS_AS(GraphConfig(3, 4, 5, GraphCase::EverySet), std::domain_error);
    CHECK_THROWS_AS(GraphConfig(3, 4, -1, GraphCase::EverySet), std::domain_error);
    CHECK_NOTHROW(GraphConfig(2, 4, 4, GraphCase::EverySet));  // all marked is allowed
    CHECK_NOTHROW(GraphConfig(3, 4, 0, GraphCase::OneSet));    // none marked is allowed
}

TEST_CASE("marked totals by exhaustive enumeration", "[graph]") {
    for (int M = 2; M <= 8; ++M)
        for (long long N = 1; N <= 8; ++N)
            for (long long n = 0; n <= N; ++n)
                for (GraphCase kind : {GraphCase::EverySet, GraphCase::OneSet}) {
                    if (kind == GraphCase::OneSet && M < 3) continue;
                    const GraphConfig g(M, N, n, kind);
                    long long found = 0;
                    for (int s = 0; s < M; ++s)
                        for (long long v = 0; v < N; ++v)
                            if (g.is_marked({s, v})) ++found;
                    CHECK(found == g.marked_count());
                    CHECK(found == (kind == GraphCase::EverySet ? M * n : n));
                }
}
