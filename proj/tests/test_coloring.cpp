#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "stepup/coloring.hpp"

using namespace stepup;

namespace {

BaseGraph k2() { return BaseGraph::complete(2); }

TVertex e(std::uint64_t r) { return TVertex(r, 2); }

} // namespace

TEST_SUITE_BEGIN("coloring");

TEST_CASE("colour rule on the two-vertex base graph") {
    // deltas of (e0,e1,e2) are 1 then 2: edge present and increasing
    CHECK(color_triple(k2(), e(0), e(1), e(2)) == TripleColor::C1);
    // deltas of (e0,e2,e3) are 2 then 1: edge present and decreasing
    CHECK(color_triple(k2(), e(0), e(2), e(3)) == TripleColor::C2);
    CHECK(color_triple(BaseGraph(2), e(0), e(2), e(3)) == TripleColor::C3);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(color_triple(k2(), e(0), e(0), e(1)), DuplicateVertex);
    CHECK_THROWS_AS(color_triple(k2(), e(0), e(1), TVertex(2, 3)), LengthMismatch);
    CHECK_THROWS_AS(color_triple(BaseGraph(3), e(0), e(1), e(2)), LengthMismatch);
}

TEST_CASE("argument order never matters") {
    oracles::Rng rng(11);
    for (int n = 2; n <= 4; ++n) {
        const std::uint64_t ground = std::uint64_t{1} << n;
        const BaseGraph g = oracles::random_graph(n, rng);
        for (std::uint64_t a = 0; a < ground; ++a)
            for (std::uint64_t b = a + 1; b < ground; ++b)
                for (std::uint64_t c = b + 1; c < ground; ++c) {
                    std::array<TVertex, 3> v{TVertex(a, n), TVertex(b, n), TVertex(c, n)};
                    const TripleColor expected = color_triple(g, v[0], v[1], v[2]);
                    constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                    for (const auto& p : perms)
                        REQUIRE(color_triple(g, v[p[0]], v[p[1]], v[p[2]]) == expected);
                }
    }
}

TEST_CASE("triple tally over the whole ground set") {
    const TripleCounts counts = count_triple_colors(k2(), 2);
    CHECK(counts.c1 == 2);
    CHECK(counts.c2 == 2);
    CHECK(counts.c3 == 0);

    const TripleCounts edgeless = count_triple_colors(BaseGraph(2), 2);
    CHECK(edgeless.c3 == 4);

    CHECK_THROWS_AS(count_triple_colors(BaseGraph(7), 7), TooLarge);
    CHECK_THROWS_AS(count_triple_colors(BaseGraph(3), 2), LengthMismatch);
}

TEST_SUITE_END();
