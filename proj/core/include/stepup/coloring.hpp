#pragma once

#include <cstdint>

#include "stepup/base_graph.hpp"
#include "stepup/tvertex.hpp"

namespace stepup {

/// Default guard on the step-up ground set: 2^n <= 64 vertices.
inline constexpr int kDefaultStepupLogLimit = 6;

enum class TripleColor { C1, C2, C3 };

const char* to_string(TripleColor c);

/// Colour of the triple {a, b, c} under the base graph g. After sorting the
/// arguments so that a < b < c, with d1 = delta(a,b) and d2 = delta(b,c):
/// C1 if {d1,d2} is an edge of g and d1 < d2, C2 if it is an edge and
/// d1 > d2, C3 if it is not an edge. Independent of argument order.
/// Throws DuplicateVertex / LengthMismatch.
TripleColor color_triple(const BaseGraph& g, const TVertex& a, const TVertex& b, const TVertex& c);

/// Same rule on raw ranks r1 < r2 < r3. No validation; used by the searchers.
TripleColor color_triple_ranks(const BaseGraph& g, std::uint64_t r1, std::uint64_t r2,
                               std::uint64_t r3);

struct TripleCounts {
    std::uint64_t c1 = 0;
    std::uint64_t c2 = 0;
    std::uint64_t c3 = 0;
};

/// Colour tally over all triples of the full 2^n-vertex ground set.
/// Throws TooLarge when n > max_log (the 2^n <= 64 guard by default).
TripleCounts count_triple_colors(const BaseGraph& g, int n, int max_log = kDefaultStepupLogLimit);

} // namespace stepup
