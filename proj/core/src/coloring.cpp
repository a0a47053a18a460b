#include "stepup/coloring.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace stepup {

const char* to_string(TripleColor c) {
    switch (c) {
        case TripleColor::C1: return "C1";
        case TripleColor::C2: return "C2";
        case TripleColor::C3: return "C3";
    }
    return "?";
}

TripleColor color_triple_ranks(const BaseGraph& g, std::uint64_t r1, std::uint64_t r2,
                               std::uint64_t r3) {
    const int d1 = std::bit_width(r1 ^ r2);
    const int d2 = std::bit_width(r2 ^ r3);
    if (!g.has_edge(d1, d2)) return TripleColor::C3;
    return d1 < d2 ? TripleColor::C1 : TripleColor::C2;
}

TripleColor color_triple(const BaseGraph& g, const TVertex& a, const TVertex& b, const TVertex& c) {
    if (a.n() != b.n() || b.n() != c.n())
        throw LengthMismatch("color_triple: vertices have differing component counts");
    if (g.vertex_count() != a.n())
        throw LengthMismatch("color_triple: base graph has " + std::to_string(g.vertex_count()) +
                             " vertices, triple lives on n = " + std::to_string(a.n()));
    std::uint64_t r[3] = {a.rank(), b.rank(), c.rank()};
    std::sort(r, r + 3);
    if (r[0] == r[1] || r[1] == r[2])
        throw DuplicateVertex("color_triple: triple contains a repeated vertex");
    return color_triple_ranks(g, r[0], r[1], r[2]);
}

TripleCounts count_triple_colors(const BaseGraph& g, int n, int max_log) {
    if (n < 1) throw DomainError("count_triple_colors: n must be positive");
    if (n > max_log)
        throw TooLarge("count_triple_colors: 2^" + std::to_string(n) +
                       " ground-set vertices exceed the 2^" + std::to_string(max_log) + " guard");
    if (g.vertex_count() != n)
        throw LengthMismatch("count_triple_colors: base graph order differs from n");
    const std::uint64_t N = std::uint64_t{1} << n;
    TripleCounts counts;
    for (std::uint64_t x = 0; x < N; ++x)
        for (std::uint64_t y = x + 1; y < N; ++y)
            for (std::uint64_t z = y + 1; z < N; ++z) {
                switch (color_triple_ranks(g, x, y, z)) {
                    case TripleColor::C1: ++counts.c1; break;
                    case TripleColor::C2: ++counts.c2; break;
                    case TripleColor::C3: ++counts.c3; break;
                }
            }
    return counts;
}

} // namespace stepup
