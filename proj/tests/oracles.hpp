#pragma once

// Test-only reference implementations. Deliberately naive and written
// independently of the library code they cross-check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "stepup/base_graph.hpp"
#include "stepup/tvertex.hpp"

namespace oracles {

// splitmix64; explicit so results do not depend on any stdlib distribution
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t x = (state += 0x9e3779b97f4a7c15ull);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }
    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// all graphs on n vertices are indexed by a bitmask over pairs in
// lexicographic order: (1,2), (1,3), ..., (n-1,n)
inline stepup::BaseGraph graph_from_mask(int n, std::uint64_t mask) {
    stepup::BaseGraph g(n);
    int bit = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

inline stepup::BaseGraph random_graph(int n, Rng& rng, int density_percent = 50) {
    stepup::BaseGraph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.below(100) < static_cast<std::uint64_t>(density_percent)) g.add_edge(i, j);
    return g;
}

// largest clique by checking every vertex subset
inline int naive_max_clique_size(const stepup::BaseGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        bool clique = true;
        for (int i = 0; i < n && clique; ++i) {
            if (!((subset >> i) & 1)) continue;
            for (int j = i + 1; j < n && clique; ++j) {
                if (!((subset >> j) & 1)) continue;
                if (!g.has_edge(i + 1, j + 1)) clique = false;
            }
        }
        if (clique) best = std::max(best, std::popcount(subset));
    }
    return best;
}

// every injective assignment of pattern vertices to host vertices
inline bool naive_contains_subgraph(const stepup::BaseGraph& host,
                                    const stepup::BaseGraph& pattern) {
    const int hn = host.vertex_count();
    const int pk = pattern.vertex_count();
    if (pk > hn) return false;
    std::vector<int> assign(pk, 0);
    while (true) {
        bool injective = true;
        for (int i = 0; i < pk && injective; ++i)
            for (int j = i + 1; j < pk && injective; ++j)
                if (assign[i] == assign[j]) injective = false;
        if (injective) {
            bool embeds = true;
            for (int i = 1; i <= pk && embeds; ++i)
                for (int j = i + 1; j <= pk && embeds; ++j)
                    if (pattern.has_edge(i, j) && !host.has_edge(assign[i - 1] + 1, assign[j - 1] + 1))
                        embeds = false;
            if (embeds) return true;
        }
        int pos = pk - 1;
        while (pos >= 0 && assign[pos] == hn - 1) assign[pos--] = 0;
        if (pos < 0) return false;
        ++assign[pos];
    }
}

// a value sequence is a delta sequence of some chain iff consecutive equal
// occurrences are separated by a strictly larger value
inline bool is_realizable_delta(const std::vector<int>& values) {
    const int len = static_cast<int>(values.size());
    for (int i = 0; i < len; ++i) {
        int running_max = 0;
        for (int j = i + 1; j < len; ++j) {
            if (values[j] == values[i]) {
                if (running_max <= values[i]) return false;
                break;
            }
            running_max = std::max(running_max, values[j]);
        }
    }
    return true;
}

// sorted distinct ranks -> chain of vertices
inline std::vector<stepup::TVertex> chain_from_ranks(const std::vector<std::uint64_t>& ranks,
                                                     int n) {
    std::vector<stepup::TVertex> chain;
    chain.reserve(ranks.size());
    for (std::uint64_t r : ranks) chain.emplace_back(r, n);
    return chain;
}

// random strictly increasing chain of `size` distinct ranks below 2^n
inline std::vector<stepup::TVertex> random_chain(int n, int size, Rng& rng) {
    const std::uint64_t ground = std::uint64_t{1} << n;
    std::vector<std::uint64_t> ranks;
    while (static_cast<int>(ranks.size()) < size) {
        const std::uint64_t r = rng.below(ground);
        if (std::find(ranks.begin(), ranks.end(), r) == ranks.end()) ranks.push_back(r);
    }
    std::sort(ranks.begin(), ranks.end());
    return chain_from_ranks(ranks, n);
}

} // namespace oracles
