#include "stepup/jgraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace stepup {

namespace {

// Between two occurrences of the same value a strictly larger one must
// occur, otherwise no chain of binary strings realises the sequence.
void validate_delta_values(const std::vector<int>& values) {
    if (values.empty()) throw DomainError("DeltaSequence: empty sequence");
    for (int v : values)
        if (v < 1) throw DomainError("DeltaSequence: values must be positive indices");
    const int len = static_cast<int>(values.size());
    for (int i = 0; i < len; ++i) {
        int running_max = 0;
        for (int j = i + 1; j < len; ++j) {
            if (values[j] == values[i]) {
                if (running_max <= values[i])
                    throw DomainError(
                        "DeltaSequence: occurrences of value " + std::to_string(values[i]) +
                        " at positions " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " are not separated by a larger value; no chain realises this");
                break; // only consecutive occurrences need checking
            }
            running_max = std::max(running_max, values[j]);
        }
    }
}

int class_index(const std::vector<int>& classes_desc, int value) {
    auto it = std::lower_bound(classes_desc.begin(), classes_desc.end(), value, std::greater<int>());
    return static_cast<int>(it - classes_desc.begin()) + 1; // 1-based pattern vertex
}

} // namespace

DeltaSequence DeltaSequence::from_values(std::vector<int> values) {
    validate_delta_values(values);
    DeltaSequence seq;
    seq.values_ = std::move(values);
    return seq;
}

std::vector<int> DeltaSequence::distinct_values_desc() const {
    std::vector<int> out(values_);
    std::sort(out.begin(), out.end(), std::greater<int>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int DeltaSequence::distinct_count() const {
    return static_cast<int>(distinct_values_desc().size());
}

DeltaSequence extract_delta_sequence(const std::vector<TVertex>& chain) {
    if (chain.size() < 2) throw NotAChain("extract_delta_sequence: chain needs at least 2 vertices");
    std::vector<int> values;
    values.reserve(chain.size() - 1);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (compare(chain[i], chain[i + 1]) != Ordering::LT)
            throw NotAChain("extract_delta_sequence: chain is not strictly increasing at position " +
                            std::to_string(i + 1));
        values.push_back(delta(chain[i], chain[i + 1]));
    }
    DeltaSequence seq;
    seq.values_ = std::move(values);
    seq.source_ = chain;
    return seq;
}

BaseGraph build_J(const DeltaSequence& seq) {
    const auto& vals = seq.values();
    const int len = seq.length();
    const auto classes = seq.distinct_values_desc();
    BaseGraph j(static_cast<int>(classes.size()));

    // interval maxima over positions [a, b], 1-based
    std::vector<std::vector<int>> mx(len + 1, std::vector<int>(len + 1, 0));
    for (int a = 1; a <= len; ++a) {
        mx[a][a] = vals[a - 1];
        for (int b = a + 1; b <= len; ++b) mx[a][b] = std::max(mx[a][b - 1], vals[b - 1]);
    }

    for (int r = 1; r < len; ++r)
        for (int s = r + 1; s <= len; ++s)
            for (int t = s; t <= len; ++t) {
                const int left = mx[r][s - 1];
                const int right = mx[s][t];
                if (left == right) continue;
                j.add_edge(class_index(classes, left), class_index(classes, right));
            }
    return j;
}

JppResult build_jpp(const DeltaSequence& seq) {
    const auto& vals = seq.values();
    const int len = seq.length();
    const auto classes = seq.distinct_values_desc();
    const int d = static_cast<int>(classes.size());

    JppResult result{BaseGraph(d), classes, d, 0, {}, {}};

    std::set<int> selected;
    std::vector<char> joined(static_cast<std::size_t>(d) + 1, 0);

    while (static_cast<int>(selected.size()) < d) {
        JppRound round;

        // maximal runs of positions whose classes are still unselected
        int p = 1;
        while (p <= len) {
            if (selected.count(vals[p - 1])) {
                ++p;
                continue;
            }
            JppRegion region;
            region.lo = p;
            while (p <= len && !selected.count(vals[p - 1])) ++p;
            region.hi = p - 1;
            region.rep_pos = region.lo;
            for (int q = region.lo + 1; q <= region.hi; ++q)
                if (vals[q - 1] > vals[region.rep_pos - 1]) region.rep_pos = q;
            region.rep_value = vals[region.rep_pos - 1];
            round.regions.push_back(region);
        }

        for (const auto& region : round.regions) selected.insert(region.rep_value);
        result.t.push_back(static_cast<int>(selected.size()));

        // join each still-unselected class to the representative of the
        // first run containing one of its occurrences
        std::fill(joined.begin(), joined.end(), 0);
        for (const auto& region : round.regions) {
            const int rep_vertex = class_index(classes, region.rep_value);
            for (int q = region.lo; q <= region.hi; ++q) {
                const int value = vals[q - 1];
                if (selected.count(value)) continue;
                const int vertex = class_index(classes, value);
                if (joined[vertex]) continue;
                joined[vertex] = 1;
                result.pattern.add_edge(rep_vertex, vertex);
            }
        }

        result.rounds.push_back(std::move(round));
    }

    result.m = static_cast<int>(result.t.size());
    return result;
}

std::uint64_t edge_count_identity(const JppResult& r) {
    if (r.m < 1 || r.t.size() != static_cast<std::size_t>(r.m))
        throw InconsistentTrace("edge_count_identity: malformed trace");
    const std::uint64_t sum_t = std::accumulate(r.t.begin(), r.t.end(), std::uint64_t{0});
    const std::uint64_t expected = static_cast<std::uint64_t>(r.d) * r.m - sum_t;
    if (expected != static_cast<std::uint64_t>(r.pattern.edge_count()))
        throw InconsistentTrace("edge_count_identity: d*m - sum(t) = " + std::to_string(expected) +
                                " but pattern has " + std::to_string(r.pattern.edge_count()) +
                                " edges");
    return expected;
}

ClosedFormBound closed_form_lower_bound(int d, int m, int l) {
    if (m < 1) throw DomainError("closed_form_lower_bound: m must be positive");
    if (d < m) throw DomainError("closed_form_lower_bound: requires d >= m");
    if (l < 2) throw DomainError("closed_form_lower_bound: requires l >= 2");
    ClosedFormBound out;
    out.i0 = std::log2(static_cast<double>(d - m + 1));
    out.value = d * out.i0 + (m - out.i0) * (m - out.i0 - 1) / 2.0 - 2.0 * (d - m + 1);
    const double loglog = std::log2(std::log2(static_cast<double>(l) + 1.0));
    out.large_overlap = (d - m + 1) >= 0.5 * std::log2(static_cast<double>(l) + 1.0);
    if (out.large_overlap)
        out.asymptotic_form = d * (loglog - 3.0);
    else
        out.asymptotic_form = (d + 2.0 - 2.0 * loglog) * (d - loglog) / 8.0 - 2.0 * d;
    return out;
}

namespace {

// packed upper-triangle bit index for 0-based i < j on n vertices
inline int triangle_index(int n, int i, int j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::uint64_t pack_with_permutation(const std::vector<std::pair<int, int>>& edges, int n,
                                    const std::vector<int>& perm) {
    std::uint64_t bits = 0;
    for (auto [u, v] : edges) {
        int a = perm[u - 1];
        int b = perm[v - 1];
        if (a > b) std::swap(a, b);
        bits |= std::uint64_t{1} << triangle_index(n, a, b);
    }
    return bits;
}

} // namespace

CanonicalLabel canonical_form(const BaseGraph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n || n > 11)
        throw TooLarge("canonical_form: " + std::to_string(n) +
                       " vertices exceed the exhaustive-permutation guard");
    const auto edges = g.edges();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, pack_with_permutation(edges, n, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CanonicalLabel{n, best};
}

BaseGraph canonical_relabel(const BaseGraph& g, int max_n) {
    const int n = g.vertex_count();
    if (n > max_n || n > 11)
        throw TooLarge("canonical_relabel: too many vertices");
    const auto edges = g.edges();
    std::vector<int> perm(n), best_perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    best_perm = perm;
    std::uint64_t best = ~std::uint64_t{0};
    do {
        const std::uint64_t packed = pack_with_permutation(edges, n, perm);
        if (packed < best) {
            best = packed;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    BaseGraph out(n);
    for (auto [u, v] : edges) out.add_edge(best_perm[u - 1] + 1, best_perm[v - 1] + 1);
    return out;
}

namespace {

// The shape of every pruned pattern: classes layered by selection round.
// Round 1 holds exactly one class (the whole sequence is a single run) and
// round 2 at most two (the unique maximum splits it into at most two runs).
// While a class stays unselected it gains exactly one edge per round, to a
// class selected in that round, so a pattern is fixed by the layer sizes
// plus each vertex's choice of one neighbour in every earlier layer. Two
// same-round runs may select the same class, which is why the layers are
// not bounded by a binary splitting.
struct LayeredEnumerator {
    int d;
    std::set<CanonicalLabel> seen;
    std::vector<BaseGraph> out;
    std::vector<int> sizes;  // classes selected per round
    std::vector<int> starts; // first 0-based vertex id of each layer

    void run() {
        sizes = {1};
        compose(d - 1);
    }

    void compose(int remaining) {
        if (remaining == 0) {
            starts.assign(sizes.size(), 0);
            for (std::size_t j = 1; j < sizes.size(); ++j)
                starts[j] = starts[j - 1] + sizes[j - 1];
            BaseGraph g(d);
            assign_layer(1, g);
            return;
        }
        const int cap = sizes.size() == 1 ? std::min(2, remaining) : remaining;
        for (int s = 1; s <= cap; ++s) {
            sizes.push_back(s);
            compose(remaining - s);
            sizes.pop_back();
        }
    }

    void assign_layer(std::size_t layer, const BaseGraph& g) {
        if (layer == sizes.size()) {
            const auto label = canonical_form(g, 11);
            if (seen.insert(label).second) out.push_back(canonical_relabel(g, 11));
            return;
        }
        // all possible neighbour tuples: one vertex from each earlier layer
        std::vector<std::vector<int>> tuples{{}};
        for (std::size_t i = 0; i < layer; ++i) {
            std::vector<std::vector<int>> next;
            for (const auto& t : tuples)
                for (int k = 0; k < sizes[i]; ++k) {
                    auto copy = t;
                    copy.push_back(starts[i] + k);
                    next.push_back(std::move(copy));
                }
            tuples = std::move(next);
        }
        // vertices within one layer are interchangeable: a nondecreasing
        // tuple-index assignment is enough up to isomorphism
        choose_tuples(layer, 0, 0, tuples, g);
    }

    void choose_tuples(std::size_t layer, int slot, int min_tuple,
                       const std::vector<std::vector<int>>& tuples, const BaseGraph& g) {
        if (slot == sizes[layer]) {
            assign_layer(layer + 1, g);
            return;
        }
        const int vertex = starts[layer] + slot;
        for (int t = min_tuple; t < static_cast<int>(tuples.size()); ++t) {
            BaseGraph next = g;
            for (int parent : tuples[t]) next.add_edge(vertex + 1, parent + 1);
            choose_tuples(layer, slot + 1, t, tuples, next);
        }
    }
};

} // namespace

std::vector<BaseGraph> enumerate_jpp(int d, int max_d) {
    if (d < 1) throw DomainError("enumerate_jpp: d must be positive");
    if (d > max_d)
        throw TooLarge("enumerate_jpp: d = " + std::to_string(d) + " exceeds limit " +
                       std::to_string(max_d));
    LayeredEnumerator enumerator;
    enumerator.d = d;
    enumerator.run();
    std::sort(enumerator.out.begin(), enumerator.out.end(),
              [](const BaseGraph& a, const BaseGraph& b) {
                  return canonical_form(a, 11) < canonical_form(b, 11);
              });
    return enumerator.out;
}

std::vector<std::pair<int, int>> pattern_edges_by_value(const BaseGraph& pattern,
                                                        const std::vector<int>& class_values) {
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : pattern.edges())
        out.emplace_back(class_values[i - 1], class_values[j - 1]);
    return out;
}

} // namespace stepup
