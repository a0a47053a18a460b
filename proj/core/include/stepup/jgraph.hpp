#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "stepup/base_graph.hpp"
#include "stepup/tvertex.hpp"

namespace stepup {

inline constexpr int kDefaultEnumerateJppMax = 7;
inline constexpr int kDefaultCanonicalMax = 10;

/// A sequence of delta values, either extracted from a strictly increasing
/// chain of vertices or given synthetically. Synthetic values must form a
/// genuine delta sequence: between any two occurrences of the same value a
/// strictly larger value occurs (this also rules out equal neighbours).
/// Sequences violating that condition cannot arise from any chain, and the
/// region process's exact bookkeeping does not apply to them.
class DeltaSequence {
  public:
    /// Validating constructor for synthetic sequences. Throws DomainError.
    static DeltaSequence from_values(std::vector<int> values);

    const std::vector<int>& values() const { return values_; }
    int length() const { return static_cast<int>(values_.size()); }

    /// Distinct values in descending order; index k-1 holds the value of
    /// pattern vertex k, so vertex 1 is always the class of the maximum.
    std::vector<int> distinct_values_desc() const;

    int distinct_count() const;

    const std::optional<std::vector<TVertex>>& source() const { return source_; }

  private:
    friend DeltaSequence extract_delta_sequence(const std::vector<TVertex>& chain);
    DeltaSequence() = default;

    std::vector<int> values_;
    std::optional<std::vector<TVertex>> source_;
};

/// Consecutive deltas of a strictly increasing chain (length >= 2).
/// Throws NotAChain.
DeltaSequence extract_delta_sequence(const std::vector<TVertex>& chain);

/// The graph J on the d distinct values of seq (vertex k = k-th largest
/// value). {u, v} is an edge iff some split r < s <= t of the positions has
/// {max over [r, s), max over [s, t]} = {u, v}; interval maxima realise the
/// deltas of non-consecutive chain pairs. Pairs whose maxima coincide are
/// discarded.
BaseGraph build_J(const DeltaSequence& seq);

/// One region of one round of the pruning process: a maximal run of
/// positions (1-based, inclusive) whose values are not yet selected, plus
/// the position/value chosen inside it.
struct JppRegion {
    int lo = 0;
    int hi = 0;
    int rep_pos = 0;
    int rep_value = 0;
};

struct JppRound {
    std::vector<JppRegion> regions;
};

/// Result of the region-partition process: the pruned pattern graph plus
/// the full trace. Invariants (checked by edge_count_identity and tests):
/// t is strictly increasing with t[0] = 1 and t[m-1] = d; the pattern has
/// exactly d*m - sum(t) edges; the class of the maximum (vertex 1) is
/// adjacent to every other class.
struct JppResult {
    BaseGraph pattern;               // d vertices, vertex k = class_values[k-1]
    std::vector<int> class_values;   // distinct values, descending
    int d = 0;
    int m = 0;
    std::vector<int> t;              // distinct selected classes after each round
    std::vector<JppRound> rounds;
};

/// Run the process on seq. Round 1 selects the maximum value at its
/// leftmost occurrence. Each later round partitions the positions whose
/// classes are still unselected into maximal runs (every occurrence of a
/// selected class splits runs), selects in each run the leftmost occurrence
/// of its largest value, then joins every class that is still unselected to
/// the representative of the first run containing one of its occurrences.
/// Stops at the first round m with t_m = d.
JppResult build_jpp(const DeltaSequence& seq);

/// Returns d*m - sum(t) and checks it equals the pattern's edge count.
/// Throws InconsistentTrace if not (that would be a bug, not bad input).
std::uint64_t edge_count_identity(const JppResult& r);

/// The closed-form intermediate lower bound on the pattern edge count plus
/// its regime classification. Reporting-grade: i0 = log2(d - m + 1) is kept
/// real-valued; the exact integer bookkeeping lives in JppResult.
struct ClosedFormBound {
    double value = 0;           // d*i0 + (m-i0)(m-i0-1)/2 - 2(d-m+1)
    double i0 = 0;              // log2(d - m + 1)
    bool large_overlap = false; // d - m + 1 >= (1/2) log2(l+1)
    double asymptotic_form = 0; // regime-dependent form, for reporting only
};

/// Throws DomainError when d < m, m < 1, or l < 2.
ClosedFormBound closed_form_lower_bound(int d, int m, int l);

/// Canonical label under graph isomorphism: the lexicographically smallest
/// packed upper-triangle adjacency bitstring over all vertex permutations.
/// Two graphs get equal labels iff they are isomorphic. Exhaustive, so
/// guarded at max_n vertices.
struct CanonicalLabel {
    int n = 0;
    std::uint64_t bits = 0;
    auto operator<=>(const CanonicalLabel&) const = default;
};

CanonicalLabel canonical_form(const BaseGraph& g, int max_n = kDefaultCanonicalMax);

/// The graph relabelled by a permutation realising its canonical label.
BaseGraph canonical_relabel(const BaseGraph& g, int max_n = kDefaultCanonicalMax);

/// Every isomorphism class the pruning process can produce on d classes.
/// Patterns are generated by layering the classes by selection round (one
/// class in round 1, at most two in round 2, any number later, because two
/// same-round runs may select the same class) and giving each class exactly
/// one neighbour in every earlier layer. Every build_jpp output on any
/// sequence with d distinct values is isomorphic to a member. Returned as
/// canonical representatives sorted by label; the count is at most d^d.
/// Throws TooLarge past max_d.
std::vector<BaseGraph> enumerate_jpp(int d, int max_d = kDefaultEnumerateJppMax);

/// Pattern edges translated from vertex indices to class values.
std::vector<std::pair<int, int>> pattern_edges_by_value(const BaseGraph& pattern,
                                                        const std::vector<int>& class_values);

} // namespace stepup
