#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stepup/base_graph.hpp"
#include "stepup/coloring.hpp"
#include "stepup/tvertex.hpp"

namespace stepup {

/// A monochromatic clique in the step-up colouring: every triple of the
/// listed vertices (strictly increasing) carries `color`.
struct CliqueWitness {
    TripleColor color = TripleColor::C1;
    std::vector<TVertex> vertices;

    std::vector<std::uint64_t> ranks() const;
};

/// Lexicographically least clique of `size` vertices lying entirely in one
/// colour class of the step-up colouring of g, searching all 2^n ground-set
/// vertices; empty if no colour class has one. Witnesses are ordered by
/// their rank sequence first, then by colour C1 < C2 < C3. Cliques of size
/// <= 2 contain no triple, so every colour holds them vacuously and the
/// least witness is returned. Exact backtracking; throws TooLarge when
/// n > max_log.
std::optional<CliqueWitness> find_mono_clique(const BaseGraph& g, int n, int size,
                                              int max_log = kDefaultStepupLogLimit);

/// Least clique within one fixed colour class, or empty. Building block of
/// find_mono_clique, exposed for targeted testing of the per-colour
/// arguments.
std::optional<CliqueWitness> find_mono_clique_in_color(const BaseGraph& g, int n, int size,
                                                       TripleColor color,
                                                       int max_log = kDefaultStepupLogLimit);

struct VerifyReport {
    bool pass = false;
    std::optional<CliqueWitness> witness;
    TripleCounts counts;
};

/// Does any colour class of the step-up colouring of g contain a clique of
/// size l+1? Cliques of size <= 2 are triple-free, so l <= 1 passes
/// vacuously. Also tallies the colour of every triple.
VerifyReport verify_no_mono_clique(const BaseGraph& g, int n, int l,
                                   int max_log = kDefaultStepupLogLimit);

/// Fixed-field text form of a report:
///   result: pass|fail
///   witness_color: / witness_ranks:   (failures only)
///   triples_c1/c2/c3:
std::string to_text(const VerifyReport& report);

/// True iff g has no K_l and complement(g) contains none of the patterns as
/// an ordinary subgraph. The family must hold the pruned patterns of every
/// order in [ceil(log2(l+1)), l]; a true result then certifies that the
/// step-up colouring on 2^n vertices has no monochromatic clique of size
/// l+1. Throws EmptyFamily on an empty family.
bool structural_verify(const BaseGraph& g, int l, const std::vector<BaseGraph>& jpp_family);

} // namespace stepup
