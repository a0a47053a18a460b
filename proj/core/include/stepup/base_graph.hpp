#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stepup/errors.hpp"

namespace stepup {

/// Simple undirected graph on the vertex set {1,...,n}. No loops, no
/// multi-edges. Adjacency is stored as one bitset row per vertex so that
/// clique and subgraph searches can intersect rows word-wise. The same type
/// doubles as the base graph G, its complement, and as pattern graphs.
class BaseGraph {
  public:
    explicit BaseGraph(int vertex_count);

    static BaseGraph complete(int vertex_count);

    int vertex_count() const { return n_; }
    int edge_count() const { return edges_; }

    /// Endpoints are 1-based; order does not matter. Throws DomainError on
    /// loops or out-of-range endpoints. Adding an existing edge is a no-op.
    void add_edge(int i, int j);

    bool has_edge(int i, int j) const;

    /// Edges as (i, j) pairs with i < j, sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Degree of vertex i (1-based).
    int degree(int i) const;

    /// Adjacency row of vertex i (1-based): bit j-1 set iff {i,j} is an edge.
    std::span<const std::uint64_t> row(int i) const {
        return {bits_.data() + static_cast<std::size_t>(i - 1) * words_,
                static_cast<std::size_t>(words_)};
    }

    /// Words per adjacency row.
    int words() const { return words_; }

    bool operator==(const BaseGraph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

  private:
    void check_endpoint(int v) const;

    int n_;
    int words_;
    int edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Same vertices; a pair is an edge iff it was not one in g.
BaseGraph complement(const BaseGraph& g);

/// Text format shared by the whole toolkit and bit-exact for the CLI:
///   # comment lines are ignored
///   n <vertex_count>
///   e <i> <j>          (i < j, each edge listed once)
void write_graph(std::ostream& os, const BaseGraph& g);
BaseGraph parse_graph(std::istream& is);

std::string to_text(const BaseGraph& g);
BaseGraph graph_from_text(const std::string& text);

} // namespace stepup
