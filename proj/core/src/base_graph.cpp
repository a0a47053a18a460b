#include "stepup/base_graph.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace stepup {

BaseGraph::BaseGraph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 1)
        throw DomainError("BaseGraph: vertex count must be positive, got " +
                          std::to_string(vertex_count));
    words_ = (n_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

BaseGraph BaseGraph::complete(int vertex_count) {
    BaseGraph g(vertex_count);
    for (int i = 1; i <= vertex_count; ++i)
        for (int j = i + 1; j <= vertex_count; ++j) g.add_edge(i, j);
    return g;
}

void BaseGraph::check_endpoint(int v) const {
    if (v < 1 || v > n_)
        throw DomainError("BaseGraph: vertex " + std::to_string(v) + " out of range 1.." +
                          std::to_string(n_));
}

void BaseGraph::add_edge(int i, int j) {
    check_endpoint(i);
    check_endpoint(j);
    if (i == j) throw DomainError("BaseGraph: loop at vertex " + std::to_string(i));
    if (has_edge(i, j)) return;
    bits_[static_cast<std::size_t>(i - 1) * words_ + (j - 1) / 64] |= std::uint64_t{1}
                                                                      << ((j - 1) % 64);
    bits_[static_cast<std::size_t>(j - 1) * words_ + (i - 1) / 64] |= std::uint64_t{1}
                                                                      << ((i - 1) % 64);
    ++edges_;
}

bool BaseGraph::has_edge(int i, int j) const {
    check_endpoint(i);
    check_endpoint(j);
    if (i == j) return false;
    return (bits_[static_cast<std::size_t>(i - 1) * words_ + (j - 1) / 64] >> ((j - 1) % 64)) & 1;
}

std::vector<std::pair<int, int>> BaseGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

int BaseGraph::degree(int i) const {
    check_endpoint(i);
    int deg = 0;
    for (std::uint64_t w : row(i)) deg += std::popcount(w);
    return deg;
}

BaseGraph complement(const BaseGraph& g) {
    BaseGraph c(g.vertex_count());
    for (int i = 1; i <= g.vertex_count(); ++i)
        for (int j = i + 1; j <= g.vertex_count(); ++j)
            if (!g.has_edge(i, j)) c.add_edge(i, j);
    return c;
}

void write_graph(std::ostream& os, const BaseGraph& g) {
    os << "n " << g.vertex_count() << '\n';
    for (auto [i, j] : g.edges()) os << "e " << i << ' ' << j << '\n';
}

BaseGraph parse_graph(std::istream& is) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> pending;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "n") {
            if (n != -1) throw ParseError("graph: duplicate 'n' line at line " + std::to_string(line_no));
            if (!(ls >> n) || n < 1) throw ParseError("graph: bad vertex count at line " + std::to_string(line_no));
        } else if (tag == "e") {
            int i = 0, j = 0;
            if (!(ls >> i >> j)) throw ParseError("graph: bad edge at line " + std::to_string(line_no));
            if (i >= j) throw ParseError("graph: edge endpoints must satisfy i < j at line " +
                                         std::to_string(line_no));
            pending.emplace_back(i, j);
        } else {
            throw ParseError("graph: unknown line tag '" + tag + "' at line " + std::to_string(line_no));
        }
    }
    if (n == -1) throw ParseError("graph: missing 'n' header line");
    BaseGraph g(n);
    for (auto [i, j] : pending) {
        if (i < 1 || j > n) throw ParseError("graph: edge endpoint out of range");
        if (g.has_edge(i, j)) throw ParseError("graph: duplicate edge " + std::to_string(i) + " " +
                                               std::to_string(j));
        g.add_edge(i, j);
    }
    return g;
}

std::string to_text(const BaseGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

BaseGraph graph_from_text(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

} // namespace stepup
