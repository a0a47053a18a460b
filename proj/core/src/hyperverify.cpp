#include "stepup/hyperverify.hpp"

#include <sstream>

#include "stepup/probsearch.hpp"

namespace stepup {

std::vector<std::uint64_t> CliqueWitness::ranks() const {
    std::vector<std::uint64_t> out;
    out.reserve(vertices.size());
    for (const auto& v : vertices) out.push_back(v.rank());
    return out;
}

namespace {

struct ColorCliqueSearch {
    const BaseGraph& g;
    std::uint64_t ground; // 2^n
    int size;
    TripleColor target;
    std::vector<std::uint64_t> current;

    bool extend_ok(std::uint64_t v) const {
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                if (color_triple_ranks(g, current[i], current[j], v) != target) return false;
        return true;
    }

    // ascending DFS: the first completed clique is the rank-lexicographic least
    bool dfs(std::uint64_t start) {
        if (current.size() == static_cast<std::size_t>(size)) return true;
        for (std::uint64_t v = start; v < ground; ++v) {
            if (ground - v < size - current.size()) break;
            if (!extend_ok(v)) continue;
            current.push_back(v);
            if (dfs(v + 1)) return true;
            current.pop_back();
        }
        return false;
    }
};

void check_guards(const BaseGraph& g, int n, int max_log) {
    if (n < 1) throw DomainError("hyperverify: n must be positive");
    if (n > max_log)
        throw TooLarge("hyperverify: 2^" + std::to_string(n) + " ground-set vertices exceed the 2^" +
                       std::to_string(max_log) + " guard");
    if (g.vertex_count() != n)
        throw LengthMismatch("hyperverify: base graph order " + std::to_string(g.vertex_count()) +
                             " differs from n = " + std::to_string(n));
}

} // namespace

std::optional<CliqueWitness> find_mono_clique_in_color(const BaseGraph& g, int n, int size,
                                                       TripleColor color, int max_log) {
    check_guards(g, n, max_log);
    if (size < 1) throw DomainError("find_mono_clique: size must be positive");
    const std::uint64_t ground = std::uint64_t{1} << n;
    if (static_cast<std::uint64_t>(size) > ground) return std::nullopt;
    if (size <= 2) {
        // no triple to constrain: the least vertices form a vacuous clique
        CliqueWitness w;
        w.color = color;
        for (int i = 0; i < size; ++i) w.vertices.emplace_back(i, n);
        return w;
    }
    ColorCliqueSearch search{g, ground, size, color, {}};
    if (!search.dfs(0)) return std::nullopt;
    CliqueWitness w;
    w.color = color;
    for (std::uint64_t r : search.current) w.vertices.emplace_back(r, n);
    return w;
}

std::optional<CliqueWitness> find_mono_clique(const BaseGraph& g, int n, int size, int max_log) {
    std::optional<CliqueWitness> best;
    for (TripleColor color : {TripleColor::C1, TripleColor::C2, TripleColor::C3}) {
        auto candidate = find_mono_clique_in_color(g, n, size, color, max_log);
        if (!candidate) continue;
        if (!best || candidate->ranks() < best->ranks()) best = std::move(candidate);
        // equal rank sequences resolve to the earlier colour, which the
        // iteration order already guarantees
    }
    return best;
}

VerifyReport verify_no_mono_clique(const BaseGraph& g, int n, int l, int max_log) {
    if (l < 1) throw DomainError("verify_no_mono_clique: l must be positive");
    VerifyReport report;
    report.counts = count_triple_colors(g, n, max_log);
    if (l + 1 <= 2) {
        report.pass = true; // cliques of size <= 2 contain no triple
        return report;
    }
    report.witness = find_mono_clique(g, n, l + 1, max_log);
    report.pass = !report.witness.has_value();
    return report;
}

std::string to_text(const VerifyReport& report) {
    std::ostringstream os;
    os << "result: " << (report.pass ? "pass" : "fail") << '\n';
    if (report.witness) {
        os << "witness_color: " << to_string(report.witness->color) << '\n';
        os << "witness_ranks:";
        for (std::uint64_t r : report.witness->ranks()) os << ' ' << r;
        os << '\n';
    }
    os << "triples_c1: " << report.counts.c1 << '\n';
    os << "triples_c2: " << report.counts.c2 << '\n';
    os << "triples_c3: " << report.counts.c3 << '\n';
    return os.str();
}

bool structural_verify(const BaseGraph& g, int l, const std::vector<BaseGraph>& jpp_family) {
    if (jpp_family.empty()) throw EmptyFamily("structural_verify: pattern family is empty");
    if (has_clique(g, l)) return false;
    const BaseGraph co = complement(g);
    for (const BaseGraph& pattern : jpp_family)
        if (contains_subgraph(co, pattern)) return false;
    return true;
}

} // namespace stepup
