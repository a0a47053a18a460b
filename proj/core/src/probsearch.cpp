#include "stepup/probsearch.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace stepup {

PaperParams paper_params(int l, double c) {
    if (c <= 0 || c > 0.25)
        throw DomainError("paper_params: c must lie in (0, 1/4], got " + std::to_string(c));
    if (l < 5)
        throw DegenerateParams("paper_params: l = " + std::to_string(l) +
                               " is below the formulas' valid range (l >= 5)");
    const double log_l = std::log2(static_cast<double>(l));
    const double loglog_l = std::log2(log_l);
    const double n_real = std::pow(static_cast<double>(l), c * loglog_l);
    const double p = 1.0 - (log_l * loglog_l) / static_cast<double>(l);
    if (!(p > 0.0 && p < 1.0))
        throw DegenerateParams("paper_params: p = " + std::to_string(p) + " is outside (0,1)");
    if (n_real > 1e9) throw TooLarge("paper_params: n exceeds 10^9");
    const int n = static_cast<int>(std::ceil(n_real));
    if (n < 2) throw DegenerateParams("paper_params: n < 2");
    return PaperParams{n, p};
}

namespace {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// uniform in [0, 1), 53 significant bits, platform-independent
inline double stream_unit(std::uint64_t seed, std::uint64_t attempt, std::uint64_t counter) {
    const std::uint64_t h = mix64(mix64(mix64(seed) ^ attempt) ^ counter);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

} // namespace

BaseGraph sample_graph(int n, double p, std::uint64_t seed, unsigned attempt) {
    if (n < 1) throw DomainError("sample_graph: n must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("sample_graph: p must lie in [0,1]");
    BaseGraph g(n);
    std::uint64_t pair_index = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++pair_index)
            if (stream_unit(seed, attempt, pair_index) < p) g.add_edge(i, j);
    return g;
}

namespace {

constexpr int kMaxWords = (kDefaultCliqueSearchMax + 63) / 64;

struct WordSet {
    std::uint64_t w[kMaxWords] = {};

    bool empty(int words) const {
        for (int k = 0; k < words; ++k)
            if (w[k]) return false;
        return true;
    }
    bool test(int v) const { return (w[v / 64] >> (v % 64)) & 1; }
    void set(int v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(int v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    int count(int words) const {
        int c = 0;
        for (int k = 0; k < words; ++k) c += std::popcount(w[k]);
        return c;
    }
    int first(int words) const {
        for (int k = 0; k < words; ++k)
            if (w[k]) return k * 64 + std::countr_zero(w[k]);
        return -1;
    }
};

// Branch-and-bound K_l decision. Candidates are greedily coloured; classes
// are independent sets, so a clique takes at most one vertex per class and
// the class index bounds the best extension.
struct CliqueDecider {
    const BaseGraph& g;
    int n;
    int words;
    int target;
    std::vector<WordSet> adj; // 0-based rows

    explicit CliqueDecider(const BaseGraph& graph, int l)
        : g(graph), n(graph.vertex_count()), words((graph.vertex_count() + 63) / 64), target(l) {
        adj.resize(n);
        for (int v = 0; v < n; ++v) {
            auto row = g.row(v + 1);
            for (int k = 0; k < words; ++k) adj[v].w[k] = row[k];
        }
    }

    bool expand(WordSet p, int current) {
        if (current == target) return true;
        if (p.count(words) + current < target) return false;

        // greedy colouring of the candidate set
        std::vector<int> verts, colors;
        verts.reserve(32);
        colors.reserve(32);
        WordSet uncoloured = p;
        int color = 0;
        while (!uncoloured.empty(words)) {
            ++color;
            WordSet cls = uncoloured;
            while (!cls.empty(words)) {
                const int v = cls.first(words);
                verts.push_back(v);
                colors.push_back(color);
                uncoloured.reset(v);
                cls.reset(v);
                for (int k = 0; k < words; ++k) cls.w[k] &= ~adj[v].w[k];
            }
        }

        for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
            if (current + colors[i] < target) return false;
            const int v = verts[i];
            WordSet next;
            for (int k = 0; k < words; ++k) next.w[k] = p.w[k] & adj[v].w[k];
            if (expand(next, current + 1)) return true;
            p.reset(v);
        }
        return false;
    }

    bool run() {
        if (target > n) return false;
        WordSet all;
        for (int v = 0; v < n; ++v) all.set(v);
        return expand(all, 0);
    }
};

} // namespace

bool has_clique(const BaseGraph& g, int l, int max_n) {
    if (l < 1) throw DomainError("has_clique: l must be positive");
    if (g.vertex_count() > max_n || g.vertex_count() > kDefaultCliqueSearchMax)
        throw TooLarge("has_clique: graph order " + std::to_string(g.vertex_count()) +
                       " exceeds guard " + std::to_string(std::min(max_n, kDefaultCliqueSearchMax)));
    if (l == 1) return g.vertex_count() >= 1;
    CliqueDecider decider(g, l);
    return decider.run();
}

bool contains_subgraph(const BaseGraph& host, const BaseGraph& pattern, int max_pattern) {
    const int pk = pattern.vertex_count();
    const int hn = host.vertex_count();
    if (pk > max_pattern)
        throw TooLarge("contains_subgraph: pattern order " + std::to_string(pk) + " exceeds guard " +
                       std::to_string(max_pattern));
    if (pk > hn) return false;

    // order pattern vertices: highest degree first, then most neighbours
    // among already-ordered vertices
    std::vector<int> order;
    order.reserve(pk);
    std::vector<char> placed(pk + 1, 0);
    for (int step = 0; step < pk; ++step) {
        int best = -1, best_connected = -1, best_degree = -1;
        for (int u = 1; u <= pk; ++u) {
            if (placed[u]) continue;
            int connected = 0;
            for (int w : order)
                if (pattern.has_edge(u, w)) ++connected;
            const int deg = pattern.degree(u);
            if (connected > best_connected ||
                (connected == best_connected && deg > best_degree)) {
                best = u;
                best_connected = connected;
                best_degree = deg;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }

    std::vector<int> map(pk + 1, 0);     // pattern vertex -> host vertex
    std::vector<char> used(hn + 1, 0);

    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == pk) return true;
        const int u = order[depth];
        const int u_degree = pattern.degree(u);
        for (int v = 1; v <= hn; ++v) {
            if (used[v] || host.degree(v) < u_degree) continue;
            bool ok = true;
            for (int earlier = 0; earlier < depth && ok; ++earlier) {
                const int w = order[earlier];
                if (pattern.has_edge(u, w) && !host.has_edge(map[w], v)) ok = false;
            }
            if (!ok) continue;
            used[v] = 1;
            map[u] = v;
            if (self(self, depth + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

namespace {

double log2_binomial(int n, int k) {
    return (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) /
           std::log(2.0);
}

} // namespace

double expected_clique_count_log2(int n, int l, double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("expected_clique_count_log2: p must lie in (0,1)");
    if (l < 1 || l > n) throw DomainError("expected_clique_count_log2: need 1 <= l <= n");
    const double pairs = static_cast<double>(l) * (l - 1) / 2.0;
    return pairs * std::log2(p) + log2_binomial(n, l);
}

double expected_jpp_count_log2(int n, int l, double p, int d) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("expected_jpp_count_log2: p must lie in (0,1)");
    if (d < 1) throw DomainError("expected_jpp_count_log2: d must be positive");
    if (l < 4) throw DomainError("expected_jpp_count_log2: l must be at least 4");
    if (n < 1) throw DomainError("expected_jpp_count_log2: n must be positive");
    const double loglog = std::log2(std::log2(static_cast<double>(l) + 1.0));
    return d * std::log2(static_cast<double>(d)) +
           (d / 10.0) * loglog * std::log2(1.0 - p) + d * std::log2(static_cast<double>(n));
}

int jpp_d_min_for(int l) {
    if (l < 1) throw DomainError("jpp_d_min_for: l must be positive");
    int d = 0;
    while ((std::uint64_t{1} << d) < static_cast<std::uint64_t>(l) + 1) ++d;
    return d;
}

std::string render_claim(int l, int n) {
    const std::string size = std::to_string(l + 1);
    std::string bound;
    if (n <= 63)
        bound = std::to_string(std::uint64_t{1} << n);
    else
        bound = "2^" + std::to_string(n);
    return "r3(" + size + "," + size + "," + size + ")>" + bound;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

double parse_double(const std::string& s, const char* what) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(std::string("certificate: bad ") + what + " value '" + s + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(std::string("certificate: bad ") + what + " value '" + s + "'");
    return v;
}

std::string expect_field(std::istream& is, const std::string& key) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("certificate: missing '" + key + "' line");
    if (line.rfind(key + "=", 0) != 0)
        throw ParseError("certificate: expected '" + key + "=...', got '" + line + "'");
    return line.substr(key.size() + 1);
}

} // namespace

void write_certificate(std::ostream& os, const Certificate& cert) {
    os << "RAMSEY-STEPUP-CERT v1\n";
    os << "l=" << cert.l << '\n';
    os << "n=" << cert.n << '\n';
    os << "c=" << format_double(cert.c) << '\n';
    os << "seed=" << cert.seed << '\n';
    os << "attempt=" << cert.attempt << '\n';
    os << "claim=" << cert.claim << '\n';
    os << "checks=clique_free,jpp_free_d" << cert.checks.jpp_d_min << "..d" << cert.checks.jpp_d_max;
    if (cert.checks.brute_force) os << ",brute_force";
    os << '\n';
    write_graph(os, cert.graph);
}

Certificate parse_certificate(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "RAMSEY-STEPUP-CERT v1")
        throw ParseError("certificate: bad magic line");
    Certificate cert;
    cert.l = static_cast<int>(parse_u64(expect_field(is, "l"), "l"));
    cert.n = static_cast<int>(parse_u64(expect_field(is, "n"), "n"));
    cert.c = parse_double(expect_field(is, "c"), "c");
    cert.seed = parse_u64(expect_field(is, "seed"), "seed");
    cert.attempt = static_cast<unsigned>(parse_u64(expect_field(is, "attempt"), "attempt"));
    cert.claim = expect_field(is, "claim");
    const std::string checks = expect_field(is, "checks");

    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= checks.size()) {
        const std::size_t comma = checks.find(',', pos);
        parts.push_back(checks.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (parts.empty() || parts[0] != "clique_free")
        throw ParseError("certificate: checks must start with clique_free");
    if (parts.size() < 2 || parts[1].rfind("jpp_free_d", 0) != 0)
        throw ParseError("certificate: missing jpp_free_d range");
    const std::string range = parts[1].substr(std::string("jpp_free_d").size());
    const std::size_t dots = range.find("..d");
    if (dots == std::string::npos) throw ParseError("certificate: bad jpp_free_d range");
    cert.checks.clique_free = true;
    cert.checks.jpp_d_min = static_cast<int>(parse_u64(range.substr(0, dots), "jpp_free_d min"));
    cert.checks.jpp_d_max =
        static_cast<int>(parse_u64(range.substr(dots + 3), "jpp_free_d max"));
    if (parts.size() > 2) {
        if (parts.size() != 3 || parts[2] != "brute_force")
            throw ParseError("certificate: unknown checks entry");
        cert.checks.brute_force = true;
    }

    cert.graph = parse_graph(is);
    if (cert.graph.vertex_count() != cert.n)
        throw ParseError("certificate: graph order does not match n");
    return cert;
}

std::string to_text(const Certificate& cert) {
    std::ostringstream os;
    write_certificate(os, cert);
    return os.str();
}

SearchResult search_good_base_graph(const SearchParams& params,
                                    const std::map<int, std::vector<BaseGraph>>& jpp_family_by_d) {
    if (params.l < 1) throw DomainError("search: l must be positive");
    if (params.p_override && !(*params.p_override >= 0.0 && *params.p_override <= 1.0))
        throw DomainError("search: p override must lie in [0,1]");
    if (params.n_override && *params.n_override < 1)
        throw DomainError("search: n override must be positive");

    int n;
    double p;
    if (params.n_override && params.p_override) {
        n = *params.n_override;
        p = *params.p_override;
    } else {
        const PaperParams derived = paper_params(params.l, params.c);
        n = params.n_override ? *params.n_override : derived.n;
        p = params.p_override ? *params.p_override : derived.p;
    }

    const int d_min = jpp_d_min_for(params.l);
    const int d_max = params.l;
    for (int d = d_min; d <= d_max; ++d) {
        auto it = jpp_family_by_d.find(d);
        if (it == jpp_family_by_d.end() || it->second.empty())
            throw CoverageGap("search: pattern family misses order d = " + std::to_string(d));
    }

    SearchResult result;
    for (unsigned attempt = 0; attempt < params.max_attempts; ++attempt) {
        BaseGraph g = sample_graph(n, p, params.seed, attempt);
        if (has_clique(g, params.l)) {
            result.rejections.push_back(
                {attempt, RejectionReason::Kind::CliqueFound, 0});
            continue;
        }
        const BaseGraph co = complement(g);
        bool rejected = false;
        for (int d = d_min; d <= d_max && !rejected; ++d)
            for (const BaseGraph& pattern : jpp_family_by_d.at(d))
                if (contains_subgraph(co, pattern)) {
                    result.rejections.push_back(
                        {attempt, RejectionReason::Kind::PatternFound, d});
                    rejected = true;
                    break;
                }
        if (rejected) continue;

        Certificate cert;
        cert.l = params.l;
        cert.n = n;
        cert.c = params.c;
        cert.seed = params.seed;
        cert.attempt = attempt;
        cert.claim = render_claim(params.l, n);
        cert.checks = CertificateChecks{true, d_min, d_max, false};
        cert.graph = std::move(g);
        result.certificate = std::move(cert);
        return result;
    }
    return result;
}

} // namespace stepup
