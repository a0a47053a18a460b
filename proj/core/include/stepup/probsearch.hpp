#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stepup/base_graph.hpp"

namespace stepup {

inline constexpr int kDefaultCliqueSearchMax = 128;
inline constexpr int kDefaultPatternMax = 10;

/// n = ceil(l^(c*log2 log2 l)), p = 1 - (log2 l * log2 log2 l) / l.
/// All logarithms base 2. Throws DegenerateParams when l < 5, n < 2, or p
/// leaves (0,1); DomainError for c outside (0, 1/4].
struct PaperParams {
    int n = 0;
    double p = 0;
};
PaperParams paper_params(int l, double c);

/// G(n, p) sample with each pair decided by a counter-based stream keyed on
/// (seed, attempt, pair index): identical inputs give the identical graph on
/// every platform and regardless of evaluation order. p may be 0 or 1.
BaseGraph sample_graph(int n, double p, std::uint64_t seed, unsigned attempt);

/// Exact K_l decision by branch-and-bound with a greedy-colouring bound.
/// Throws TooLarge past max_n vertices; DomainError for l < 1.
bool has_clique(const BaseGraph& g, int l, int max_n = kDefaultCliqueSearchMax);

/// True iff some injective map of pattern vertices into host vertices sends
/// every pattern edge to a host edge (ordinary subgraph, non-edges
/// unconstrained). Backtracking with degree-order pruning. A pattern larger
/// than the host is trivially absent. Throws TooLarge past max_pattern
/// pattern vertices.
bool contains_subgraph(const BaseGraph& host, const BaseGraph& pattern,
                       int max_pattern = kDefaultPatternMax);

/// log2 of p^C(l,2) * C(n,l), computed in log space (log-gamma binomial).
/// Throws DomainError unless 0 < p < 1 and 1 <= l <= n.
double expected_clique_count_log2(int n, int l, double p);

/// log2 of the displayed first-moment bound for order-d patterns:
/// d*log2 d + (d/10)*log2 log2(l+1)*log2(1-p) + d*log2 n.
/// Throws DomainError unless 0 < p < 1, d >= 1, l >= 4, n >= 1.
double expected_jpp_count_log2(int n, int l, double p, int d);

struct SearchParams {
    int l = 0;
    double c = 0;
    std::optional<int> n_override;
    std::optional<double> p_override; // [0,1]; forced densities are useful at desk scale
    std::uint64_t seed = 0;
    unsigned max_attempts = 0;
};

struct CertificateChecks {
    bool clique_free = false;
    int jpp_d_min = 0;
    int jpp_d_max = 0;
    bool brute_force = false;
};

/// A verified base graph together with the parameters it certifies. Written
/// and parsed in a bit-exact line format; always re-verified on read.
struct Certificate {
    int l = 0;
    int n = 0;
    double c = 0;
    std::uint64_t seed = 0;
    unsigned attempt = 0;
    std::string claim; // e.g. "r3(4,4,4)>4"
    CertificateChecks checks;
    BaseGraph graph{1};
};

/// "r3(l+1,l+1,l+1)>2^n", with 2^n written as a decimal integer when it
/// fits in 64 bits and as a power literal otherwise.
std::string render_claim(int l, int n);

/// Smallest d with 2^d >= l + 1, i.e. ceil(log2(l+1)). Exact integer
/// computation.
int jpp_d_min_for(int l);

void write_certificate(std::ostream& os, const Certificate& cert);
Certificate parse_certificate(std::istream& is);
std::string to_text(const Certificate& cert);

struct RejectionReason {
    enum class Kind { CliqueFound, PatternFound };
    unsigned attempt = 0;
    Kind kind = Kind::CliqueFound;
    int pattern_d = 0; // meaningful for PatternFound
};

struct SearchResult {
    std::optional<Certificate> certificate;
    std::vector<RejectionReason> rejections; // every rejected attempt, in order
    bool succeeded() const { return certificate.has_value(); }
};

/// Sample graphs at the resolved (n, p) until one is K_l-free and its
/// complement avoids every pattern of every order in [ceil(log2(l+1)), l].
/// The first (lowest-index) acceptable attempt wins. Throws CoverageGap if
/// the family misses a required order.
SearchResult search_good_base_graph(const SearchParams& params,
                                    const std::map<int, std::vector<BaseGraph>>& jpp_family_by_d);

} // namespace stepup
