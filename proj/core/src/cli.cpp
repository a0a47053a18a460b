#include "stepup/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "stepup/bounds.hpp"
#include "stepup/coloring.hpp"
#include "stepup/hyperverify.hpp"
#include "stepup/jgraph.hpp"
#include "stepup/probsearch.hpp"

namespace stepup {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;
constexpr int kExitGuard = 3;

int stepup_log_guard() {
    if (const char* env = std::getenv("RAMSEY_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return kDefaultStepupLogLimit;
}

BaseGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

int cmd_color(const std::string& graph_path, int n, const std::vector<std::uint64_t>& triple,
              std::ostream& out) {
    const BaseGraph g = load_graph(graph_path);
    if (!triple.empty()) {
        const TVertex a(triple[0], n), b(triple[1], n), c(triple[2], n);
        out << "color: " << to_string(color_triple(g, a, b, c)) << '\n';
        return kExitOk;
    }
    const TripleCounts counts = count_triple_colors(g, n, stepup_log_guard());
    out << "triples_c1: " << counts.c1 << '\n';
    out << "triples_c2: " << counts.c2 << '\n';
    out << "triples_c3: " << counts.c3 << '\n';
    return kExitOk;
}

int cmd_verify_brute(const std::string& graph_path, int n, int l, std::ostream& out) {
    const BaseGraph g = load_graph(graph_path);
    const VerifyReport report = verify_no_mono_clique(g, n, l, stepup_log_guard());
    out << to_text(report);
    return report.pass ? kExitOk : kExitFail;
}

int cmd_jpp_enum(int d, const std::string& out_path, std::ostream& out) {
    const auto patterns = enumerate_jpp(d);
    std::ofstream file(out_path);
    if (!file) throw ParseError("cannot open output file '" + out_path + "'");
    file << "jpp d=" << d << " count=" << patterns.size() << '\n';
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (i) file << "---\n";
        write_graph(file, patterns[i]);
    }
    out << "wrote " << patterns.size() << " patterns for d=" << d << " to " << out_path << '\n';
    return kExitOk;
}

int cmd_jpp_build(const std::string& seq_text, std::ostream& out) {
    std::vector<int> values;
    std::stringstream ss(seq_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("jpp build: empty entry in --seq");
        values.push_back(std::stoi(item));
    }
    const DeltaSequence seq = DeltaSequence::from_values(values);
    const JppResult r = build_jpp(seq);
    edge_count_identity(r);

    out << "seq:";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : " ") << values[i];
    out << '\n';
    out << "d: " << r.d << '\n';
    out << "m: " << r.m << '\n';
    out << "t:";
    for (std::size_t i = 0; i < r.t.size(); ++i) out << (i ? "," : " ") << r.t[i];
    out << '\n';
    for (int i = 0; i < r.m; ++i) {
        out << "round " << (i + 1) << ":";
        bool first = true;
        for (const auto& region : r.rounds[i].regions) {
            out << (first ? " " : " | ") << "region [" << region.lo << "," << region.hi
                << "] pick pos=" << region.rep_pos << " value=" << region.rep_value;
            first = false;
        }
        out << '\n';
    }
    out << "classes:";
    for (std::size_t i = 0; i < r.class_values.size(); ++i)
        out << (i ? "," : " ") << r.class_values[i];
    out << '\n';
    out << "edges_by_value:";
    for (auto [u, v] : pattern_edges_by_value(r.pattern, r.class_values))
        out << " {" << u << "," << v << "}";
    out << '\n';
    out << "pattern:\n";
    write_graph(out, r.pattern);
    return kExitOk;
}

std::map<int, std::vector<BaseGraph>> build_family(int l) {
    std::map<int, std::vector<BaseGraph>> family;
    for (int d = jpp_d_min_for(l); d <= l; ++d) family[d] = enumerate_jpp(d);
    return family;
}

int cmd_search(const SearchParams& params, const std::string& out_path, std::ostream& out) {
    const auto family = build_family(params.l);
    const SearchResult result = search_good_base_graph(params, family);
    if (!result.succeeded()) {
        out << "result: fail\n";
        out << "attempts: " << result.rejections.size() << '\n';
        for (const auto& r : result.rejections) {
            out << "attempt " << r.attempt << ": ";
            if (r.kind == RejectionReason::Kind::CliqueFound)
                out << "clique_found\n";
            else
                out << "pattern_found d=" << r.pattern_d << '\n';
        }
        return kExitFail;
    }
    const Certificate& cert = *result.certificate;
    std::ofstream file(out_path);
    if (!file) throw ParseError("cannot open output file '" + out_path + "'");
    write_certificate(file, cert);
    out << "result: pass\n";
    out << "accepted_attempt: " << cert.attempt << '\n';
    out << "claim: " << cert.claim << '\n';
    out << "certificate: " << out_path << '\n';
    return kExitOk;
}

int cmd_cert_verify(const std::string& cert_path, bool brute, std::ostream& out) {
    std::ifstream in(cert_path);
    if (!in) throw ParseError("cannot open certificate '" + cert_path + "'");
    const Certificate cert = parse_certificate(in);

    bool all_pass = true;
    auto report = [&](const std::string& name, bool pass) {
        out << "check " << name << ": " << (pass ? "pass" : "fail") << '\n';
        all_pass = all_pass && pass;
    };

    report("claim", cert.claim == render_claim(cert.l, cert.n));
    report("checks_range", cert.checks.jpp_d_min == jpp_d_min_for(cert.l) &&
                               cert.checks.jpp_d_max == cert.l);
    report("clique_free", !has_clique(cert.graph, cert.l));
    const BaseGraph co = complement(cert.graph);
    for (int d = cert.checks.jpp_d_min; d <= cert.checks.jpp_d_max; ++d) {
        bool free_of_patterns = true;
        for (const BaseGraph& pattern : enumerate_jpp(d))
            if (contains_subgraph(co, pattern)) {
                free_of_patterns = false;
                break;
            }
        report("jpp_free_d" + std::to_string(d), free_of_patterns);
    }
    if (brute || cert.checks.brute_force) {
        const int guard = stepup_log_guard();
        if (cert.n > guard)
            throw TooLarge("cert verify: brute-force check needs 2^" + std::to_string(cert.n) +
                           " vertices, guard is 2^" + std::to_string(guard));
        const VerifyReport brute_report = verify_no_mono_clique(cert.graph, cert.n, cert.l, guard);
        report("brute_force", brute_report.pass);
    }
    out << "result: " << (all_pass ? "pass" : "fail") << '\n';
    return all_pass ? kExitOk : kExitFail;
}

int cmd_bounds(int k, int l, double c, std::ostream& out) {
    out << "theorem1: " << theorem1_bound(l, c).render() << '\n';
    out << "theorem3: " << theorem3_bound(k, l, c).render() << '\n';
    return kExitOk;
}

int cmd_bounds_stepup(int k, long long l, long long n, std::ostream& out) {
    TowerExpr base;
    base.height = 0;
    base.base_exponent = static_cast<double>(n);
    base.base_integral = true;
    out << step_up(k, l, base).render() << '\n';
    return kExitOk;
}

int cmd_expect(int l, double c, std::optional<int> d_only, std::ostream& out) {
    const PaperParams params = paper_params(l, c);
    out << "l: " << l << '\n';
    out << "n: " << params.n << '\n';
    out << "p: " << params.p << '\n';
    if (l <= params.n)
        out << "log2_expected_cliques: " << expected_clique_count_log2(params.n, l, params.p)
            << '\n';
    else
        out << "log2_expected_cliques: undefined (requires l <= n)\n";
    const int d_min = d_only ? *d_only : jpp_d_min_for(l);
    const int d_max = d_only ? *d_only : l;
    for (int d = d_min; d <= d_max; ++d)
        out << "log2_expected_jpp d=" << d << ": " << expected_jpp_count_log2(params.n, l, params.p, d)
            << '\n';
    return kExitOk;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"step-up colorings, pattern-graph machinery and lower-bound certificates"};
    app.name("stepup");
    app.require_subcommand(1);

    // color
    auto* color = app.add_subcommand("color", "color one triple or tally all triples");
    int color_n = 0;
    std::string color_graph;
    std::vector<std::uint64_t> color_triple_ranks;
    color->add_option("--n", color_n, "number of components")->required();
    color->add_option("--graph", color_graph, "base graph file")->required();
    color->add_option("--triple", color_triple_ranks, "three vertex ranks")->expected(3);

    // verify-brute
    auto* verify = app.add_subcommand("verify-brute", "exhaustive monochromatic-clique check");
    int verify_n = 0, verify_l = 0;
    std::string verify_graph;
    verify->add_option("--n", verify_n, "number of components")->required();
    verify->add_option("--graph", verify_graph, "base graph file")->required();
    verify->add_option("--l", verify_l, "forbidden clique size is l+1")->required();

    // jpp enum | build
    auto* jpp = app.add_subcommand("jpp", "pattern-graph operations");
    jpp->require_subcommand(1);
    auto* jpp_enum = jpp->add_subcommand("enum", "enumerate patterns of order d");
    int enum_d = 0;
    std::string enum_out;
    jpp_enum->add_option("--d", enum_d, "number of classes")->required();
    jpp_enum->add_option("--out", enum_out, "output file")->required();
    auto* jpp_build = jpp->add_subcommand("build", "run the region process on a sequence");
    std::string build_seq;
    jpp_build->add_option("--seq", build_seq, "comma-separated values")->required();

    // search
    auto* search = app.add_subcommand("search", "randomized base-graph search");
    SearchParams sp;
    std::string search_out;
    int search_n = -1;
    double search_p = -1;
    search->add_option("--l", sp.l, "forbidden clique size")->required();
    search->add_option("--c", sp.c, "exponent constant")->required();
    search->add_option("--n", search_n, "override vertex count");
    search->add_option("--p", search_p, "override edge probability");
    search->add_option("--seed", sp.seed, "RNG seed")->required();
    search->add_option("--max-attempts", sp.max_attempts, "attempt budget")->required();
    search->add_option("--out", search_out, "certificate output file")->required();

    // cert verify
    auto* cert = app.add_subcommand("cert", "certificate operations");
    cert->require_subcommand(1);
    auto* cert_verify = cert->add_subcommand("verify", "replay a certificate's checks");
    std::string cert_path;
    bool cert_brute = false;
    cert_verify->add_option("certificate", cert_path, "certificate file")->required();
    cert_verify->add_flag("--brute", cert_brute, "also run the exhaustive hypergraph check");

    // bounds [stepup]
    auto* bounds = app.add_subcommand("bounds", "lower-bound arithmetic");
    int bounds_k = 0, bounds_l = 0;
    double bounds_c = 0;
    bounds->add_option("--k", bounds_k, "uniformity");
    bounds->add_option("--l", bounds_l, "clique size");
    bounds->add_option("--c", bounds_c, "exponent constant");
    auto* bounds_stepup = bounds->add_subcommand("stepup", "one step-up application");
    int su_k = 0;
    long long su_l = 0, su_n = 0;
    bounds_stepup->add_option("--k", su_k, "uniformity")->required();
    bounds_stepup->add_option("--l", su_l, "clique size")->required();
    bounds_stepup->add_option("--n", su_n, "exponent")->required();

    // expect
    auto* expect = app.add_subcommand("expect", "first-moment planning numbers");
    int expect_l = 0;
    double expect_c = 0;
    int expect_d = -1;
    expect->add_option("--l", expect_l, "clique size")->required();
    expect->add_option("--c", expect_c, "exponent constant")->required();
    expect->add_option("--d", expect_d, "single pattern order");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (color->parsed()) return cmd_color(color_graph, color_n, color_triple_ranks, out);
        if (verify->parsed()) return cmd_verify_brute(verify_graph, verify_n, verify_l, out);
        if (jpp->parsed()) {
            if (jpp_enum->parsed()) return cmd_jpp_enum(enum_d, enum_out, out);
            return cmd_jpp_build(build_seq, out);
        }
        if (search->parsed()) {
            if (search_n >= 0) sp.n_override = search_n;
            if (search_p >= 0) sp.p_override = search_p;
            return cmd_search(sp, search_out, out);
        }
        if (cert->parsed()) return cmd_cert_verify(cert_path, cert_brute, out);
        if (bounds->parsed()) {
            if (bounds_stepup->parsed()) return cmd_bounds_stepup(su_k, su_l, su_n, out);
            if (bounds_k == 0 || bounds_l == 0 || bounds_c == 0) {
                err << "usage error: bounds requires --k, --l and --c\n";
                return kExitUsage;
            }
            return cmd_bounds(bounds_k, bounds_l, bounds_c, out);
        }
        if (expect->parsed())
            return cmd_expect(expect_l, expect_c,
                              expect_d > 0 ? std::optional<int>(expect_d) : std::nullopt, out);
    } catch (const TooLarge& e) {
        err << "guard exceeded: " << e.what() << '\n';
        return kExitGuard;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "usage error: no subcommand\n";
    return kExitUsage;
}

} // namespace stepup
