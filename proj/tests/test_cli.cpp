#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "stepup/cli.hpp"

using namespace stepup;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& contents = "") {
        path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
        if (!contents.empty()) {
            std::ofstream f(path);
            f << contents;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string read() const {
        std::ifstream f(path);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
};

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("color subcommand") {
    TempFile graph("cli_k2.graph", "n 2\ne 1 2\n");
    const CliRun one = run({"color", "--n", "2", "--graph", graph.path, "--triple", "0", "1", "2"});
    CHECK(one.exit_code == 0);
    CHECK(one.out == "color: C1\n");

    const CliRun counts = run({"color", "--n", "2", "--graph", graph.path});
    CHECK(counts.exit_code == 0);
    CHECK(counts.out == "triples_c1: 2\ntriples_c2: 2\ntriples_c3: 0\n");
}

TEST_CASE("verify-brute subcommand") {
    TempFile k2("cli_vb_k2.graph", "n 2\ne 1 2\n");
    const CliRun pass = run({"verify-brute", "--n", "2", "--graph", k2.path, "--l", "3"});
    CHECK(pass.exit_code == 0);
    CHECK(pass.out ==
          "result: pass\ntriples_c1: 2\ntriples_c2: 2\ntriples_c3: 0\n");

    TempFile empty("cli_vb_empty.graph", "n 2\n");
    const CliRun fail = run({"verify-brute", "--n", "2", "--graph", empty.path, "--l", "2"});
    CHECK(fail.exit_code == 2);
    CHECK(fail.out.find("result: fail") == 0);
    CHECK(fail.out.find("witness_color: C3") != std::string::npos);

    TempFile big("cli_vb_big.graph", "n 7\n");
    const CliRun guard = run({"verify-brute", "--n", "7", "--graph", big.path, "--l", "3"});
    CHECK(guard.exit_code == 3);
}

TEST_CASE("guard override through RAMSEY_MAX_N") {
    TempFile big("cli_env_big.graph", "n 7\n");
    setenv("RAMSEY_MAX_N", "7", 1);
    const CliRun ok = run({"verify-brute", "--n", "7", "--graph", big.path, "--l", "2"});
    unsetenv("RAMSEY_MAX_N");
    CHECK(ok.exit_code == 2); // runs (guard lifted) and finds the C3 witness
    CHECK(ok.out.find("witness_color: C3") != std::string::npos);
}

TEST_CASE("jpp enum writes the pattern file") {
    TempFile out("cli_jpp_d2.txt");
    const CliRun r = run({"jpp", "enum", "--d", "2", "--out", out.path});
    CHECK(r.exit_code == 0);
    CHECK(out.read() == "jpp d=2 count=1\nn 2\ne 1 2\n");

    TempFile out3("cli_jpp_d3.txt");
    CHECK(run({"jpp", "enum", "--d", "3", "--out", out3.path}).exit_code == 0);
    const std::string text = out3.read();
    CHECK(text.find("jpp d=3 count=2\n") == 0);
    CHECK(text.find("---\n") != std::string::npos);

    const CliRun guard = run({"jpp", "enum", "--d", "9", "--out", out.path});
    CHECK(guard.exit_code == 3);
}

TEST_CASE("jpp build prints the trace") {
    const CliRun r = run({"jpp", "build", "--seq", "1,2,1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("seq: 1,2,1\n") != std::string::npos);
    CHECK(r.out.find("d: 2\n") != std::string::npos);
    CHECK(r.out.find("m: 2\n") != std::string::npos);
    CHECK(r.out.find("t: 1,2\n") != std::string::npos);
    CHECK(r.out.find("edges_by_value: {2,1}\n") != std::string::npos);

    const CliRun bad = run({"jpp", "build", "--seq", "1,1"});
    CHECK(bad.exit_code == 1);
}

TEST_CASE("search and cert verify end to end") {
    TempFile cert("cli_cert.txt");
    const std::vector<std::string> search_args{"search",  "--l",   "3",    "--c",
                                               "0.0125",  "--n",   "2",    "--p",
                                               "1",       "--seed", "42",  "--max-attempts",
                                               "5",       "--out", cert.path};
    const CliRun s1 = run(search_args);
    CHECK(s1.exit_code == 0);
    CHECK(s1.out.find("claim: r3(4,4,4)>4") != std::string::npos);
    const std::string first = cert.read();
    CHECK(first.find("RAMSEY-STEPUP-CERT v1\n") == 0);

    // byte-identical certificate on re-run
    const CliRun s2 = run(search_args);
    CHECK(s2.exit_code == 0);
    CHECK(cert.read() == first);

    const CliRun verify = run({"cert", "verify", cert.path});
    CHECK(verify.exit_code == 0);
    CHECK(verify.out.find("check clique_free: pass") != std::string::npos);
    CHECK(verify.out.find("check jpp_free_d2: pass") != std::string::npos);
    CHECK(verify.out.find("check jpp_free_d3: pass") != std::string::npos);
    CHECK(verify.out.find("result: pass") != std::string::npos);

    const CliRun brute = run({"cert", "verify", cert.path, "--brute"});
    CHECK(brute.exit_code == 0);
    CHECK(brute.out.find("check brute_force: pass") != std::string::npos);

    // tamper: drop the single edge line
    std::string tampered = first;
    const auto pos = tampered.find("e 1 2\n");
    REQUIRE(pos != std::string::npos);
    tampered.erase(pos, 6);
    TempFile bad("cli_cert_bad.txt", tampered);
    const CliRun verify_bad = run({"cert", "verify", bad.path});
    CHECK(verify_bad.exit_code == 2);
    CHECK(verify_bad.out.find("check jpp_free_d2: fail") != std::string::npos);
    CHECK(verify_bad.out.find("result: fail") != std::string::npos);
}

TEST_CASE("search failure reporting") {
    TempFile cert("cli_cert_fail.txt");
    const CliRun r = run({"search", "--l", "3", "--c", "0.0125", "--n", "3", "--p", "0", "--seed",
                          "1", "--max-attempts", "2", "--out", cert.path});
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("result: fail\n") == 0);
    CHECK(r.out.find("attempt 0: pattern_found d=2") != std::string::npos);
}

TEST_CASE("bounds subcommands") {
    const CliRun su = run({"bounds", "stepup", "--k", "3", "--l", "4", "--n", "10"});
    CHECK(su.exit_code == 0);
    CHECK(su.out == "r_4(7) >= 2^10 = 1024\n");

    const CliRun both = run({"bounds", "--k", "4", "--l", "16", "--c", "0.0125"});
    CHECK(both.exit_code == 0);
    CHECK(both.out.find("theorem1: r_3(16,16,16) >= 2^") != std::string::npos);
    CHECK(both.out.find("theorem3: r_4(31,31,31) >= 2^(2^") != std::string::npos);

    const CliRun bad = run({"bounds", "stepup", "--k", "2", "--l", "4", "--n", "10"});
    CHECK(bad.exit_code == 1);
}

TEST_CASE("expect subcommand") {
    const CliRun r = run({"expect", "--l", "16", "--c", "0.0125"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n: 2\n") != std::string::npos);
    CHECK(r.out.find("p: 0.5\n") != std::string::npos);
    CHECK(r.out.find("log2_expected_cliques: undefined") != std::string::npos);
    CHECK(r.out.find("log2_expected_jpp d=5:") != std::string::npos);

    const CliRun single = run({"expect", "--l", "16", "--c", "0.0125", "--d", "3"});
    CHECK(single.exit_code == 0);
    CHECK(single.out.find("log2_expected_jpp d=3:") != std::string::npos);
    CHECK(single.out.find("d=4") == std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({"no-such-command"}).exit_code == 1);
    CHECK(run({}).exit_code == 1);
    CHECK(run({"color", "--n", "2"}).exit_code == 1); // missing --graph
    TempFile missing("cli_missing.graph");
    CHECK(run({"color", "--n", "2", "--graph", missing.path + ".nope"}).exit_code == 1);
}

TEST_SUITE_END();
