// End-to-end tests of the command-line binary (path injected by the build as
// LUCASQ_CLI_PATH).  Each case shells out, captures stdout and the exit code,
// and checks the documented record formats and exit contract.

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <json.hpp>

#include <lucasq/report_io.hpp>

#include "cli_runner.hpp"

using namespace lucasq;
using testutil::RunResult;
using testutil::lines_of;
using testutil::run_cli;

TEST_CASE("seq evaluates sequence members") {
    CHECK(run_cli("seq lucas 10").out == "123\n");
    CHECK(run_cli("seq lucas 0").out == "2\n");
    CHECK(run_cli("seq fib 12").out == "144\n");
    CHECK(run_cli("seq lucas 9 --mod 7").out == "6\n");
    CHECK(run_cli("seq fib 12 --mod 10").out == "4\n");
    CHECK(run_cli("seq lucas 10").code == 0);
}

TEST_CASE("seq json record") {
    const RunResult r = run_cli("--format json-lines seq lucas 10");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("type") == "value");
    CHECK(j.at("sequence") == "lucas");
    CHECK(j.at("n") == 10);
    CHECK(j.at("value") == "123");
}

TEST_CASE("seq validation errors exit 2") {
    CHECK(run_cli("seq lucas 5 --mod 1").code == 2);
    CHECK(run_cli("seq lucas 5 --mod abc").code == 2);
    CHECK(run_cli("seq primes 5").code == 2);
}

TEST_CASE("jacobi handles negative numerators positionally") {
    CHECK(run_cli("jacobi -1 7").out == "-1\n");
    CHECK(run_cli("jacobi 9 7").out == "1\n");
    CHECK(run_cli("jacobi 2 15").out == "1\n");
    CHECK(run_cli("jacobi 0 9").out == "0\n");
    CHECK(run_cli("jacobi -1 7").code == 0);
    CHECK(run_cli("jacobi 3 10").code == 2);  // even denominator
}

TEST_CASE("jacobi json record") {
    const auto j = nlohmann::json::parse(run_cli("--format json-lines jacobi -1 7").out);
    CHECK(j.at("a") == "-1");
    CHECK(j.at("n") == "7");
    CHECK(j.at("jacobi") == -1);
}

TEST_CASE("classify reports form solutions plus a summary") {
    const RunResult r = run_cli("classify lucas --k 3 --n-max 1000");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "(2,1)");
    CHECK(lines[1] == "lucas_form k=3 n_max=1000 solutions=1 status=OK");

    const RunResult f = run_cli("classify fib --k 1 --n-max 500");
    CHECK(lines_of(f.out).front() == "(0,0)");
    CHECK(lines_of(f.out).back() == "fib_form k=1 n_max=500 solutions=4 status=OK");
}

TEST_CASE("classify validation errors exit 2") {
    CHECK(run_cli("classify lucas --k 9 --n-max 10").code == 2);
    CHECK(run_cli("classify fib --k 3 --n-max 10").code == 2);
    CHECK(run_cli("classify lucas --n-max 10").code == 2);  // --k required
}

TEST_CASE("verify passes and fails with the documented exit codes") {
    const RunResult ok = run_cli("verify eq3 --hi 1000");
    CHECK(ok.code == 0);
    CHECK(ok.out == "EQ3 [0,1000] PASS 0 counterexamples\n");

    const RunResult bad = run_cli("verify eq2 --literal --hi 100");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("EQ2_LITERAL [0,100] FAIL") == 0);
    CHECK(bad.out.find(": 0 3 6 9") != std::string::npos);

    CHECK(run_cli("verify eq2 --hi 1000").code == 0);  // corrected form by default
}

TEST_CASE("verify claim aliases and validation") {
    CHECK(run_cli("verify lemma21 --hi 100").code == 0);
    CHECK(run_cli("verify coprime --hi 100").code == 0);
    CHECK(run_cli("verify replay --hi 200").code == 0);
    CHECK(run_cli("verify zhang --ab-max 10").code == 0);
    CHECK(run_cli("verify eq5 --hi 50").code == 0);
    CHECK(run_cli("verify eq5 --hi 50 --m 6").code == 2);   // 3 | m rejected
    CHECK(run_cli("verify nosuchclaim").code == 2);
    CHECK(run_cli("verify eq3 --literal --hi 10").code == 2);
}

TEST_CASE("verify respects environment bounds with flags winning") {
    CHECK(run_cli("verify eq3", "LUCASQ_HI=50").out ==
          "EQ3 [0,50] PASS 0 counterexamples\n");
    CHECK(run_cli("verify eq3 --hi 60", "LUCASQ_HI=50").out ==
          "EQ3 [0,60] PASS 0 counterexamples\n");
}

TEST_CASE("verify json record round-trips") {
    const RunResult r = run_cli("--format json-lines verify eq4 --hi 200");
    REQUIRE(r.code == 0);
    const VerificationReport report = report_from_json(nlohmann::json::parse(r.out));
    CHECK(report.claim_id == ClaimId::eq4);
    CHECK(report.range_hi == 200);
    CHECK(report.status == Status::pass);
}

TEST_CASE("solve main prints the classical triples and an OK summary") {
    const RunResult r = run_cli("solve main");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "(0,3,3)");
    CHECK(lines[1] == "(1,1,2)");
    CHECK(lines[2] == "(2,2,5)");
    CHECK(lines[3] == "main n_max=200 alpha_max=12 solutions=3 status=OK");
}

TEST_CASE("solve main json stream parses back to the solution set") {
    const RunResult r = run_cli("--format json-lines solve main --n-max 50 --alpha-max 8");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    std::vector<SolutionTriple> triples;
    for (std::size_t i = 0; i + 1 < lines.size(); ++i)
        triples.push_back(triple_from_json(nlohmann::json::parse(lines[i])));
    CHECK(triples == std::vector<SolutionTriple>{{0, 3, 3}, {1, 1, 2}, {2, 2, 5}});
    const auto summary = nlohmann::json::parse(lines.back());
    CHECK(summary.at("type") == "summary");
    CHECK(summary.at("status") == "OK");
    CHECK(summary.at("solutions") == 3);
}

TEST_CASE("solve main --explain prefixes the proof-case reductions") {
    const RunResult r = run_cli("solve main --n-max 5 --alpha-max 5 --explain");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 9);  // five case lines, three solutions, summary
    CHECK(lines[0].find("case alpha=0 (case 1):") == 0);
    CHECK(lines[4].find("case alpha=4...5 (case 5):") == 0);
    CHECK(lines[5] == "(0,3,3)");
    CHECK(run_cli("solve pyth --explain --n-max 5").code == 2);
}

TEST_CASE("solve pyth, catalan, poonen") {
    const RunResult p = run_cli("solve pyth --n-max 100");
    CHECK(p.code == 0);
    CHECK(lines_of(p.out) ==
          std::vector<std::string>{"(2,5)", "pyth n_max=100 solutions=1 status=OK"});

    const RunResult c = run_cli("solve catalan --base-max 30 --exp-max 30");
    CHECK(c.code == 0);
    CHECK(lines_of(c.out) == std::vector<std::string>{
                                 "(3,2,2,3)", "catalan base_max=30 exp_max=30 solutions=1 status=OK"});

    const RunResult q = run_cli("solve poonen --n-lo 4 --n-hi 5 --ab-max 30");
    CHECK(q.code == 0);
    CHECK(lines_of(q.out) ==
          std::vector<std::string>{"poonen n_lo=4 n_hi=5 ab_max=30 solutions=0 status=OK"});

    CHECK(run_cli("solve poonen --n-lo 3 --n-hi 5 --ab-max 10").code == 2);
}

TEST_CASE("audit runs the whole suite and reports no surprises") {
    const RunResult r = run_cli("audit --n-max 300");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 20);
    CHECK(lines.front().find("ok EQ2_LITERAL") == 0);
    CHECK(lines.front().find("(expected FAIL)") != std::string::npos);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) CHECK(lines[i].find("ok ") == 0);
    CHECK(lines.back() == "audit checks=" + std::to_string(lines.size() - 1) + " unexpected=0");
}

TEST_CASE("audit json stream is parseable line by line") {
    const RunResult r = run_cli("--format json-lines audit --n-max 100");
    REQUIRE(r.code == 0);
    const auto lines = lines_of(r.out);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        const auto j = nlohmann::json::parse(lines[i]);
        CHECK(j.at("type") == "audit_check");
        CHECK(j.at("ok") == true);
    }
    const auto tail = nlohmann::json::parse(lines.back());
    CHECK(tail.at("type") == "audit_summary");
    CHECK(tail.at("unexpected") == 0);
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("bogus").code == 2);
    CHECK(run_cli("--format yaml seq lucas 1").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("seq --help").code == 0);
}
