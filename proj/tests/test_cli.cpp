#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CLI_PATH
#error "CLI_PATH must point at the command-line binary"
#endif

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string tmp = "cli_test_output.tmp";
    const std::string cmd =
        std::string(CLI_PATH) + " " + args + " > " + tmp + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(tmp.c_str());
    return RunResult{WEXITSTATUS(rc), ss.str()};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += (c == '\n');
    return n;
}

}  // namespace

TEST_CASE("sample: deterministic CSV output") {
    const RunResult a = run("sample --a 3 --s 2 --n 5 --seed 42");
    const RunResult b = run("sample --a 3 --s 2 --n 5 --seed 42");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(count_lines(a.out) == 6);
    CHECK(a.out.substr(0, 17) == "value,iterations\n");
    const RunResult c = run("sample --a 3 --s 2 --n 5 --seed 43");
    CHECK(c.out != a.out);
}

TEST_CASE("sample: jsonl format and thread-count independence") {
    const RunResult a = run("sample --a 2 --s 1 --n 4 --seed 7 --format jsonl");
    CHECK(a.status == 0);
    CHECK(count_lines(a.out) == 4);
    CHECK(a.out.find("\"value\"") != std::string::npos);
    const RunResult b =
        run("sample --a 2 --s 1 --n 4 --seed 7 --format jsonl --jobs 4");
    CHECK(a.out == b.out);
}

TEST_CASE("environment seed fallback") {
    setenv("PEARSON4_SEED", "42", 1);
    const RunResult env = run("sample --a 3 --s 2 --n 5");
    unsetenv("PEARSON4_SEED");
    const RunResult flag = run("sample --a 3 --s 2 --n 5 --seed 42");
    CHECK(env.out == flag.out);
}

TEST_CASE("usage and domain errors exit with 2") {
    CHECK(run("sample --a 0.4 --n 1").status == 2);
    CHECK(run("sample --a 2 --s 5 --algorithm alg4 --n 1").status == 2);
    CHECK(run("sample --a 2 --algorithm bogus --n 1").status == 2);
    CHECK(run("nonsense").status == 2);
    CHECK(run("bayes --mu0 0 --m0 2 --mode posterior-mu").status == 2);
    CHECK(run("gof --a-grid \"\" --s-grid 1").status == 2);
    CHECK(run("density --a 2 --from 1 --to 1").status == 2);
}

TEST_CASE("I/O failures exit with 3") {
    CHECK(run("sample --a 2 --n 2 --out /nonexistent-dir/x.csv").status == 3);
}

TEST_CASE("density and cdf tabulation") {
    const RunResult d = run("density --a 2 --s 1 --from -1 --to 1 --points 5");
    CHECK(d.status == 0);
    CHECK(count_lines(d.out) == 6);
    CHECK(d.out.substr(0, 4) == "x,f\n");
    const RunResult c = run("cdf --a 1.5 --s 0 --from 0 --to 0 --points 2");
    CHECK(c.status == 2);
    const RunResult c2 = run("cdf --a 1.5 --s 0 --from -1 --to 1 --points 3");
    CHECK(c2.status == 0);
    // middle row is F(0) = 1/2 for the symmetric law (17 significant digits)
    CHECK(c2.out.find("\n0,0.4999999999999") != std::string::npos);
}

TEST_CASE("gof suite passes clean and fails under fault injection") {
    CHECK(run("gof --n 2000 --seed 3 --a-grid 2,3 --s-grid 1").status == 0);
    CHECK(run("gof --n 8000 --seed 3 --a-grid 3 --s-grid 3 "
              "--inject-envelope-fault")
              .status == 1);
}

TEST_CASE("bench emits one CSV row per valid cell") {
    const RunResult r = run("bench --a-grid 3 --s-grid 1 --n 500 --seed 1");
    CHECK(r.status == 0);
    // header + alg1, alg2, alg3; (3,1) falls outside the alg4 wedge and the
    // alg5 / one-liner regions
    CHECK(count_lines(r.out) == 4);
    CHECK(r.out.find("alg2") != std::string::npos);
    const RunResult pre =
        run("bench --a-grid 3 --s-grid 1 --n 500 --seed 1 --precompute");
    CHECK(pre.status == 0);
    CHECK(count_lines(pre.out) == 4);
}

TEST_CASE("bayes posterior header and determinism") {
    const RunResult r = run(
        "bayes --mu0 0 --m0 2 --n 1 --y 3 --mode posterior-mu --draws 3 --seed 5");
    CHECK(r.status == 0);
    CHECK(r.out.substr(0, 12) == "# mu1=1 m1=3");
    const RunResult pred1 = run(
        "bayes --mu0 0 --m0 2 --n 1 --y 3 --mode posterior-pred --draws 5 --seed 5 "
        "--format jsonl");
    const RunResult pred2 = run(
        "bayes --mu0 1 --m0 3 --n 1 --mode prior-pred --draws 5 --seed 5 "
        "--format jsonl");
    CHECK(pred1.status == 0);
    // conditioning on y equals predicting from the updated prior
    CHECK(pred1.out.substr(pred1.out.find('\n') + 1) == pred2.out);
}
