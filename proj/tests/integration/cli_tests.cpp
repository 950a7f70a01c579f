#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "dclcs_cli_tests";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = temp_dir() / name;
    std::ofstream(p) << content;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ostringstream ss;
    ss << std::ifstream(p).rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const fs::path out = temp_dir() / "stdout.txt";
    const fs::path err = temp_dir() / "stderr.txt";
    const std::string cmd = std::string(DCLCS_CLI_PATH) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

}  // namespace

TEST_CASE("solve reports a solution with exit code 0") {
    const auto ins = write_file("feasible.ins", "S1 aab\nS2 aba\nCO a 1\nCO b 1\n");
    const auto r = run("solve --instance " + ins.string() + " --family exhaustive");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "LENGTH 2\nSOLUTION ab\n");
}

TEST_CASE("solve reports infeasibility with exit code 1") {
    const auto ins = write_file("infeasible.ins", "S1 a\nS2 a\nCS b\n");
    const auto r = run("solve --instance " + ins.string() + " --family exhaustive");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "INFEASIBLE\n");
}

TEST_CASE("solve rejects malformed instances with exit code 2") {
    const auto ins = write_file("malformed.ins", "S1 ab\nS2 ab\nCS b\nCS b\n");
    const auto r = run("solve --instance " + ins.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("solve refuses when the search bound exceeds max-k") {
    const std::string s(20, 'a');
    const auto ins = write_file("toolarge.ins", "S1 " + s + "\nS2 " + s + "\n");
    const auto r = run("solve --instance " + ins.string() + " --max-k 4");
    CHECK(r.exit_code == 2);
}

TEST_CASE("json-lines report goes to stderr and stdout stays clean") {
    const auto ins = write_file("report.ins", "S1 ab\nS2 ab\n");
    const auto r = run("solve --instance " + ins.string() +
                       " --family exhaustive --report json-lines");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "LENGTH 2\nSOLUTION ab\n");
    CHECK(r.err.find("\"outcome\":\"solution\"") != std::string::npos);
    CHECK(r.err.find("\"length\":2") != std::string::npos);
}

TEST_CASE("randomized family solves and honors --seed") {
    const auto ins = write_file("rand.ins", "S1 aab\nS2 aba\nCO a 1\nCO b 1\n");
    const auto a = run("solve --instance " + ins.string() + " --family random --seed 7");
    const auto b = run("solve --instance " + ins.string() + " --family random --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("oracle subcommand matches solve on small instances") {
    const auto ins = write_file("oracle.ins", "S1 aab\nS2 aba\nCO a 1\nCO b 1\n");
    const auto r = run("oracle --instance " + ins.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "LENGTH 2\nSOLUTION ab\n");
}

TEST_CASE("oracle refuses oversized instances") {
    const std::string s(25, 'a');
    const auto ins = write_file("oracle_big.ins", "S1 " + s + "\nS2 " + s + "\n");
    const auto r = run("oracle --instance " + ins.string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("reduce-scs emits the constructed instance") {
    const auto strings = write_file("scs.txt", "ab\nba\n");
    const auto r = run("reduce-scs --strings " + strings.string() + " --length 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("S1 ab#ab#ab#") != std::string::npos);
    CHECK(r.out.find("S2 ba#ba#ba#") != std::string::npos);
    CHECK(r.out.find("CS ###") != std::string::npos);
    CHECK(r.out.find("CS a#b#") != std::string::npos);
    CHECK(r.out.find("CS b#a#") != std::string::npos);
}

TEST_CASE("reduce-scs --verify confirms the equivalence") {
    const auto strings = write_file("scs_verify.txt", "ab\nba\n");
    const auto r = run("reduce-scs --strings " + strings.string() + " --length 3 --verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("% verify_equivalence true") != std::string::npos);
}

TEST_CASE("reduce-scs rejects the delimiter in input strings") {
    const auto strings = write_file("scs_bad.txt", "a#b\n");
    const auto r = run("reduce-scs --strings " + strings.string() + " --length 2");
    CHECK(r.exit_code == 2);
}

TEST_CASE("bench validates its parameters") {
    CHECK(run("bench --n 10 --k-range 0..2").exit_code == 2);
    CHECK(run("bench --n 10 --k-range 3..2").exit_code == 2);
    const auto ok = run("bench --n 6 --k-range 1..2 --repeats 1 --trials 1 --seed 1");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("k,n,cells_filled,trials,wall_time_ms,found") != std::string::npos);
}

TEST_CASE("unknown subcommand and missing file exit with 2") {
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("solve --instance /nonexistent/path.ins").exit_code == 2);
}
