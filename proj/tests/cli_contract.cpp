// Black-box contract tests for the command-line tool. The binary's path
// arrives as argv[1]; every case drives a real subprocess and checks bytes
// and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs `cli <args>` through the shell, capturing stdout. `prefix` lets a
// case set environment variables for the child.
RunResult run_cli(const std::string& args, const std::string& prefix = "") {
    std::string cmd = prefix + g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        result.out.append(buf, got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("counting sequence as csv") {
    auto r = run_cli("seq --family derangement --n 8 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0,1\n1,0\n2,1\n3,2\n4,9\n5,44\n6,265\n7,1854\n8,14833\n");
}

TEST_CASE("polynomial family evaluated at a point") {
    auto r = run_cli("seq --family derangement-poly --n 2 --x 1 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n0\n1\n");
}

TEST_CASE("single identity as json") {
    auto r = run_cli("verify --id T3.7 --max-n 10 --format json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["id"] == "T3.7");
    CHECK(parsed[0]["status"] == "pass");
    CHECK(parsed[0]["n_max"] == 10);
    CHECK(parsed[0]["witness"].is_null());
    CHECK(parsed[0]["elapsed_ms"].is_number_integer());
}

TEST_CASE("polynomials render canonically") {
    auto r = run_cli("seq --family derangement-poly --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n-1 + x\n1 - 2*x + 2*x^2\n");

    auto degen = run_cli("seq --family bernoulli-degenerate --n 2");
    CHECK(degen.exit_code == 0);
    CHECK(degen.out == "1\n-1/2 + 1/2*λ\n1/6 - 1/6*λ^2\n");

    auto lam = run_cli("seq --family derangement-poly-degenerate --n 2 --lambda 1");
    CHECK(lam.exit_code == 0);
    CHECK(lam.out == "1\n-1 + x\n-2*x + 2*x^2\n");
}

TEST_CASE("triangle families need a column") {
    auto r = run_cli("seq --family stirling2 --k 2 --n 5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0,0\n1,0\n2,1\n3,3\n4,7\n5,15\n");

    CHECK(run_cli("seq --family stirling2 --n 5").exit_code == 2);
    CHECK(run_cli("seq --family derangement --k 2 --n 5").exit_code == 2);
}

TEST_CASE("alternate evaluation strategies are selectable") {
    auto closed = run_cli("seq --family derangement-poly --n 6");
    auto egf = run_cli("seq --family derangement-poly --n 6 --route egf");
    auto rec = run_cli("seq --family derangement-poly --n 6 --route rec");
    CHECK(egf.exit_code == 0);
    CHECK(rec.exit_code == 0);
    CHECK(closed.out == egf.out);
    CHECK(closed.out == rec.out);

    // route not offered by the family
    CHECK(run_cli("seq --family derangement --n 4 --route closed").exit_code == 2);
    CHECK(run_cli("seq --family derangement --n 4 --route sideways").exit_code == 2);
}

TEST_CASE("json sequence output") {
    auto r = run_cli("seq --family derangement --n 2 --format json");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed["family"] == "derangement");
    CHECK(parsed["route"] == "canonical");
    REQUIRE(parsed["values"].size() == 3);
    CHECK(parsed["values"][0]["n"] == 0);
    CHECK(parsed["values"][0]["value"] == "1");
    CHECK(parsed["values"][2]["value"] == "1");

    auto tri = run_cli("seq --family stirling1 --k 1 --n 3 --format json");
    auto tri_parsed = nlohmann::json::parse(tri.out);
    CHECK(tri_parsed["k"] == 1);
    CHECK(tri_parsed["values"][3]["value"] == "2");
}

TEST_CASE("full verification run") {
    auto r = run_cli("verify --all --max-n 10 --format json --no-timing");
    CHECK(r.exit_code == 0);
    auto parsed = nlohmann::json::parse(r.out);
    REQUIRE(parsed.size() == 24);
    for (const auto& entry : parsed) {
        CHECK(entry["status"] == "pass");
        CHECK(entry["elapsed_ms"].is_null());
    }

    // byte-reproducible without timing
    auto again = run_cli("verify --all --max-n 10 --format json --no-timing");
    CHECK(again.out == r.out);
}

TEST_CASE("verification text output in registry order") {
    auto r = run_cli("verify --id E14 --id T3.6 --max-n 8 --no-timing");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "T3.6: pass (n_max=8)");
    CHECK(lines[1] == "E14: pass (n_max=8)");
}

TEST_CASE("injected faults drive the failure exit code") {
    auto r = run_cli("verify --all --max-n 12 --inject derangement:5 --format json --no-timing");
    CHECK(r.exit_code == 1);
    auto parsed = nlohmann::json::parse(r.out);
    unsigned failures = 0;
    for (const auto& entry : parsed) {
        if (entry["status"] == "fail") {
            ++failures;
            CHECK(entry["witness"]["n"] == 5);
        }
    }
    CHECK(failures >= 1);

    // text mode shows both sides of the first counterexample
    auto text = run_cli("verify --id E14 --max-n 12 --inject derangement:5 --no-timing");
    CHECK(text.exit_code == 1);
    CHECK(text.out.find("FAIL at n=5") != std::string::npos);
    CHECK(text.out.find("lhs = 45") != std::string::npos);
    CHECK(text.out.find("rhs = 44") != std::string::npos);
}

TEST_CASE("oracle cross-checks") {
    CHECK(run_cli("seq --family derangement --n 9 --oracle").exit_code == 0);
    CHECK(run_cli("seq --family stirling2 --k 3 --n 10 --oracle").exit_code == 0);
    CHECK(run_cli("seq --family fubini-poly --n 7 --oracle").exit_code == 0);
    CHECK(run_cli("seq --family bell-poly --n 10 --oracle").exit_code == 0);

    // enumeration refuses past its size cap
    CHECK(run_cli("seq --family derangement --n 12 --oracle").exit_code == 3);

    // injected corruption is caught by enumeration
    CHECK(run_cli("seq --family derangement --n 9 --oracle --inject derangement:4").exit_code ==
          1);

    // families without an enumerator reject the flag
    CHECK(run_cli("seq --family bernoulli-poly --n 4 --oracle").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);                                   // no subcommand
    CHECK(run_cli("seq --n 3").exit_code == 2);                          // missing family
    CHECK(run_cli("seq --family no-such --n 3").exit_code == 2);         // unknown family
    CHECK(run_cli("seq --family derangement").exit_code == 2);           // missing range
    CHECK(run_cli("seq --family derangement --n 3 --format yaml").exit_code == 2);
    CHECK(run_cli("seq --family derangement-poly --n 2 --x 1//2").exit_code == 2);
    CHECK(run_cli("verify --max-n 5").exit_code == 2);                   // neither --all nor --id
    CHECK(run_cli("verify --all --id E14 --max-n 5").exit_code == 2);    // both
    CHECK(run_cli("verify --id T9.9 --max-n 5").exit_code == 2);         // unknown id
    CHECK(run_cli("verify --id E15 --max-n 1").exit_code == 2);          // below min index
    CHECK(run_cli("verify --all --max-n 5 --inject nonsense").exit_code == 2);
    CHECK(run_cli("table --n 3").exit_code == 2);                        // missing families
}

TEST_CASE("help and version exit cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("seq --help").exit_code == 0);
    auto v = run_cli("--version");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("side-by-side table") {
    auto r = run_cli("table --families derangement,bell-poly --n 4");
    CHECK(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);
    CHECK(lines[0].find("derangement") != std::string::npos);
    CHECK(lines[0].find("bell-poly") != std::string::npos);
    CHECK(lines[5].find("9") != std::string::npos); // d_4

    // triangle families expand to their full row
    auto tri = run_cli("table --families stirling2 --n 4");
    CHECK(tri.exit_code == 0);
    CHECK(tri.out.find("0, 1, 7, 6, 1") != std::string::npos);

    // the environment width hint truncates long lines
    auto narrow = run_cli("table --families derangement-poly-degenerate --n 8",
                          "DPOLY_TABLE_WIDTH=40 ");
    CHECK(narrow.exit_code == 0);
    for (const auto& line : lines_of(narrow.out)) {
        CHECK(line.size() <= 40);
    }
    CHECK(narrow.out.find("...") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_contract <path-to-cli> [doctest args]\n");
        return 64;
    }
    g_cli = argv[1];
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv + 1);
    return context.run();
}
