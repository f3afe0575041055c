// Drives the paltool binary end to end: exit codes, table/csv output and
// JSON round-trips. Takes the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

int g_failures = 0;

#define REQUIRE(cond, msg)                                                        \
    do {                                                                          \
        if (!(cond)) {                                                            \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg   \
                      << "\n";                                                    \
            ++g_failures;                                                         \
        }                                                                         \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& cmd) {
    RunResult result;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <paltool-path>\n";
        return 1;
    }
    const std::string tool = argv[1];
    const auto tmp = std::filesystem::temp_directory_path();
    const std::string fib_spec = (tmp / "paltool_test_fib.word").string();
    {
        std::ofstream out(fib_spec);
        out << "type = morphic\nalphabet = a,b\nmorphism = a:ab, b:a\nseed = a\n";
    }

    // profile: csv rows match the hand-computed aab profile.
    {
        auto r = run(tool + " profile --text aab --format csv");
        REQUIRE(r.exit_code == 0, "profile exit code");
        REQUIRE(r.output == "n,C,P,T,trusted\n0,1,1,0,0\n1,2,2,-1,0\n2,2,1,0,0\n3,1,0,1,0\n",
                "csv profile of aab, got:\n" + r.output);
    }

    // profile: empty word gives the single n = 0 row.
    {
        auto r = run(tool + " profile --text \"\" --format csv");
        REQUIRE(r.exit_code == 0, "empty profile exit code");
        REQUIRE(r.output == "n,C,P,T,trusted\n0,1,1,0,1\n",
                "csv profile of empty word, got:\n" + r.output);
    }

    // profile json: T rows recompute from C and P rows.
    {
        auto r = run(tool + " profile --spec " + fib_spec + " --len 1000 --nmax 30 --format json");
        REQUIRE(r.exit_code == 0, "fib profile exit code");
        auto doc = json::parse(r.output);
        REQUIRE(doc["tool_version"].is_string(), "tool_version present");
        REQUIRE(doc["results"]["defect"] == 0, "fibonacci defect 0");
        const auto& rows = doc["results"]["rows"];
        REQUIRE(rows.size() == 31, "31 rows for --nmax 30");
        for (std::size_t n = 0; n + 1 < rows.size(); ++n) {
            long long t = rows[n]["C"].get<long long>();
            long long expect = rows[n + 1]["C"].get<long long>() - t + 2 -
                               rows[n + 1]["P"].get<long long>() -
                               rows[n]["P"].get<long long>();
            REQUIRE(rows[n]["T"].get<long long>() == expect, "T row recomputes from C and P");
            REQUIRE(rows[n]["T"].get<long long>() == 0, "fibonacci T vanishes");
        }
    }

    // verify: plain identity.
    {
        auto r = run(tool + " verify --text abca");
        REQUIRE(r.exit_code == 0, "verify abca exit 0");
        REQUIRE(r.output.find("lhs 2D = 2") != std::string::npos, "lhs 2 reported");
        REQUIRE(r.output.find("rhs sum T = 2") != std::string::npos, "rhs 2 reported");
        REQUIRE(r.output.find("PASS") != std::string::npos, "PASS reported");
    }

    // verify: selected check inapplicable -> exit 4.
    {
        auto r = run(tool + " verify --text aab --check nonneg");
        REQUIRE(r.exit_code == 4, "nonneg on aab exits 4");
        REQUIRE(r.output.find("inapplicable") != std::string::npos, "inapplicable reported");
    }

    // verify: failing check -> exit 3 (ab occurs twice before ba appears).
    {
        auto r = run(tool + " verify --text abcabba --check alternation --x ab");
        REQUIRE(r.exit_code == 3, "non-alternating factor exits 3");
        REQUIRE(r.output.find("does not alternate") != std::string::npos, "failure detail");
    }

    // verify: gn equivalence across a range.
    {
        auto r = run(tool + " verify --spec " + fib_spec + " --len 4000 --check gn --n 1..8");
        REQUIRE(r.exit_code == 0, "gn range on fibonacci exits 0");
        for (int n = 1; n <= 8; ++n) {
            std::string token = "n=" + std::to_string(n) + ":ok";
            REQUIRE(r.output.find(token) != std::string::npos, "gn ok at " + token);
        }
    }

    // verify: every named check passes on the fibonacci prefix.
    {
        auto r = run(tool + " verify --spec " + fib_spec +
                     " --len 4000 --check lemma1 --check lemma2 --check prop41" +
                     " --check lemma43 --check alternation --check nonneg");
        REQUIRE(r.exit_code == 0, "all checks pass on fibonacci");
        REQUIRE(r.output.find("FAIL") == std::string::npos, "no FAIL lines");
        REQUIRE(r.output.find("both_exist") != std::string::npos, "lemma43 verdict");
    }

    // verify json shape.
    {
        auto r = run(tool + " verify --text abca --format json");
        auto doc = json::parse(r.output);
        REQUIRE(doc["command"] == "verify", "command field");
        REQUIRE(doc["verdict"] == "pass", "verdict pass");
        REQUIRE(doc["results"]["checks"][0]["name"] == "identity", "identity listed");
    }

    // harness json: verdict and residual recompute from raw fields.
    {
        auto r = run(tool + " harness --spec " + fib_spec + " --schedule 1000,2000,4000 --nmax 24");
        REQUIRE(r.exit_code == 0, "harness exit 0");
        auto doc = json::parse(r.output);
        REQUIRE(doc["verdict"] == "equality_holds_on_evidence", "fibonacci harness verdict");
        long long lhs = doc["results"]["identity"]["lhs"].get<long long>();
        long long rhs = doc["results"]["identity"]["rhs"].get<long long>();
        REQUIRE(lhs == 0 && rhs == 0, "fibonacci lhs/rhs zero");
        const auto& prefixes = doc["results"]["prefixes"];
        REQUIRE(prefixes.size() == 3, "three snapshots");
        const auto& last = prefixes[prefixes.size() - 1];
        REQUIRE(2 * last["defect"].get<long long>() == lhs, "lhs recomputes from defect");
        long long sum = 0;
        for (const auto& t : last["T"]) sum += t.get<long long>();
        REQUIRE(sum == last["sum_T"].get<long long>(), "sum_T recomputes from T");
        REQUIRE(sum == rhs, "rhs recomputes from the last snapshot");
        // Verdict recomputation from raw fields.
        bool stabilized = last["stabilized"].get<bool>();
        long long m = doc["results"]["thresholds"]["M"].get<long long>();
        bool equality = stabilized && doc["results"]["thresholds"]["valid"].get<bool>() &&
                        m < last["trusted_n"].get<long long>() && lhs == rhs;
        REQUIRE(equality == (doc["verdict"] == "equality_holds_on_evidence"),
                "verdict recomputes from raw fields");
    }

    // harness: random words do not reach the equality verdict.
    {
        std::string rnd_spec = (tmp / "paltool_test_rnd.word").string();
        std::ofstream(rnd_spec) << "type = random\nalphabet = a,b\nseed = 777\n";
        auto r = run(tool + " harness --spec " + rnd_spec + " --schedule 512,1024,2048 --nmax 16");
        REQUIRE(r.exit_code == 0, "harness on random exits 0");
        auto doc = json::parse(r.output);
        REQUIRE(doc["verdict"] != "equality_holds_on_evidence", "random verdict");
    }

    // graph export format.
    {
        auto r = run(tool + " graph --spec " + fib_spec + " --len 500 --n 2");
        REQUIRE(r.exit_code == 0, "graph exit 0");
        REQUIRE(r.output.find('\t') != std::string::npos, "tab-separated edges");
        REQUIRE(r.output.find("loop") != std::string::npos, "fibonacci g2 loops");
    }

    // usage errors exit 2.
    {
        REQUIRE(run(tool + " profile --no-such-flag").exit_code == 2, "unknown flag exits 2");
        REQUIRE(run(tool + " profile").exit_code == 2, "missing input exits 2");
        REQUIRE(run(tool + " verify --spec " + fib_spec + " --check gn").exit_code == 2,
                "missing --len for generated source exits 2");
        std::string bad_spec = (tmp / "paltool_test_bad.word").string();
        std::ofstream(bad_spec) << "type = literal\nbogus = 1\n";
        auto r = run(tool + " profile --spec " + bad_spec);
        REQUIRE(r.exit_code == 2, "bad spec exits 2");
        REQUIRE(r.output.find("line 2") != std::string::npos, "parse error names the line");
    }

    if (g_failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << g_failures << " failures\n";
    return 1;
}
