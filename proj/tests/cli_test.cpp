#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "regideal/cli.hpp"

using namespace regideal;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("regideal_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Json without_timings(Json j) {
    j.erase("timings");
    return j;
}

} // namespace

TEST(CliAnalyze, Z36ReportsMismatch) {
    auto r = run({"analyze", "--zn", "36"});
    EXPECT_EQ(r.code, 3);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["ring"], "Z_36");
    EXPECT_EQ(j["chi_prime_exact"], 3);
    EXPECT_EQ(j["chi_prime_predicted"], 2);
    EXPECT_NE(r.err.find("THEOREM_MISMATCH chi_prime: predicted 2, computed 3"), std::string::npos);
}

TEST(CliAnalyze, ReducedProfileIsClean) {
    auto r = run({"analyze", "--profile", "1,1,1"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["vertices"], 6);
    EXPECT_EQ(j["edges"], 6);
    EXPECT_TRUE(j["mismatches"].empty());
    EXPECT_TRUE(r.err.empty());
}

TEST(CliAnalyze, InputErrors) {
    auto prime = run({"analyze", "--zn", "13"});
    EXPECT_EQ(prime.code, 1);
    EXPECT_NE(prime.err.find("domain ring"), std::string::npos);
    EXPECT_EQ(run({"analyze", "--zn", "36", "--profile", "2,2"}).code, 1);
    EXPECT_EQ(run({"analyze"}).code, 1);
    EXPECT_EQ(run({"analyze", "--profile", "2,,2"}).code, 1);
    EXPECT_EQ(run({"analyze", "--profile", "1"}).code, 1);
    EXPECT_EQ(run({"analyze", "--zn", "36", "--exact", "bogus"}).code, 1);
    EXPECT_EQ(run({"analyze", "--zn", "36", "--dot-mode", "tree"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(CliAnalyze, OversizeExitsTwo) {
    auto r = run({"analyze", "--profile", "4,4,4", "--max-vertices", "100"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("graph too large: 123 vertices (limit 100)"), std::string::npos);
}

TEST(CliAnalyze, ExactSubsetSkipsOtherQuantities) {
    auto r = run({"analyze", "--zn", "36", "--exact", "omega,chi"});
    EXPECT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["omega_exact"], 3);
    EXPECT_TRUE(j["chi_prime_exact"].is_null());
    EXPECT_EQ(run({"analyze", "--zn", "36", "--exact", "none"}).code, 0);
}

TEST(CliAnalyze, OutFileRoundTrips) {
    auto path = temp_path("z36.json");
    auto r = run({"analyze", "--zn", "36", "--out", path.string()});
    EXPECT_EQ(r.code, 3);
    EXPECT_TRUE(r.out.empty());
    auto parsed = Json::parse(slurp(path));
    EXPECT_EQ(without_timings(parsed), without_timings(to_json(analyze(factor_modulus(36)))));
    fs::remove(path);
}

TEST(CliAnalyze, DotFileHasGraphEdges) {
    auto path = temp_path("z36.dot");
    auto r = run({"analyze", "--zn", "36", "--dot", path.string(), "--dot-mode", "graph"});
    EXPECT_EQ(r.code, 3);
    auto dot = slurp(path);
    fs::remove(path);
    std::map<std::string, std::string> label;
    std::regex label_re(R"#((v\d+) \[label="(\d+)"\];)#");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), label_re); it != std::sregex_iterator(); ++it)
        label[(*it)[1]] = (*it)[2];
    std::set<std::set<std::string>> edges;
    std::regex edge_re(R"((v\d+) -- (v\d+);)");
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge_re); it != std::sregex_iterator(); ++it)
        edges.insert({label[(*it)[1]], label[(*it)[2]]});
    std::set<std::set<std::string>> want = {{"2", "4"},  {"2", "12"}, {"4", "12"},
                                            {"3", "9"},  {"3", "18"}, {"9", "18"}};
    EXPECT_EQ(edges, want);
}

TEST(CliSweep, SmallBoundsListRowsInOrder) {
    auto r = run({"sweep", "--max-factors", "3", "--max-t", "2"});
    EXPECT_EQ(r.code, 3);
    std::istringstream csv(r.out);
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, kCsvHeader);
    std::vector<std::string> profiles, statuses;
    while (std::getline(csv, line)) {
        std::string profile;
        if (line.front() == '"') profile = line.substr(1, line.find('"', 1) - 1);
        else profile = line.substr(0, line.find(','));
        profiles.push_back(profile);
        auto tail = line.substr(0, line.rfind(','));
        statuses.push_back(tail.substr(tail.rfind(',') + 1));
    }
    EXPECT_EQ(profiles, (std::vector<std::string>{"2", "1,1", "2,1", "2,2", "1,1,1", "2,1,1", "2,2,1", "2,2,2"}));
    EXPECT_EQ(statuses[3], "mismatch");
    EXPECT_EQ(statuses[0], "verified");
    EXPECT_NE(r.err.find("specs=8"), std::string::npos);
}

TEST(CliSweep, RejectsBadBounds) {
    EXPECT_EQ(run({"sweep", "--max-factors", "0"}).code, 1);
    EXPECT_EQ(run({"sweep", "--jobs", "0"}).code, 1);
}

TEST(CliSweep, ParallelMatchesSerial) {
    auto a = run({"sweep", "--max-factors", "3", "--max-t", "2", "--jobs", "1"});
    auto b = run({"sweep", "--max-factors", "3", "--max-t", "2", "--jobs", "3"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
}

TEST(CliVerify, SingleCheckAndErrors) {
    auto r = run({"verify", "paper", "--only", "z36-figure"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(r.out.rfind("PASS", 0), 0u);
    EXPECT_NE(r.out.find("z36-figure"), std::string::npos);
    EXPECT_EQ(run({"verify", "nonsense"}).code, 1);
    EXPECT_EQ(run({"verify", "paper", "--only", "no-such-check"}).code, 1);
}

TEST(CliTimeout, FlagThenEnvironmentThenDefault) {
    ::unsetenv("REGIDEAL_TIMEOUT");
    EXPECT_EQ(cli::resolve_timeout(std::nullopt), 60.0);
    ::setenv("REGIDEAL_TIMEOUT", "7.5", 1);
    EXPECT_EQ(cli::resolve_timeout(std::nullopt), 7.5);
    EXPECT_EQ(cli::resolve_timeout(3.0), 3.0);
    ::setenv("REGIDEAL_TIMEOUT", "junk", 1);
    EXPECT_EQ(cli::resolve_timeout(std::nullopt), 60.0);
    ::unsetenv("REGIDEAL_TIMEOUT");
}

TEST(CliBinary, ExitCodesFromExecutable) {
    const std::string bin = REGIDEAL_CLI_PATH;
    auto status = [&](const std::string& args) {
        int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    EXPECT_EQ(status("analyze --zn 36"), 3);
    EXPECT_EQ(status("analyze --zn 30"), 0);
    EXPECT_EQ(status("analyze --zn 13"), 1);
    EXPECT_EQ(status("analyze --profile 4,4,4 --max-vertices 10"), 2);
    EXPECT_EQ(status("--help"), 0);
}
