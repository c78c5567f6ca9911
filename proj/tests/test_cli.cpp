#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SEMIHOLE_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fx(const char* name) { return std::string(SEMIHOLE_FIXTURES) + "/" + name; }

std::string fixture_text(const char* name) {
    std::ifstream in(fx(name), std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("analyze output is byte stable") {
    std::string a = run("analyze " + fx("gap2.mat") + " --no-timings").out;
    std::string b = run("analyze " + fx("gap2.mat") + " --no-timings").out;
    CHECK(a == b);
    CHECK(!a.empty());
    std::string j1 = run("analyze " + fx("gap2.mat") + " --json --no-timings").out;
    std::string j2 = run("analyze " + fx("gap2.mat") + " --json --no-timings").out;
    CHECK(j1 == j2);
}

TEST_CASE("thread count does not change the report") {
    std::string a = run("analyze " + fx("gap2.mat") + " --no-timings --threads 1").out;
    std::string b = run("analyze " + fx("gap2.mat") + " --no-timings --threads 4").out;
    CHECK(a == b);
}

TEST_CASE("json fields of the numerical semigroup") {
    RunResult r = run("analyze " + fx("a357.mat") + " --json --no-timings");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["matrix"] == nlohmann::json::parse("[[3,5,7]]"));
    CHECK(j["rank"] == 1);
    CHECK(j["pointed"] == true);
    CHECK(j["extremeColumns"] == nlohmann::json::parse("[1]"));
    CHECK(j["finiteness"] == "FINITE");
    CHECK(j["holes"] == nlohmann::json::parse("[[1],[2],[4]]"));
    CHECK(j["fundamentalHoles"] == nlohmann::json::parse("[[1],[2]]"));
    CHECK(j["nonSaturation"] == nlohmann::json::parse("[[0],[3]]"));
    CHECK(j["minSS"]["points"] == nlohmann::json::parse("[[5],[6],[7],[8],[9]]"));
    CHECK(j["minSQ"]["points"] == nlohmann::json::parse("[[5],[6],[7]]"));
    CHECK(j["minSQsat"]["points"] == nlohmann::json::parse("[[5]]"));
    CHECK(j["minSS"]["complete"] == true);
    CHECK(j["theorem21"]["agree"] == true);
    CHECK(j["shiftTable"]["bounds"] == nlohmann::json::parse("[2,1,1]"));
    CHECK(j["shiftTable"]["entries"][0]["shifts"][0]["value"] == 2);
}

TEST_CASE("infinite case reports a witness and inf shifts") {
    RunResult r = run("analyze " + fx("gap2inf.mat") + " --json --no-timings --stages finiteness");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["finiteness"] == "INFINITE");
    CHECK(j["witness"]["source"] == nlohmann::json::parse("[1,1]"));
    CHECK(j["witness"]["column"] == 1);
    bool saw_inf = false;
    for (const auto& e : j["shiftTable"]["entries"])
        for (const auto& s : e["shifts"])
            if (s["value"] == "inf") saw_inf = true;
    CHECK(saw_inf);
}

TEST_CASE("exit codes") {
    CHECK(run("analyze " + fx("notpointed.mat")).code == 2);
    CHECK(run("analyze " + fx("gap2inf.mat") + " --stages holes").code == 3);
    CHECK(run("analyze " + fx("gap2inf.mat") + " --stages saturation").code == 3);
    CHECK(run("analyze " + fx("gap2inf.mat") + " --stages minsets --bound 10").code == 0);
    CHECK(run("analyze " + fx("gap2inf.mat") + " --stages finiteness").code == 0);
    CHECK(run("analyze " + fx("a357.mat") + " --stages nonsense").code == 1);
    CHECK(run("analyze /no/such/file.mat").code == 1);
    CHECK(run("frobenius 2 4").code == 1);
}

TEST_CASE("bounded minimal set search when holes are infinite") {
    RunResult r = run("analyze " + fx("gap2inf.mat") + " --json --no-timings --stages minsets --bound 10");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["minSQ"]["points"] == nlohmann::json::parse("[[1,2],[1,3],[1,4]]"));
    CHECK(j["minSQ"]["complete"] == false);
    CHECK(j["minSQ"]["bound"] == 10);
}

TEST_CASE("table subcommand reproduces the stored matrices") {
    RunResult k4 = run("table --sizes 2x2x2x2 --margins 12,13,14,23,24,34 --keep-redundant");
    CHECK(k4.code == 0);
    CHECK(k4.out == fixture_text("k4_24x16.mat"));
    RunResult red = run("table --sizes 2x2x2x2 --margins 12,13,14,234");
    CHECK(red.code == 0);
    CHECK(red.out == fixture_text("margins_12x16.mat"));
}

TEST_CASE("frobenius subcommand") {
    RunResult r = run("frobenius 3 5 7");
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
}

TEST_CASE("matrix on standard input") {
    std::string cmd = std::string(SEMIHOLE_CLI_PATH) + " analyze - --json --no-timings < " + fx("a357.mat") + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    REQUIRE(WEXITSTATUS(pclose(p)) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["holes"] == nlohmann::json::parse("[[1],[2],[4]]"));
}

TEST_CASE("oracle subcommand classifies a box") {
    RunResult r = run("oracle " + fx("a357.mat") + " --lo 0 --hi 5");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("(1) HOLE") != std::string::npos);
    CHECK(r.out.find("(3) IN_Q NONSAT") != std::string::npos);
    CHECK(r.out.find("(5) IN_Q SAT") != std::string::npos);
}
