#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const char* bin = std::getenv("VGC_BIN");
    std::string cmd = env + " " + (bin ? bin : "./vgc") + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

json run_json(const std::string& args, int expect = 0) {
    auto r = run(args);
    EXPECT_EQ(r.code, expect) << args << "\n" << r.out;
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, WallsNonParabolic) {
    auto j = run_json("walls --d 5");
    EXPECT_EQ(j["command"], "walls");
    EXPECT_EQ(j["result"]["critical_values"], json({"1", "3"}));
    EXPECT_EQ(j["seed"], 1);
}

TEST(Cli, WallsWithWeightsWarns) {
    auto j = run_json("walls --d 3 --l 2 --weights 1.0 --N 6");
    EXPECT_EQ(j["result"]["critical_values"], json({"1/2", "3/2"}));
    EXPECT_FALSE(j["warnings"].empty());
}

TEST(Cli, SeedFromEnvironmentAndFlag) {
    auto a = run("quot-chi --n 2 --N 4 --d 1 --l 1 --e 1 --insert 0:1.0", "VGC_SEED=42");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(json::parse(a.out)["seed"], 42);
    auto b = run_json("quot-chi --n 2 --N 4 --d 1 --l 1 --e 1 --insert 0:1.0 --seed 7");
    EXPECT_EQ(b["seed"], 7);
    EXPECT_EQ(json::parse(a.out)["result"]["value"], b["result"]["value"]);
}

TEST(Cli, ByteIdenticalOutput) {
    for (const std::string args : {"mu --n 2 --N 4 --l 1 --dprime 1 --lambda 1,0", "walls --d 6 --l 2 --partitions 1,0 --N 5",
                                   "correspondence --n 1 --l 2 --N 5 --k 3 --partitions 1,1,0 --d 1"}) {
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, Correspondence) {
    auto j = run_json("correspondence --n 2 --l 1 --N 4 --k 2 --partitions 0.0,0.0 --d 1");
    EXPECT_TRUE(j["result"]["equal"].get<bool>());
    EXPECT_EQ(j["result"]["verlinde"], j["result"]["glsm"]);
}

TEST(Cli, LaurentCheck) {
    auto j = run_json("laurent-check --n 1 --N 3 --l 1 --dprime 1");
    EXPECT_TRUE(j["result"]["regular_at_zero"].get<bool>());
    EXPECT_TRUE(j["result"]["vanishes_at_infinity"].get<bool>());
    EXPECT_TRUE(j["result"]["lemma_applies"].get<bool>());
}

TEST(Cli, OtherSubcommands) {
    auto v = run_json("verlinde --n 1 --l 2 --d 1 --partitions 2,2,1 --kind top");
    EXPECT_EQ(v["result"]["value"], 1);
    auto b = run_json("degree-bounds --n 2 --l 1 --N 4 --v 0,1");
    EXPECT_EQ(b["result"]["numerator"], 3);
    EXPECT_EQ(b["result"]["denominator"], 4);
    auto i = run_json("ifunction --n 1 --N 2 --l 0 --dmax 1 --symbolic");
    EXPECT_EQ(i["result"]["coefficients"].size(), 2u);
    auto p = run_json("mu --n 2 --N 4 --l 1 --dprime 1 --mode paired --q0 1/3");
    EXPECT_EQ(p["result"]["pairings"].size(), 3u);
}

TEST(Cli, PreconditionRejectionsExitTwo) {
    auto a = run_json("correspondence --n 3 --l 1 --N 5 --partitions 0.0.0,0.0.0,0.0.0 --d 0", 2);
    EXPECT_EQ(a["error"]["hypothesis"], "rank<=2");
    auto b = run_json("correspondence --n 2 --l 1 --N 3 --partitions 0,0 --d 0", 2);
    EXPECT_EQ(b["error"]["hypothesis"], "N>=n+2l");
    auto c = run_json("mu --n 1 --N 3 --l 1 --dprime 0", 2);
    EXPECT_EQ(c["error"]["kind"], "precondition");
    auto d = run_json("correspondence --n 1 --l 1 --N 3 --k 3 --partitions 1,0 --d 0", 2);
    EXPECT_EQ(d["error"]["hypothesis"], "k-matches-partitions");
    EXPECT_EQ(run("walls").code, 2);
    EXPECT_EQ(run("nosuch").code, 2);
}

TEST(Cli, ConsistencyFailureExitsThree) {
    auto r = run("walls --d 5", "VGC_INJECT_FAULT=consistency");
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(json::parse(r.out)["error"]["invariant"], "fault-injection");
}

TEST(Cli, LaurentOutsideHypothesisIsInformational) {
    auto j = run_json("laurent-check --n 1 --N 1 --l 1 --dprime 1");
    EXPECT_FALSE(j["result"]["lemma_applies"].get<bool>());
}

TEST(Cli, TableFormat) {
    auto r = run("walls --d 5 --format table");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("command: walls"), std::string::npos);
    EXPECT_NE(r.out.find("seed: 1"), std::string::npos);
    EXPECT_NE(r.out.find("delta"), std::string::npos);
    EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run("--help").code, 0); }
