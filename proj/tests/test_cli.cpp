#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

#include "qgl/errors.hpp"
#include "qgl/suites.hpp"

using namespace qgl;

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::string& args) {
    std::string cmd = std::string(QGL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream f(path);
    return nlohmann::json::parse(f);
}

}  // namespace

TEST(Cli, FockSuitePasses) {
    CliRun r = cli("verify --module fock --max-weight 6 --mode-window 3 --out cli_fock.json");
    EXPECT_EQ(r.code, 0) << r.out;
    auto j = read_json("cli_fock.json");
    EXPECT_EQ(j["suite"], "fock");
    EXPECT_EQ(j["summary"]["fail"], 0);
    EXPECT_GT(j["summary"]["pass"].get<int>(), 0);
}

TEST(Cli, NonCoprimeResonanceIsConfigError) {
    EXPECT_EQ(cli("resonance --k 1 --r 3 --c \"\"").code, 2);
}

TEST(Cli, ConfigErrors) {
    EXPECT_EQ(cli("verify --module nope").code, 2);
    EXPECT_EQ(cli("verify --module vector --mode-window 3 --series-order 5").code, 2);
    EXPECT_EQ(cli("verify --qmode fast").code, 2);
    EXPECT_EQ(cli("resonance --k 2 --r 2 --c 3").code, 2);
    EXPECT_EQ(cli("verify --no-such-flag").code, 2);
    EXPECT_EQ(cli("print hexagon").code, 2);
    EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, MacdonaldPrint) {
    CliRun r = cli("macdonald --N 2 --shape 2,0 --print");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(1)/(1)*m[2,0] + (1+-1*t^1+1*q^1+-1*q^1*t^1)/(1+-1*q^1*t^1)*m[1,1]\n");
}

TEST(Cli, PrintTail) {
    CliRun r = cli("print tail --k 2 --r 2 --c 1 --entries 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[0,-1,-2,-3,-4,-5]\n");
}

TEST(Cli, PrintGamma) {
    CliRun r = cli("print gamma --i 0");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, print_object("gamma", PrintParams{}) + "\n");
    EXPECT_NE(r.out.find("(1-q3^1*u^1*z^-1)^1"), std::string::npos) << r.out;
}

TEST(Cli, PrintFockRow) {
    CliRun r = cli("print fock-row --shape 1 --modes -1,1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
    EXPECT_EQ(r.out.rfind("e_-1 [1] = ", 0), 0u);
    EXPECT_NE(r.out.find("e_1 [1] = "), std::string::npos);
}

TEST(Cli, SameSeedSameReport) {
    std::string args = "verify --module wn --N 2 --mode-window 1 --qmode numeric:9 --workers 2 --out ";
    ASSERT_EQ(cli(args + "cli_det_a.json").code, 0);
    ASSERT_EQ(cli(args + "cli_det_b.json").code, 0);
    auto a = read_json("cli_det_a.json");
    auto b = read_json("cli_det_b.json");
    a.erase("seconds");
    b.erase("seconds");
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, NumericAndSymbolicAgree) {
    ASSERT_EQ(cli("wn --N 2 --mode-window 1 --qmode numeric:3 --out cli_num.json").code, 0);
    ASSERT_EQ(cli("wn --N 2 --mode-window 1 --out cli_sym.json").code, 0);
    auto a = read_json("cli_num.json");
    auto b = read_json("cli_sym.json");
    EXPECT_EQ(a["summary"], b["summary"]);
}

TEST(Suites, DefaultsResolve) {
    VerifyOptions o;
    o.module = "vector";
    o.resolve();
    EXPECT_EQ(o.mode_window, 3);
    EXPECT_EQ(o.series_order, 6);
    EXPECT_EQ(o.entry_window, (std::pair<int, int>{-3, 3}));

    VerifyOptions r;
    r.module = "resonance";
    r.tail = TailSpec{1, 3, {}};
    EXPECT_THROW(r.resolve(), UnsupportedResonance);
}

TEST(Suites, ResonanceOneTwoPasses) {
    VerifyOptions o;
    o.module = "resonance";
    o.tail = TailSpec{1, 2, {}};
    o.max_weight = 3;
    o.mode_window = 1;
    Report r = verify_module(o);
    EXPECT_TRUE(r.passed()) << r.summary_line();
    bool trunc = false, boundary = false;
    for (const auto& c : r.cases) {
        trunc |= c.id.rfind("truncation", 0) == 0;
        boundary |= c.id.rfind("boundary", 0) == 0;
    }
    EXPECT_TRUE(trunc);
    EXPECT_TRUE(boundary);
}

TEST(Suites, WheelAndDelta) {
    EXPECT_TRUE(verify_wheel(1, 2, 5).passed());
    Report d = verify_delta(10, 6, 5);
    EXPECT_EQ(d.cases.size(), 10u);
    EXPECT_TRUE(d.passed());
}
