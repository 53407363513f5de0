#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += (c == '\'') ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

// stdout only; stderr is discarded so error text never leaks into compared output
Run cli(const std::vector<std::string>& args) {
    std::string cmd = quote(SUMPROD_CLI_PATH);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        dir_ = fs::temp_directory_path() / ("sumprod_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
        std::ofstream(dir_ / "A.txt") << "# three powers of two\n2\n4\n\n8\n";
        std::ofstream(dir_ / "bad.txt") << "2\nseven\n";
        std::ofstream big(dir_ / "big.txt");
        for (int k = 1; k <= 200; ++k) big << k << "\n";
    }
    static void TearDownTestSuite() { fs::remove_all(dir_); }
    static std::string path(const char* name) { return (dir_ / name).string(); }

    static fs::path dir_;
};

fs::path Cli::dir_;

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_F(Cli, ClassifyExceptional) {
    const auto r = cli({"classify", "--poly", "x*y + x^2*y^2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "EXCEPTIONAL"));
    EXPECT_TRUE(contains(r.out, "t + t^2"));
    EXPECT_TRUE(contains(r.out, "x*y"));
}

TEST_F(Cli, ClassifyNonExceptional) {
    const auto r = cli({"classify", "--poly", "x + y"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "NON-EXCEPTIONAL"));
    EXPECT_TRUE(contains(r.out, "(1,0)"));
    EXPECT_TRUE(contains(r.out, "(0,1)"));
}

TEST_F(Cli, ParseErrorExitsTwo) {
    EXPECT_EQ(cli({"classify", "--poly", "x^^2"}).code, 2);
    EXPECT_EQ(cli({"energy", "--set", path("A.txt"), "--poly", "x*z"}).code, 2);
    EXPECT_EQ(cli({"energy", "--set", path("bad.txt"), "--poly", "x*y"}).code, 2);
}

TEST_F(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"energy", "--poly", "x*y"}).code, 2);
    EXPECT_EQ(cli({"energy", "--set", path("A.txt"), "--poly", "x*y", "--format", "xml"}).code, 2);
    EXPECT_EQ(cli({"energy", "--set", path("missing.txt"), "--poly", "x*y"}).code, 2);
    EXPECT_EQ(cli({"bound", "--n", "0", "--r", "0"}).code, 2);
}

TEST_F(Cli, Energy) {
    const auto r = cli({"energy", "--set", path("A.txt"), "--poly", "x*y", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "E=19"));
    EXPECT_TRUE(contains(r.out, "|f(A,A)|=5"));
}

TEST_F(Cli, Bound) {
    const auto r = cli({"bound", "--n", "1", "--r", "0", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "16777216");
    const auto j = nlohmann::json::parse(cli({"bound", "--n", "1", "--r", "1", "--format", "json"}).out);
    EXPECT_EQ(j["value"], "68719476736");
}

TEST_F(Cli, SweepCsv) {
    // brute force gives 44 here, not 5N - 4 = 46
    const auto r = cli({"sweep", "--poly", "x^2*y^3", "--family", "geometric:2", "--N", "10",
                        "--allow-exceptional", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "N,setsize,productset,K,image,ratio\n10,10,19,1.900000,44,0.440000\n");
    EXPECT_EQ(cli({"sweep", "--poly", "x^2*y^3", "--family", "geometric:2", "--N", "10"}).code, 2);
}

TEST_F(Cli, CapExceededExitsThree) {
    EXPECT_EQ(cli({"image", "--set", path("A.txt"), "--poly", "x*y", "--max-pairs", "8"}).code, 3);
    EXPECT_EQ(cli({"image", "--set", path("A.txt"), "--poly", "x*y", "--max-pairs", "9"}).code, 0);
    EXPECT_EQ(cli({"energy", "--set", path("big.txt"), "--poly", "x+y", "--max-pairs", "1000"}).code, 3);
}

TEST_F(Cli, AuditPasses) {
    const auto r = cli({"audit", "--set", path("A.txt"), "--poly", "x*y + x^2*y^3", "--ggp", "2^[3]",
                        "--t", "5", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.is_object());
    EXPECT_EQ(cli({"audit", "--set", path("A.txt"), "--poly", "x*y + x^2*y^2"}).code, 2);
    EXPECT_EQ(cli({"audit", "--poly", "x^2 - y^2", "--random-set", "20", "--seed", "5"}).code, 0);
}

TEST_F(Cli, JsonParsesStrictly) {
    const std::vector<std::vector<std::string>> runs{
        {"classify", "--poly", "x*y + x^2*y^2", "--format", "json"},
        {"image", "--set", path("A.txt"), "--poly", "x*y", "--format", "json"},
        {"energy", "--set", path("A.txt"), "--poly", "x*y", "--format", "json"},
        {"structure", "--set", path("A.txt"), "--ggp", "2^[3] * 3^[3]", "--t", "2", "--format", "json"},
        {"audit", "--set", path("A.txt"), "--poly", "x - y", "--format", "json"},
        {"sweep", "--poly", "x + y", "--family", "geometric:2", "--N", "4,8", "--format", "json"},
        {"bound", "--n", "3", "--r", "2", "--format", "json"},
    };
    for (const auto& args : runs) {
        const auto r = cli(args);
        EXPECT_EQ(r.code, 0) << args[0];
        EXPECT_NO_THROW((void)nlohmann::json::parse(r.out)) << args[0];
    }
    const auto s = nlohmann::json::parse(cli(runs[3]).out);
    EXPECT_EQ(s["rank"], 1);
}

TEST_F(Cli, ByteIdenticalReruns) {
    for (const char* threads : {"1", "3"}) {
        const auto a = cli({"audit", "--poly", "x^2 + x*y - y^2", "--random-set", "25", "--seed", "11",
                            "--threads", threads, "--format", "json", "--table"});
        const auto b = cli({"audit", "--poly", "x^2 + x*y - y^2", "--random-set", "25", "--seed", "11",
                            "--threads", "1", "--format", "json", "--table"});
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
    const auto s1 = cli({"sweep", "--poly", "x - 2*y^2", "--family", "geometric:3", "--N", "5,10,20",
                         "--threads", "4"});
    const auto s2 = cli({"sweep", "--poly", "x - 2*y^2", "--family", "geometric:3", "--N", "5,10,20"});
    EXPECT_EQ(s1.out, s2.out);
}
