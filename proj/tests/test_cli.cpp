#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

// Runs the CLI with stderr discarded.
CliResult cli(const std::string& args) {
    const std::string cmd = std::string(SPECTRA_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const std::string& name) { return std::string(SPECTRA_SAMPLES_DIR) + "/" + name; }

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST(Cli, Version) {
    const CliResult r = cli("--version");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("spectra"), std::string::npos);
}

TEST(Cli, SpectrumCsvLayout) {
    const CliResult r = cli("spectrum --domain " + sample("circle.json") + " --method cmm --n 10 --count 3");
    ASSERT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 4u);
    EXPECT_EQ(l[0], "level_index,label,eigenvalue,degeneracy,method,N,N_int");
    EXPECT_EQ(l[1].rfind("0,", 0), 0u);
    EXPECT_NE(l[1].find(",cmm,10,"), std::string::npos);
    EXPECT_NE(l[1].find("5.78319"), std::string::npos);
}

TEST(Cli, SpectrumJson) {
    const CliResult r = cli("spectrum --domain " + sample("square.json") + " --method ccm --n 16 --count 3 --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["levels"].size(), 3u);
    EXPECT_NEAR(j["levels"][0]["eigenvalue"].get<double>(), 4.934802200544679, 1e-2);
}

TEST(Cli, InlineDomainAndRepeatability) {
    const std::string args = "spectrum --domain '{\"kind\":\"polynomial\",\"coeffs\":[0,1,0.05],\"domain\":\"square\"}' "
                             "--method pt --nint 8 --count 5";
    const CliResult a = cli(args), b = cli(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(lines(a.out).size(), 6u);
}

TEST(Cli, CompareAgainstItselfIsZero) {
    const CliResult r = cli("compare --domain " + sample("circle.json") + " --method cmm --n 8 --count 4");
    ASSERT_EQ(r.code, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 5u);
    for (size_t i = 1; i < l.size(); ++i) EXPECT_EQ(l[i].substr(l[i].rfind(',') + 1), "0") << l[i];
}

TEST(Cli, CompareAgainstExactCircle) {
    const CliResult r = cli("compare --domain " + sample("circle.json") + " --method cmm --n 12 --count 3 --against exact --format json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GT(j["max_xi"].get<double>(), 0.0);
    EXPECT_LT(j["max_xi"].get<double>(), 1e-4);
}

TEST(Cli, OutFile) {
    const std::string path = testing::TempDir() + "spectra_cli_out.csv";
    std::remove(path.c_str());
    const CliResult r = cli("spectrum --domain " + sample("square.json") + " --method cmm --n 4 --count 2 --out " + path);
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    FILE* f = std::fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    std::fclose(f);
}

TEST(Cli, Pdem) {
    const CliResult r = cli("pdem --domain " + sample("pdem_box.json") + " --nint 8");
    EXPECT_EQ(r.code, 0);
    EXPECT_GE(lines(r.out).size(), 4u);
}

TEST(Cli, TablesPass) {
    EXPECT_EQ(cli("tables t4").code, 0);
}

TEST(Cli, UsageErrorsExitWithTwo) {
    EXPECT_EQ(cli("").code, 2);
    EXPECT_EQ(cli("spectrum --method ccm").code, 2);
    EXPECT_EQ(cli("spectrum --domain " + sample("circle.json") + " --method ccm --n 7").code, 2);
    EXPECT_EQ(cli("spectrum --domain " + sample("circle.json") + " --method lanczos").code, 2);
    EXPECT_EQ(cli("spectrum --domain '{\"kind\":\"ellipse\"}'").code, 2);
    EXPECT_EQ(cli("spectrum --domain /nonexistent.json").code, 2);
    EXPECT_EQ(cli("spectrum --domain " + sample("circle.json") + " --format xml").code, 2);
    EXPECT_EQ(cli("tables t9").code, 2);
    EXPECT_EQ(cli("compare --domain " + sample("robnik.json") + " --against exact").code, 2);
}

TEST(Cli, ComputeFailureExitsWithOne) {
    // a map whose derivative vanishes inside the square
    EXPECT_EQ(cli("spectrum --domain '{\"kind\":\"polynomial\",\"coeffs\":[0,1,2],\"domain\":\"square\"}' --method ccm --n 8").code, 1);
}
