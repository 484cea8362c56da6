#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "fracnabla/cli.hpp"

using namespace fracnabla;
namespace fs = std::filesystem;

namespace {

const fs::path kConfigDir = FRACNABLA_CONFIG_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("fracnabla_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SolveWritesCsvWithHorizonPlusOneRows) {
    const auto csv = dir_ / "out.csv";
    const auto r = run_cli({"solve", "--config", (kConfigDir / "rl_decaying_coefficient.cfg").string(),
                            "--csv", csv.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string text = slurp(csv);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 102);
    EXPECT_EQ(text.rfind("t,u\n0,1\n", 0), 0u);
    EXPECT_NE(r.err.find("residual_max"), std::string::npos);
}

TEST_F(CliTest, SolveWritesSvg) {
    const auto svg = dir_ / "relaxation.svg";
    const auto r = run_cli({"solve", "--config", (kConfigDir / "relaxation.cfg").string(), "--svg",
                            svg.string(), "--tol", "1e-9"});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string text = slurp(svg);
    EXPECT_NE(text.find("<polyline"), std::string::npos);
    EXPECT_NE(text.find(">relaxation<"), std::string::npos);
}

TEST_F(CliTest, SolveWithoutOutputsPrintsCsv) {
    const auto r = run_cli({"solve", "--config", (kConfigDir / "eigen_rl_decay.cfg").string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("t,u\n0,1\n1,0.3333333333333333\n", 0), 0u);
}

TEST_F(CliTest, VerifyReportsResidual) {
    const auto r = run_cli({"verify", "--config", (kConfigDir / "oscillation.cfg").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("residual_max = "), std::string::npos);
    EXPECT_NE(r.out.find("kind = two_caputo"), std::string::npos);
}

TEST_F(CliTest, VerifyFailsAboveTolerance) {
    const auto r = run_cli(
        {"verify", "--config", (kConfigDir / "oscillation.cfg").string(), "--tol", "1e-300"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("exceeds tolerance"), std::string::npos);
}

TEST_F(CliTest, PublishedVectorsFailResidualCheck) {
    const auto r = run_cli({"solve", "--config", (kConfigDir / "oscillation.cfg").string(),
                            "--csv", (dir_ / "o.csv").string(), "--paper-pq"});
    EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, WeightsDump) {
    const auto r = run_cli({"weights", "--mu", "-2", "--count", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "k,h\n1,1\n2,-1\n3,-0\n4,-0\n");
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"solve"}).code, 1);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
    EXPECT_EQ(run_cli({"solve", "--config", (dir_ / "missing.cfg").string()}).code, 1);
    EXPECT_EQ(run_cli({"weights", "--mu", "abc", "--count", "3"}).code, 1);
    EXPECT_EQ(run_cli({"solve", "--config", (kConfigDir / "relaxation.cfg").string(), "--tol",
                       "-1"})
                  .code,
              1);

    const auto bad = dir_ / "bad.cfg";
    std::ofstream(bad) << "kind = rl\nalpha = 0.5\nf = 0\nu0 = 1\nhorizon = 5\n";
    const auto r = run_cli({"verify", "--config", bad.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("missing key 'a'"), std::string::npos);
}

TEST_F(CliTest, SingularProblemIsNumericalFailure) {
    const auto cfg = dir_ / "singular.cfg";
    std::ofstream(cfg) << "kind = rl\nalpha = 0.5\na = -1 + 1e-15*t\nf = 0\nu0 = 1\nhorizon = 5\n";
    EXPECT_EQ(run_cli({"solve", "--config", cfg.string()}).code, 2);
}

TEST_F(CliTest, CsvIsByteDeterministic) {
    for (const auto& entry : fs::directory_iterator(kConfigDir)) {
        const auto a = dir_ / "a.csv";
        const auto b = dir_ / "b.csv";
        // Exit status reflects the residual check; the bytes must match regardless.
        const int first = run_cli({"solve", "--config", entry.path().string(), "--csv", a.string()}).code;
        const int second = run_cli({"solve", "--config", entry.path().string(), "--csv", b.string()}).code;
        ASSERT_NE(first, 1) << entry.path();
        EXPECT_EQ(first, second);
        EXPECT_FALSE(slurp(a).empty());
        EXPECT_EQ(slurp(a), slurp(b)) << entry.path();
    }
}
