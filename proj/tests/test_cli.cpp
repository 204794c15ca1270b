#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "run_command.hpp"

TEST(Cli, CountExamples)
{
    EXPECT_EQ(run_command(cli("count bishop 8 2")).out, "1736\n");
    EXPECT_EQ(run_command(cli("count anassa 2 2")).out, "3\n");
    EXPECT_EQ(run_command(cli("count anassa 4 2 --below 2")).out, "7\n");
    EXPECT_EQ(run_command(cli("count bishop -1 3")).out, "6\n");
}

TEST(Cli, CountJson)
{
    const auto r = run_command(cli("--format json count anassa 4 2 --below 2"));
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["count"], "7");
    EXPECT_EQ(j["below"], 2);
}

TEST(Cli, TableRows)
{
    const auto b = run_command(cli("table bishop 2"));
    EXPECT_EQ(b.status, 0);
    EXPECT_EQ(b.out, "1\n1,1\n1,4,4\n");
    EXPECT_EQ(run_command(cli("table anassa 2")).out, "1\n1,1\n1,4,3\n");
}

TEST(Cli, Coefficients)
{
    EXPECT_EQ(run_command(cli("coeffs bishop 1 --collapse")).out, "0, 0, 1\n");
    EXPECT_EQ(run_command(cli("coeffs bishop 1")).out, "0, 0, 1\n0, 0, 1\n");
    const auto j = nlohmann::json::parse(run_command(cli("--format json coeffs bishop 3")).out);
    EXPECT_EQ(j["period"], 2);
}

TEST(Cli, OutFile)
{
    const auto path = std::filesystem::temp_directory_path() / "riders_cli_test.b";
    const auto r = run_command(cli("--format bfile --out \"" + path.string() + "\" table anassa 3"));
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_NE(text.str().find("# row lengths: 1 2 3 4"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, VerifyExitsZero)
{
    const auto r = run_command(cli("verify all --m-max 5 --k-max 4"));
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("oracle: PASS"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run_command(cli("count rook 3 2 2>/dev/null")).status, 2);
    EXPECT_EQ(run_command(cli("count bishop 3 2>/dev/null")).status, 2);
    EXPECT_EQ(run_command(cli("--format xml table bishop 3 2>/dev/null")).status, 2);
    EXPECT_EQ(run_command(cli("count bishop 3 -1 2>/dev/null")).status, 2);
    EXPECT_EQ(run_command(cli("count bishop 3 2 --below 1 2>/dev/null")).status, 2);
    EXPECT_EQ(run_command(cli("--format bfile coeffs bishop 2 2>/dev/null")).status, 2);
    EXPECT_EQ(run_command(cli("verify nonsense 2>/dev/null")).status, 2);
    EXPECT_EQ(run_command(cli("--out /nonexistent-dir/x table bishop 2 2>/dev/null")).status, 2);
    EXPECT_EQ(run_command(cli("2>/dev/null")).status, 2);
}
