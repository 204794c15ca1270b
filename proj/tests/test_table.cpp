#include <random>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "riders/table.hpp"

using namespace riders;

TEST(Table, TruncatedRows)
{
    const auto t = build_table(Family::bishop, 3);
    ASSERT_EQ(t.rows.size(), 4u);
    EXPECT_EQ(t.rows[0], std::vector<Integer>{1});
    EXPECT_EQ(t.rows[1], (std::vector<Integer>{1, 1}));
    EXPECT_EQ(t.rows[2], (std::vector<Integer>{1, 4, 4}));
    EXPECT_EQ(t.rows[3].size(), 5u);
    EXPECT_EQ(build_table(Family::anassa, 2).rows[2], (std::vector<Integer>{1, 4, 3}));
    EXPECT_THROW(build_table(Family::bishop, -1), std::invalid_argument);
}

TEST(Table, RectangularPadsWithZeros)
{
    const auto t = build_table(Family::anassa, 3, true);
    for (const auto& row : t.rows)
        EXPECT_EQ(row.size(), 4u);
    EXPECT_EQ(t.rows[1], (std::vector<Integer>{1, 1, 0, 0}));
}

TEST(Table, FeasibilityMatchesClosedForms)
{
    for (Family f : {Family::bishop, Family::anassa, Family::white, Family::black})
        for (std::int64_t m = 0; m <= 10; ++m) {
            const std::int64_t kmax = feasible_k_max(f, m);
            EXPECT_GT(count_closed(f, m, kmax), 0) << to_string(f) << " m=" << m;
            EXPECT_EQ(count_closed(f, m, kmax + 1), 0) << to_string(f) << " m=" << m;
        }
}

TEST(Format, CsvAndTsv)
{
    const auto t = build_table(Family::anassa, 2);
    EXPECT_EQ(write_table(t, Format::csv), "1\n1,1\n1,4,3\n");
    EXPECT_EQ(write_table(t, Format::tsv), "1\n1\t1\n1\t4\t3\n");
}

TEST(Format, JsonTable)
{
    const auto j = nlohmann::json::parse(write_table(build_table(Family::bishop, 2), Format::json));
    EXPECT_EQ(j["piece"], "bishop");
    EXPECT_EQ(j["m_max"], 2);
    EXPECT_EQ(j["rows"][2][1], "4");
}

TEST(Format, Bfile)
{
    const std::string text = write_table(build_table(Family::anassa, 2), Format::bfile, {1, "A000000"});
    EXPECT_NE(text.find("# A000000 anassa"), std::string::npos);
    EXPECT_NE(text.find("# offset 1\n"), std::string::npos);
    EXPECT_NE(text.find("# row lengths: 1 2 3\n"), std::string::npos);
    EXPECT_NE(text.find("\n1 1\n2 1\n3 1\n4 1\n5 4\n6 3\n"), std::string::npos);
}

TEST(Format, BfileRoundTripProperty)
{
    std::mt19937 rng(20261017);
    std::uniform_int_distribution<int> family(0, 3), size(0, 9), offset(-3, 5), rect(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = static_cast<Family>(family(rng));
        const auto t = build_table(f, size(rng), rect(rng) == 1);
        const std::string text = write_bfile(t, {offset(rng), ""});
        EXPECT_EQ(read_bfile_table(f, text), t) << text;
    }
}

TEST(Format, BfileRejectsBadInput)
{
    EXPECT_THROW(parse_bfile("0 1\n2 1\n"), std::runtime_error);
    EXPECT_THROW(parse_bfile("0\n"), std::runtime_error);
    EXPECT_THROW(read_bfile_table(Family::bishop, "# row lengths: 3\n0 1\n"), std::runtime_error);
}

TEST(Format, CoefficientsJsonSchema)
{
    const auto j = nlohmann::json::parse(write_coefficients(Family::bishop, 2, bishop_quasipolynomial(2), Format::json));
    EXPECT_EQ(j["piece"], "bishop");
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["period"], 2);
    ASSERT_EQ(j["coeffs"].size(), 2u);
    EXPECT_EQ(j["coeffs"][0][1], "-1/3");
    EXPECT_EQ(parse_rational(j["coeffs"][1][4].get<std::string>()), Rational(1, 2));
}

TEST(Format, CoefficientsText)
{
    EXPECT_EQ(write_coefficients(Family::anassa, 1, anassa_quasipolynomial(1), Format::csv), "0, 0, 1\n");
    EXPECT_EQ(write_coefficients(Family::anassa, 1, anassa_quasipolynomial(1), Format::tsv), "0\t0\t1\n");
    EXPECT_THROW(write_coefficients(Family::anassa, 1, anassa_quasipolynomial(1), Format::bfile),
                 std::invalid_argument);
}

TEST(Format, Deterministic)
{
    EXPECT_EQ(write_table(build_table(Family::bishop, 8), Format::bfile),
              write_table(build_table(Family::bishop, 8), Format::bfile));
}

TEST(Parse, Names)
{
    EXPECT_EQ(parse_family("black"), Family::black);
    EXPECT_FALSE(parse_family("rook").has_value());
    EXPECT_EQ(parse_format("tsv"), Format::tsv);
    EXPECT_FALSE(parse_format("xml").has_value());
}
