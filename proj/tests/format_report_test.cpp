#include "photonsplit/amplitude_formula.hpp"
#include "photonsplit/operator_expansion.hpp"
#include "photonsplit/report.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace photonsplit;

namespace {

BigRational q(long p, long d = 1) { return BigRational(p, d); }

}  // namespace

TEST(to_decimal_string, examples) {
    EXPECT_EQ(to_decimal_string(q(1, 3)), "0.333333333333333");
    EXPECT_EQ(to_decimal_string(q(2, 3)), "0.666666666666667");
    EXPECT_EQ(to_decimal_string(q(3, 8)), "0.375");
    EXPECT_EQ(to_decimal_string(q(1)), "1");
    EXPECT_EQ(to_decimal_string(q(0)), "0");
    EXPECT_EQ(to_decimal_string(q(-1, 4)), "-0.25");
    EXPECT_EQ(to_decimal_string(BigRational(BigInt(1), BigInt("100000000000000000000"))), "1e-20");
    EXPECT_EQ(to_decimal_string(BigRational(BigInt("123456789012345678"))), "1.23456789012346e+17");
    EXPECT_EQ(to_decimal_string(q(1, 100000)), "1e-05");
    EXPECT_EQ(to_decimal_string(q(1, 10000)), "0.0001");
    EXPECT_EQ(to_decimal_string(q(9999999, 10000000), 3), "1");
}

TEST(to_decimal_string, ties_round_to_even) {
    EXPECT_EQ(to_decimal_string(BigRational(BigInt(1234567890123445), BigInt("10000000000000000"))),
              "0.123456789012344");
    EXPECT_EQ(to_decimal_string(BigRational(BigInt(1234567890123435), BigInt("10000000000000000"))),
              "0.123456789012344");
    EXPECT_EQ(to_decimal_string(q(5, 2), 1), "2");
    EXPECT_EQ(to_decimal_string(q(7, 2), 1), "4");
}

TEST(to_decimal_string, parses_back_to_nearby_double) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(1, 1000000000), den(1, 1000000000);
    for (int i = 0; i < 2000; ++i) {
        BigRational r(num(rng), den(rng));
        double back = std::stod(to_decimal_string(r));
        EXPECT_NEAR(back / to_double(r), 1, 1e-14);
    }
}

TEST(parse_rational, accepted_forms) {
    EXPECT_EQ(parse_rational("1/2"), q(1, 2));
    EXPECT_EQ(parse_rational("2/4"), q(1, 2));
    EXPECT_EQ(parse_rational("-3/9"), q(-1, 3));
    EXPECT_EQ(parse_rational("+7"), q(7));
    EXPECT_EQ(parse_rational("0.25"), q(1, 4));
    EXPECT_EQ(parse_rational(".5"), q(1, 2));
    EXPECT_EQ(parse_rational("3."), q(3));
    EXPECT_EQ(parse_rational("010"), q(10));
    EXPECT_EQ(parse_rational("007/014"), q(1, 2));
    EXPECT_EQ(parse_rational("0.0625"), q(1, 16));
    EXPECT_EQ(parse_rational("100891344545564193334812497256/3"),
              BigRational(BigInt("100891344545564193334812497256"), BigInt(3)));
}

TEST(parse_rational, rejects_garbage) {
    for (const char* bad : {"", "-", "/", "1/", "/2", "1/0", "abc", "1.2.3", "1/2/3", "0x10", "1e3", " 1", "."})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(report, json_round_trip) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> photons(0, 6);
    std::uniform_int_distribution<long> num(1, 9);
    for (int i = 0; i < 40; ++i) {
        long a = num(rng), b = num(rng);
        if (a == b) continue;
        SplitterSpec s(BigRational(std::min(a, b), std::max(a, b)));
        auto dist = oracle_distribution({photons(rng), photons(rng)}, s);
        auto text = distribution_json(dist).dump();
        auto back = parse_distribution_json(nlohmann::json::parse(text));
        EXPECT_EQ(back.input, dist.input);
        EXPECT_EQ(back.splitter, dist.splitter);
        EXPECT_EQ(back.entries, dist.entries);
    }
}

TEST(report, json_layout) {
    auto j = distribution_json(output_distribution({2, 2}));
    EXPECT_EQ(j["input"]["n1"], 2);
    EXPECT_EQ(j["splitter"]["t2"], "1/2");
    EXPECT_EQ(j["meta"]["version"], kVersion);
    ASSERT_EQ(j["outcomes"].size(), 5u);
    EXPECT_EQ(j["outcomes"][0]["p"], "3/8");
    EXPECT_EQ(j["outcomes"][0]["N2"], 4);
    EXPECT_DOUBLE_EQ(j["outcomes"][0]["p_float"].get<double>(), 0.375);
}

TEST(report, csv_and_json_carry_the_same_values) {
    auto dist = oracle_distribution({3, 2}, SplitterSpec(q(1, 3)));
    std::ostringstream csv;
    write_distribution_csv(csv, dist);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "n1,n2,t2,N1,N2,p,p_float");
    auto j = distribution_json(dist);
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        ASSERT_EQ(fields.size(), 7u);
        const auto& o = j["outcomes"][row++];
        EXPECT_EQ(fields[2], "1/3");
        EXPECT_EQ(std::stoi(fields[3]), o["N1"].get<int>());
        EXPECT_EQ(fields[5], o["p"].get<std::string>());
        EXPECT_EQ(std::stod(fields[6]), o["p_float"].get<double>());
    }
    EXPECT_EQ(row, 6u);
}
