#include <cstdint>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include <newton_sums/parser.hpp>

#include "generators.hpp"

using namespace newton_sums;

namespace
{

Rational q(long num, long den) { return Rational(Integer(num), Integer(den)); }

ParseDiagnostic diagnose_polynomial(const std::string& text)
{
    try {
        (void)parse_polynomial(text);
    } catch (const parse_error& e) {
        return e.diagnostic();
    }
    ADD_FAILURE() << "expected a parse error for '" << text << "'";
    return {};
}

ParseDiagnostic diagnose_list(const std::string& text)
{
    try {
        (void)parse_rational_list(text);
    } catch (const parse_error& e) {
        return e.diagnostic();
    }
    ADD_FAILURE() << "expected a parse error for '" << text << "'";
    return {};
}

} // namespace

TEST(ParsePolynomial, Quintic)
{
    EXPECT_EQ(parse_polynomial("x^5 - x^4 + 2x^3 - 3x^2 + 4x - 5"), (Polynomial{-5, 4, -3, 2, -1, 1}));
}

TEST(ParsePolynomial, RationalCoefficientsAndGaps)
{
    EXPECT_EQ(parse_polynomial("1/2x^2 - 1/3"), (Polynomial{q(-1, 3), 0, q(1, 2)}));
    EXPECT_EQ(parse_polynomial("2/4 x"), (Polynomial{0, q(1, 2)}));
}

TEST(ParsePolynomial, LikeTermsAndWhitespace)
{
    EXPECT_EQ(parse_polynomial("  x ^ 2+x^2 -  3 x +x^0 "), (Polynomial{1, -3, 2}));
    EXPECT_EQ(parse_polynomial("-t^3 + 1"), (Polynomial{1, 0, 0, -1}));
    EXPECT_EQ(parse_polynomial("x + -1"), (Polynomial{-1, 1}));
    EXPECT_EQ(parse_polynomial("7"), Polynomial{7});
}

TEST(ParsePolynomial, CancellationToZeroIsAnError)
{
    const auto d = diagnose_polynomial("2x^2 + x^2 - 3x^2");
    EXPECT_NE(d.message.find("zero polynomial"), std::string::npos);
}

TEST(ParsePolynomial, InconsistentVariable)
{
    const auto d = diagnose_polynomial("x + y");
    EXPECT_EQ(d.offset, 4U);
    EXPECT_NE(d.message.find("inconsistent variable"), std::string::npos);
}

TEST(ParsePolynomial, Diagnostics)
{
    EXPECT_EQ(diagnose_polynomial("x^2 -").offset, 5U);
    EXPECT_EQ(diagnose_polynomial("x^-2").offset, 2U);
    EXPECT_NE(diagnose_polynomial("x^-2").message.find("negative"), std::string::npos);
    EXPECT_EQ(diagnose_polynomial("x -- 1").offset, 3U);
    EXPECT_EQ(diagnose_polynomial("--x").offset, 1U);
    EXPECT_EQ(diagnose_polynomial("").offset, 0U);
    EXPECT_EQ(diagnose_polynomial("1/0x").offset, 2U);
    EXPECT_EQ(diagnose_polynomial("3x*2").offset, 2U);
    EXPECT_EQ(diagnose_polynomial("2^3").offset, 1U);
    EXPECT_EQ(diagnose_polynomial("x^").offset, 2U);
    EXPECT_EQ(diagnose_polynomial("x^999999999999").offset, 2U);
    EXPECT_EQ(diagnose_polynomial("(x)").offset, 0U);
    const auto d = diagnose_polynomial("x 2");
    EXPECT_EQ(d.offset, 2U);
    EXPECT_FALSE(d.expected.empty());
}

TEST(ParseRationalList, Examples)
{
    EXPECT_EQ(parse_rational_list("1,2,1/3"), (std::vector<Rational>{1, 2, q(1, 3)}));
    EXPECT_EQ(parse_rational_list(" -4 , 5/10 "), (std::vector<Rational>{-4, q(1, 2)}));
    EXPECT_EQ(parse_rational_list("0"), (std::vector<Rational>{0}));
}

TEST(ParseRationalList, Diagnostics)
{
    EXPECT_EQ(diagnose_list("1,,2").offset, 2U);
    EXPECT_EQ(diagnose_list("").offset, 0U);
    EXPECT_EQ(diagnose_list("1,2,").offset, 4U);
    EXPECT_EQ(diagnose_list("1 2").offset, 2U);
    EXPECT_EQ(diagnose_list("1/0").offset, 2U);
    EXPECT_EQ(diagnose_list("x").offset, 0U);
    EXPECT_EQ(diagnose_list("--1").offset, 1U);
}

TEST(ParserProperty, RenderRoundTrip)
{
    testgen::Rng rng(51);
    for (int i = 0; i < 300; ++i) {
        const Polynomial p = testgen::random_polynomial(rng, 0, 10);
        EXPECT_EQ(parse_polynomial(to_string(p)), p) << to_string(p);
    }
}

TEST(ParserProperty, TotalOnArbitraryBytes)
{
    std::mt19937_64 rng(52);
    const std::string alphabet = "0123456789xy^/+-, \t";
    for (int i = 0; i < 20000; ++i) {
        const auto len = static_cast<std::size_t>(rng() % 12);
        std::string input;
        for (std::size_t j = 0; j < len; ++j) {
            input += (rng() % 4 == 0) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
        }
        for (int which = 0; which < 2; ++which) {
            try {
                if (which == 0) {
                    (void)parse_polynomial(input);
                } else {
                    (void)parse_rational_list(input);
                }
            } catch (const parse_error& e) {
                EXPECT_LE(e.diagnostic().offset, input.size());
            }
        }
    }
}
