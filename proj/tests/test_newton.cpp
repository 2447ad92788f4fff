#include <stdexcept>

#include <gtest/gtest.h>

#include <newton_sums/newton.hpp>
#include <newton_sums/roots.hpp>

#include "generators.hpp"

using namespace newton_sums;

namespace
{

Rational q(long num, long den) { return Rational(Integer(num), Integer(den)); }

PowerSumSequence seq(std::vector<Rational> v) { return PowerSumSequence{std::move(v)}; }

} // namespace

TEST(PowerSums, QuadraticWithRootsOneTwo)
{
    // direct: 1+1, 1+2, 1+4, 1+8
    EXPECT_EQ(power_sums_from_coeffs(SignedCoefficients{{3, 2}}, 3), seq({2, 3, 5, 9}));
}

TEST(PowerSums, AllRootsZero)
{
    EXPECT_EQ(power_sums_from_coeffs(SignedCoefficients{{0, 0, 0}}, 5), seq({3, 0, 0, 0, 0, 0}));
}

TEST(PowerSums, SecondPowerIsASquaredMinusTwoB)
{
    const SignedCoefficients s{{3, 2}};
    const auto p = power_sums_from_coeffs(s, 2);
    EXPECT_EQ(p[2], s.at(1) * s.at(1) - Rational(2) * s.at(2));
    EXPECT_EQ(p[2], Rational(5));
}

TEST(PowerSums, SingleRoot)
{
    const Rational a = q(-7, 3);
    EXPECT_EQ(power_sums_from_coeffs(SignedCoefficients{{a}}, 4), seq({1, a, a * a, a * a * a, a * a * a * a}));
}

TEST(PowerSums, DegreeZeroIsTheEmptyRootSet)
{
    EXPECT_EQ(power_sums_from_coeffs(SignedCoefficients{}, 3), seq({0, 0, 0, 0}));
    EXPECT_EQ(power_sums_from_coeffs(SignedCoefficients{{1, 2}}, 0), seq({2}));
}

TEST(PowerSums, NonMonicInputIsNormalized)
{
    // 2x^2 - 6x + 4
    EXPECT_EQ(power_sums_from_coeffs(Polynomial{4, -6, 2}, 3), seq({2, 3, 5, 9}));
}

TEST(PowerSums, ShortAndWindowFormsAgreeAtDegree)
{
    testgen::Rng rng(21);
    for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 8));
        const SignedCoefficients s = testgen::random_signed(rng, n);
        const PowerSumSequence p = power_sums_from_coeffs(s, n);
        EXPECT_EQ(newton_short_form(s, p.values, n), newton_window_form(s, p.values, n));
        EXPECT_EQ(p[0], Rational(n));
    }
}

TEST(CoeffsFromPowerSums, Examples)
{
    EXPECT_EQ(coeffs_from_power_sums(seq({2, 3, 5}), 2), (SignedCoefficients{{3, 2}}));
    EXPECT_EQ(coeffs_from_power_sums(seq({3, 0, 0, 0}), 3), (SignedCoefficients{{0, 0, 0}}));
    // roots {1,2,3}: e1 = 6, e2 = 11, e3 = 6
    EXPECT_EQ(coeffs_from_power_sums(PowerSumSequence::from_p1(3, std::vector<Rational>{6, 14, 36}), 3),
              (SignedCoefficients{{6, 11, 6}}));
}

TEST(CoeffsFromPowerSums, Errors)
{
    EXPECT_THROW(coeffs_from_power_sums(seq({2, 3}), 2), math_error);
    EXPECT_THROW(coeffs_from_power_sums(seq({3, 3, 5}), 2), math_error);
    EXPECT_EQ(coeffs_from_power_sums(seq({0}), 0), SignedCoefficients{});
}

TEST(CoeffsFromPowerSums, ExtraEntriesAreIgnored)
{
    EXPECT_EQ(coeffs_from_power_sums(seq({2, 3, 5, 9, 17}), 2), (SignedCoefficients{{3, 2}}));
}

TEST(NegativePowerSums, Examples)
{
    const SignedCoefficients s{{3, 2}};
    const auto neg = negative_power_sums(s, 2);
    EXPECT_EQ(neg, seq({2, q(3, 2), q(5, 4)}));
    // p1 = A p0 - B q1
    const auto pos = power_sums_from_coeffs(s, 1);
    EXPECT_EQ(pos[1], s.at(1) * pos[0] - s.at(2) * neg[1]);

    const SignedCoefficients ones = to_signed(poly_from_roots({{1, 1, 1}}));
    EXPECT_EQ(negative_power_sums(ones, 4), seq({3, 3, 3, 3, 3}));

    EXPECT_EQ(negative_power_sums(SignedCoefficients{{2}}, 3), seq({1, q(1, 2), q(1, 4), q(1, 8)}));
}

TEST(NegativePowerSums, ZeroConstantTermIsRejected)
{
    EXPECT_THROW(negative_power_sums(SignedCoefficients{{1, 0}}, 1), math_error);
}

TEST(NewtonProperty, RoundTrip)
{
    testgen::Rng rng(22);
    for (int i = 0; i < 300; ++i) {
        const auto n = static_cast<std::size_t>(testgen::uniform(rng, 0, 8));
        const SignedCoefficients s = testgen::random_signed(rng, n);
        EXPECT_EQ(coeffs_from_power_sums(power_sums_from_coeffs(s, n), n), s);
    }
}

TEST(NewtonProperty, TruncationKeepsLowerPowerSums)
{
    testgen::Rng rng(23);
    for (int i = 0; i < 100; ++i) {
        const auto n = static_cast<std::size_t>(testgen::uniform(rng, 1, 8));
        const SignedCoefficients s = testgen::random_signed(rng, n);
        const PowerSumSequence full = power_sums_from_coeffs(s, n);
        for (std::size_t k = 0; k <= n; ++k) {
            const PowerSumSequence part = power_sums_from_coeffs(truncate(s, k), k);
            for (std::size_t j = 1; j <= k; ++j) {
                EXPECT_EQ(part[j], full[j]) << "k=" << k << " j=" << j;
            }
        }
    }
}

TEST(NewtonProperty, NegativePowersMatchReciprocalSums)
{
    testgen::Rng rng(24);
    for (int i = 0; i < 150; ++i) {
        const RootMultiset r = testgen::random_nonzero_roots(rng, 1, 7);
        const auto q = negative_power_sums(to_signed(poly_from_roots(r)), 6);
        for (long k = 0; k <= 6; ++k) {
            EXPECT_EQ(q[static_cast<std::size_t>(k)], testgen::power_sum_naive(r, -k));
        }
    }
}

// The full window run at k = n + m for negative m, with sums of negative
// powers filling in below p_0.
TEST(NewtonProperty, WindowExtendsToNegativeShifts)
{
    testgen::Rng rng(25);
    for (int i = 0; i < 150; ++i) {
        const RootMultiset r = testgen::random_nonzero_roots(rng, 1, 7);
        const SignedCoefficients s = to_signed(poly_from_roots(r));
        const long n = static_cast<long>(s.degree());
        const auto pos = power_sums_from_coeffs(s, s.degree());
        const auto neg = negative_power_sums(s, s.degree());
        auto sum_at = [&](long e) { return e >= 0 ? pos[static_cast<std::size_t>(e)] : neg[static_cast<std::size_t>(-e)]; };
        for (long m = -1; m >= -n; --m) {
            const long k = n + m;
            Rational rhs(0);
            for (long j = 1; j <= n; ++j) {
                const Rational term = s.at(static_cast<std::size_t>(j)) * sum_at(k - j);
                rhs += (j % 2 == 1) ? term : -term;
            }
            EXPECT_EQ(sum_at(k), rhs) << "m=" << m;
        }
    }
}
