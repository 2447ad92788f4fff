#ifndef NEWTON_SUMS_BENCH_HPP
#define NEWTON_SUMS_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <newton_sums/newton.hpp>
#include <newton_sums/polynomial.hpp>
#include <newton_sums/series.hpp>

namespace newton_sums
{

/// Monic polynomial of the given degree with lower coefficients drawn
/// uniformly from [-bound, bound]. The draw uses raw mt19937_64 output so the
/// result is the same on every standard library.
inline Polynomial random_monic_polynomial(std::size_t degree, std::uint64_t seed, int bound = 3)
{
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    std::vector<Rational> c;
    c.reserve(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) {
        c.emplace_back(static_cast<long>(rng() % span) - bound);
    }
    c.emplace_back(1);
    return Polynomial(std::move(c));
}

struct BenchResult
{
    Polynomial polynomial;
    std::size_t k_max = 0;
    double recurrence_seconds = 0;
    double series_seconds = 0;
    bool agree = false;
    std::size_t max_numerator_bits = 0;
    PowerSumSequence sums;
};

/// Times the recurrence and the series route on the same polynomial, one
/// after the other, and checks that they agree exactly.
inline BenchResult run_bench(std::size_t degree, std::size_t k_max, std::uint64_t seed)
{
    if (degree < 1 || k_max < 1) {
        throw std::invalid_argument("bench needs degree >= 1 and k >= 1");
    }
    using clock = std::chrono::steady_clock;
    BenchResult r;
    r.polynomial = random_monic_polynomial(degree, seed);
    r.k_max = k_max;

    const auto t0 = clock::now();
    PowerSumSequence by_recurrence = power_sums_from_coeffs(to_signed(r.polynomial), k_max);
    const auto t1 = clock::now();
    PowerSumSequence by_series = log_derivative_power_sums(r.polynomial, k_max);
    const auto t2 = clock::now();

    r.recurrence_seconds = std::chrono::duration<double>(t1 - t0).count();
    r.series_seconds = std::chrono::duration<double>(t2 - t1).count();
    r.agree = by_recurrence == by_series;
    for (const Rational& v : by_recurrence.values) {
        r.max_numerator_bits = std::max(r.max_numerator_bits, v.numerator_bits());
    }
    r.sums = std::move(by_recurrence);
    return r;
}

} // namespace newton_sums

#endif // NEWTON_SUMS_BENCH_HPP
