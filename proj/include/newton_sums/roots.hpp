#ifndef NEWTON_SUMS_ROOTS_HPP
#define NEWTON_SUMS_ROOTS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <newton_sums/newton.hpp>
#include <newton_sums/polynomial.hpp>
#include <newton_sums/scalar.hpp>

namespace newton_sums
{

/// p_k = sum over roots of root^k, computed literally.
inline PowerSumSequence power_sums_direct(const RootMultiset& r, std::size_t k_max)
{
    PowerSumSequence p;
    p.values.assign(k_max + 1, Rational(0));
    for (const Rational& root : r.roots) {
        Rational power(1);
        for (std::size_t k = 0; k <= k_max; ++k) {
            p.values[k] += power;
            if (k < k_max) {
                power *= root;
            }
        }
    }
    return p;
}

struct RootResidual
{
    Rational root;
    Rational residual; // p(root)
};

struct IdentityResidual
{
    std::size_t k = 0;
    Rational residual; // p_k - A p_(k-1) + B p_(k-2) - ... -/+ N p_(k-n)
};

struct SubstitutionReport
{
    std::vector<RootResidual> roots;
    std::vector<IdentityResidual> identities;

    [[nodiscard]] bool all_zero() const
    {
        return std::all_of(roots.begin(), roots.end(), [](const auto& r) { return r.residual.is_zero(); }) &&
               std::all_of(identities.begin(), identities.end(),
                           [](const auto& r) { return r.residual.is_zero(); });
    }
};

/// Substitutes every root into p, then sums the substituted equations
/// x^k - A x^(k-1) + ... -/+ N x^(k-n) = 0 over the roots for n <= k <= k_max.
/// Wrong roots show up as nonzero residuals rather than an error.
inline SubstitutionReport verify_by_substitution(const Polynomial& p, const RootMultiset& r, std::size_t k_max)
{
    const SignedCoefficients s = to_signed(p);
    const std::size_t n = s.degree();
    if (r.size() != n) {
        throw math_error("root count " + std::to_string(r.size()) + " does not match degree " + std::to_string(n));
    }
    if (k_max < n) {
        throw std::invalid_argument("k_max must be at least the degree");
    }
    SubstitutionReport report;
    for (const Rational& root : r.roots) {
        report.roots.push_back({root, evaluate(p, root)});
    }
    const PowerSumSequence sums = power_sums_direct(r, k_max);
    for (std::size_t k = n; k <= k_max; ++k) {
        Rational acc = sums[k];
        for (std::size_t i = 1; i <= n; ++i) {
            const Rational term = s.at(i) * sums[k - i];
            if (i % 2 == 1) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        report.identities.push_back({k, std::move(acc)});
    }
    return report;
}

struct TruncationCell
{
    std::size_t truncation_degree = 0; // k
    std::size_t power = 0;             // j
    Rational from_truncation;          // p_j of the degree-k companion
    Rational direct;                   // p_j summed over the roots
    [[nodiscard]] bool equal() const { return from_truncation == direct; }
};

struct TruncationReport
{
    std::vector<TruncationCell> cells;

    [[nodiscard]] bool all_equal() const
    {
        return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.equal(); });
    }
};

/// For each companion degree k in 1..n and each 1 <= j <= min(k, k_max),
/// compares p_j of truncate(s, k) with the direct sum over r.
inline TruncationReport truncation_report(const SignedCoefficients& s, const RootMultiset& r, std::size_t k_max)
{
    const std::size_t n = s.degree();
    if (r.size() != n) {
        throw math_error("root count " + std::to_string(r.size()) + " does not match degree " + std::to_string(n));
    }
    if (k_max > n) {
        throw std::invalid_argument("k_max must not exceed the degree");
    }
    const PowerSumSequence direct = power_sums_direct(r, k_max);
    TruncationReport report;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t j_max = std::min(k, k_max);
        const PowerSumSequence companion = power_sums_from_coeffs(truncate(s, k), j_max);
        for (std::size_t j = 1; j <= j_max; ++j) {
            report.cells.push_back({k, j, companion[j], direct[j]});
        }
    }
    return report;
}

} // namespace newton_sums

#endif // NEWTON_SUMS_ROOTS_HPP
