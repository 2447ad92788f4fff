#ifndef NEWTON_SUMS_NEWTON_HPP
#define NEWTON_SUMS_NEWTON_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <newton_sums/polynomial.hpp>
#include <newton_sums/scalar.hpp>

namespace newton_sums
{

/// p_0, p_1, ..., p_K where p_k is the sum of the k-th powers of the roots.
/// Index equals exponent; p_0 is the number of roots.
struct PowerSumSequence
{
    std::vector<Rational> values;

    /// Builds p_0..p_n from a list that starts at p_1, with p_0 = n implied.
    static PowerSumSequence from_p1(std::size_t n, std::span<const Rational> tail)
    {
        PowerSumSequence p;
        p.values.reserve(tail.size() + 1);
        p.values.emplace_back(n);
        p.values.insert(p.values.end(), tail.begin(), tail.end());
        return p;
    }

    [[nodiscard]] std::size_t size() const { return values.size(); }
    [[nodiscard]] const Rational& operator[](std::size_t k) const { return values[k]; }

    friend bool operator==(const PowerSumSequence&, const PowerSumSequence&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const PowerSumSequence& p)
{
    os << "[";
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        os << (i == 0 ? "" : ", ") << p.values[i];
    }
    return os << "]";
}

/// Short form, valid for 1 <= k <= n:
///   p_k = A p_(k-1) - B p_(k-2) + ... +/- (k-th coeff) p_1 -/+ k (k-th coeff)
/// where the window stops at p_1 and the last term is k times the k-th
/// signed coefficient. `sums` must hold p_0..p_(k-1).
inline Rational newton_short_form(const SignedCoefficients& s, std::span<const Rational> sums, std::size_t k)
{
    Rational acc(0);
    for (std::size_t i = 1; i < k; ++i) {
        const Rational term = s.at(i) * sums[k - i];
        if (i % 2 == 1) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    const Rational tail = Rational(k) * s.at(k);
    if (k % 2 == 1) {
        acc += tail;
    } else {
        acc -= tail;
    }
    return acc;
}

/// Full-window form, valid for k >= n:
///   p_k = A p_(k-1) - B p_(k-2) + ... +/- N p_(k-n).
/// `sums` must hold p_0..p_(k-1).
inline Rational newton_window_form(const SignedCoefficients& s, std::span<const Rational> sums, std::size_t k)
{
    const std::size_t n = s.degree();
    Rational acc(0);
    for (std::size_t i = 1; i <= n; ++i) {
        const Rational term = s.at(i) * sums[k - i];
        if (i % 2 == 1) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

/// p_0..p_kmax of the roots of the monic polynomial described by s.
///
/// For k <= n the short form is used; beyond n the full window. At k = n
/// both apply (with p_0 = n) and are required to agree.
inline PowerSumSequence power_sums_from_coeffs(const SignedCoefficients& s, std::size_t k_max)
{
    const std::size_t n = s.degree();
    PowerSumSequence p;
    p.values.reserve(k_max + 1);
    p.values.emplace_back(n);
    for (std::size_t k = 1; k <= k_max; ++k) {
        if (n == 0) {
            p.values.emplace_back(0);
            continue;
        }
        if (k < n) {
            p.values.push_back(newton_short_form(s, p.values, k));
        } else if (k == n) {
            Rational short_form = newton_short_form(s, p.values, k);
            if (short_form != newton_window_form(s, p.values, k)) {
                throw internal_error("short and full-window recurrences disagree at k = n");
            }
            p.values.push_back(std::move(short_form));
        } else {
            p.values.push_back(newton_window_form(s, p.values, k));
        }
    }
    return p;
}

inline PowerSumSequence power_sums_from_coeffs(const Polynomial& p, std::size_t k_max)
{
    return power_sums_from_coeffs(to_signed(p), k_max);
}

/// Signed coefficients of degree n recovered from p_1..p_n by solving the
/// short-form relations in order; step k divides by k.
inline SignedCoefficients coeffs_from_power_sums(const PowerSumSequence& p, std::size_t n)
{
    if (p.size() < n + 1) {
        throw math_error("need p_1..p_" + std::to_string(n) + " to recover a degree-" + std::to_string(n) +
                         " polynomial, got " + std::to_string(p.size() == 0 ? 0 : p.size() - 1));
    }
    if (p.values[0] != Rational(n)) {
        throw math_error("p_0 = " + p.values[0].str() + " does not match degree " + std::to_string(n));
    }
    SignedCoefficients s;
    s.values.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        // p_k = sum_{i<k} (-1)^(i-1) a_i p_(k-i) + (-1)^(k-1) k a_k
        Rational window(0);
        for (std::size_t i = 1; i < k; ++i) {
            const Rational term = s.values[i - 1] * p.values[k - i];
            if (i % 2 == 1) {
                window += term;
            } else {
                window -= term;
            }
        }
        Rational a_k = (p.values[k] - window) / Rational(k);
        if (k % 2 == 0) {
            a_k = -a_k;
        }
        s.values.push_back(std::move(a_k));
    }
    return s;
}

/// q_0..q_kmax with q_k the sum of the (-k)-th powers of the roots, taken as
/// the ordinary power sums of the reciprocal polynomial.
inline PowerSumSequence negative_power_sums(const SignedCoefficients& s, std::size_t k_max)
{
    if (s.degree() > 0 && s.values.back().is_zero()) {
        throw math_error("zero constant term: a zero root has no reciprocal");
    }
    if (s.degree() == 0) {
        return power_sums_from_coeffs(s, k_max);
    }
    return power_sums_from_coeffs(to_signed(reciprocal_poly(from_signed(s))), k_max);
}

} // namespace newton_sums

#endif // NEWTON_SUMS_NEWTON_HPP
