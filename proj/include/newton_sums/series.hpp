#ifndef NEWTON_SUMS_SERIES_HPP
#define NEWTON_SUMS_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <newton_sums/newton.hpp>
#include <newton_sums/polynomial.hpp>
#include <newton_sums/scalar.hpp>

namespace newton_sums
{

/// Truncated series in descending powers of x:
///   terms[0] x^start + terms[1] x^(start-1) + ... + terms[order-1] x^(start-order+1).
/// Coefficients past the last term are unknown, not zero.
struct DescendingSeries
{
    long start_exponent = -1;
    std::vector<Rational> terms;

    [[nodiscard]] std::size_t order() const { return terms.size(); }
    [[nodiscard]] long exponent_of(std::size_t j) const { return start_exponent - static_cast<long>(j); }
    /// Smallest exponent whose coefficient is known.
    [[nodiscard]] long lowest_exponent() const { return start_exponent - static_cast<long>(order()) + 1; }

    friend bool operator==(const DescendingSeries&, const DescendingSeries&) = default;
};

/// num/den = c_1/x + c_2/x^2 + ... + c_order/x^order + O(x^-(order+1)),
/// by long division from the top: each step divides the leading remainder
/// coefficient by the leading coefficient of den and subtracts.
inline DescendingSeries divide_descending(const Polynomial& num, const Polynomial& den, std::size_t order)
{
    if (den.is_zero()) {
        throw math_error("division by the zero polynomial");
    }
    if (order == 0) {
        throw std::invalid_argument("series order must be at least 1");
    }
    const std::size_t d = den.degree();
    if (!num.is_zero() && num.degree() >= d) {
        throw math_error("numerator degree must be below denominator degree");
    }
    if (d == 0) {
        // only the zero numerator qualifies, and its expansion is zero
        return DescendingSeries{-1, std::vector<Rational>(order)};
    }

    // remainder[t] is the coefficient of x^(d-1-t)
    std::vector<Rational> remainder(d + order);
    for (std::size_t i = 0; i < d && i <= num.degree(); ++i) {
        remainder[d - 1 - i] = num.coefficient(i);
    }

    DescendingSeries out;
    out.start_exponent = -1;
    out.terms.reserve(order);
    const Rational& lead = den.leading();
    for (std::size_t j = 1; j <= order; ++j) {
        // x^(d-j) sits at t = j-1
        Rational c = remainder[j - 1] / lead;
        if (!c.is_zero()) {
            // subtract c x^-j den: den[i] lands on x^(i-j), i.e. t = d-1-i+j
            for (std::size_t i = 0; i <= d; ++i) {
                if (!den[i].is_zero()) {
                    remainder[d - 1 - i + j] -= c * den[i];
                }
            }
        }
        out.terms.push_back(std::move(c));
    }
    return out;
}

/// Expansion of Z'/Z in descending powers: the coefficient of 1/x is the
/// degree, that of 1/x^(k+1) is p_k. Returns p_0..p_kmax.
inline PowerSumSequence log_derivative_power_sums(const Polynomial& p, std::size_t k_max)
{
    if (p.is_zero()) {
        throw math_error("the zero polynomial has no roots");
    }
    if (p.degree() == 0) {
        throw math_error("a constant polynomial has no roots");
    }
    DescendingSeries s = divide_descending(derivative(p), p, k_max + 1);
    return PowerSumSequence{std::move(s.terms)};
}

/// The series n/x + p_1/x^2 + ... carried by a power-sum sequence.
inline DescendingSeries as_log_derivative_series(const PowerSumSequence& sums)
{
    return DescendingSeries{-1, sums.values};
}

/// Product of a truncated descending series with a polynomial, kept only at
/// exponents where every contributing series term is known.
inline DescendingSeries multiply_truncated(const DescendingSeries& s, const Polynomial& p)
{
    if (s.order() == 0) {
        return DescendingSeries{s.start_exponent + static_cast<long>(p.degree()), {}};
    }
    const long top = s.start_exponent + static_cast<long>(p.degree());
    const long bottom = s.lowest_exponent() + static_cast<long>(p.degree());
    DescendingSeries out;
    out.start_exponent = top;
    for (long e = top; e >= bottom; --e) {
        Rational acc(0);
        for (std::size_t i = 0; i <= p.degree(); ++i) {
            // s term at exponent e - i
            const long j = s.start_exponent - (e - static_cast<long>(i));
            if (j >= 0 && static_cast<std::size_t>(j) < s.order()) {
                acc += p[i] * s.terms[static_cast<std::size_t>(j)];
            }
        }
        out.terms.push_back(std::move(acc));
    }
    return out;
}

struct ResidualTerm
{
    long exponent = 0;
    Rational value;
};

struct CrossMultipliedReport
{
    /// series * Z - Z' at each representable exponent, highest first.
    std::vector<ResidualTerm> residuals;

    [[nodiscard]] bool all_zero() const
    {
        for (const auto& r : residuals) {
            if (!r.value.is_zero()) {
                return false;
            }
        }
        return true;
    }

    /// First nonzero residual, or nullptr.
    [[nodiscard]] const ResidualTerm* first_nonzero() const
    {
        for (const auto& r : residuals) {
            if (!r.value.is_zero()) {
                return &r;
            }
        }
        return nullptr;
    }
};

/// Multiplies the given log-derivative series back by p and subtracts p',
/// term by term over the representable exponents.
inline CrossMultipliedReport cross_multiplied_residual(const Polynomial& p, const PowerSumSequence& sums)
{
    if (p.is_zero() || p.degree() == 0) {
        throw math_error("a constant polynomial has no roots");
    }
    const DescendingSeries product = multiply_truncated(as_log_derivative_series(sums), p);
    const Polynomial dp = derivative(p);
    CrossMultipliedReport report;
    const long n = static_cast<long>(p.degree());
    for (std::size_t j = 0; j < product.order(); ++j) {
        const long e = product.exponent_of(j);
        Rational expected(0);
        if (e >= 0 && e < n) {
            expected = dp.coefficient(static_cast<std::size_t>(e));
        }
        report.residuals.push_back({e, product.terms[j] - expected});
    }
    return report;
}

inline CrossMultipliedReport cross_multiplied_check(const Polynomial& p, std::size_t k_max)
{
    return cross_multiplied_residual(p, log_derivative_power_sums(p, k_max));
}

/// "2/x + 3/x^2 + 5/x^3"; zero terms are kept so the order stays visible.
inline std::string to_string(const DescendingSeries& s, char variable = 'x')
{
    std::string out;
    for (std::size_t j = 0; j < s.order(); ++j) {
        const Rational& c = s.terms[j];
        const bool negative = c.sign() < 0;
        if (j == 0) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational magnitude = negative ? -c : c;
        const long e = s.exponent_of(j);
        if (e >= 0) {
            out += magnitude.str();
            if (e >= 1) {
                out += variable;
            }
            if (e >= 2) {
                out += '^' + std::to_string(e);
            }
        } else {
            out += magnitude.str();
            out += '/';
            out += variable;
            if (e <= -2) {
                out += '^' + std::to_string(-e);
            }
        }
    }
    return out;
}

} // namespace newton_sums

#endif // NEWTON_SUMS_SERIES_HPP
