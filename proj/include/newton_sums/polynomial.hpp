#ifndef NEWTON_SUMS_POLYNOMIAL_HPP
#define NEWTON_SUMS_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <newton_sums/scalar.hpp>

namespace newton_sums
{

/// Dense univariate polynomial, coefficients in ascending powers.
///
/// Trailing zeros are stripped on construction so the last coefficient is
/// the leading one. The zero polynomial is the single coefficient 0; it can
/// be represented but every root-related operation rejects it.
class Polynomial
{
  public:
    Polynomial() : coefficients_{Rational(0)} {}

    explicit Polynomial(std::vector<Rational> ascending) : coefficients_(std::move(ascending)) { normalize(); }

    Polynomial(std::initializer_list<Rational> ascending) : coefficients_(ascending) { normalize(); }

    [[nodiscard]] std::size_t degree() const { return coefficients_.size() - 1; }
    [[nodiscard]] bool is_zero() const { return coefficients_.size() == 1 && coefficients_[0].is_zero(); }
    [[nodiscard]] bool is_monic() const { return leading() == Rational(1); }

    [[nodiscard]] const Rational& leading() const { return coefficients_.back(); }
    [[nodiscard]] const Rational& operator[](std::size_t power) const { return coefficients_[power]; }
    [[nodiscard]] std::span<const Rational> coefficients() const { return coefficients_; }

    /// Coefficient of x^power, zero above the degree.
    [[nodiscard]] Rational coefficient(std::size_t power) const
    {
        return power < coefficients_.size() ? coefficients_[power] : Rational(0);
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    void normalize()
    {
        while (coefficients_.size() > 1 && coefficients_.back().is_zero()) {
            coefficients_.pop_back();
        }
        if (coefficients_.empty()) {
            coefficients_.emplace_back(0);
        }
    }

    std::vector<Rational> coefficients_;
};

/// Alternating-sign view of a monic polynomial,
///   x^n - A x^(n-1) + B x^(n-2) - C x^(n-3) + ... +/- N,
/// held as values = [A, B, C, ..., N]. values[k-1] is the elementary
/// symmetric function e_k of the roots.
struct SignedCoefficients
{
    std::vector<Rational> values;

    [[nodiscard]] std::size_t degree() const { return values.size(); }

    /// The k-th signed coefficient, 1-based: at(1) = A.
    [[nodiscard]] const Rational& at(std::size_t k) const { return values.at(k - 1); }

    friend bool operator==(const SignedCoefficients&, const SignedCoefficients&) = default;
};

/// Roots of a polynomial; repeats allowed, order irrelevant.
struct RootMultiset
{
    std::vector<Rational> roots;

    [[nodiscard]] std::size_t size() const { return roots.size(); }
};

namespace detail
{
inline void require_nonzero(const Polynomial& p)
{
    if (p.is_zero()) {
        throw math_error("the zero polynomial has no roots");
    }
}

inline Rational alternating_sign(std::size_t k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }
} // namespace detail

/// Normalizes p to monic and returns its signed coefficients.
inline SignedCoefficients to_signed(const Polynomial& p)
{
    detail::require_nonzero(p);
    const std::size_t n = p.degree();
    const Rational& lead = p.leading();
    SignedCoefficients s;
    s.values.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        s.values.push_back(detail::alternating_sign(k) * p[n - k] / lead);
    }
    return s;
}

inline Polynomial from_signed(const SignedCoefficients& s)
{
    const std::size_t n = s.degree();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    for (std::size_t k = 1; k <= n; ++k) {
        c[n - k] = detail::alternating_sign(k) * s.values[k - 1];
    }
    return Polynomial(std::move(c));
}

/// (x - r_1)(x - r_2)...(x - r_n).
inline Polynomial poly_from_roots(const RootMultiset& r)
{
    if (r.roots.empty()) {
        throw std::invalid_argument("root multiset must be nonempty");
    }
    std::vector<Rational> c{Rational(1)};
    for (const Rational& root : r.roots) {
        // multiply by (x - root) in place
        c.push_back(Rational(0));
        for (std::size_t i = c.size() - 1; i > 0; --i) {
            c[i] = c[i - 1] - root * c[i];
        }
        c[0] = -root * c[0];
    }
    return Polynomial(std::move(c));
}

/// e_k of the multiset, by the product-expansion recurrence
/// e_k(r_1..r_m) = e_k(r_1..r_{m-1}) + r_m e_{k-1}(r_1..r_{m-1}).
inline Rational elementary_symmetric(const RootMultiset& r, std::size_t k)
{
    if (k > r.size()) {
        throw std::out_of_range("elementary_symmetric: k exceeds the number of roots");
    }
    std::vector<Rational> e(k + 1);
    e[0] = Rational(1);
    for (const Rational& root : r.roots) {
        for (std::size_t j = k; j >= 1; --j) {
            e[j] += root * e[j - 1];
        }
    }
    return e[k];
}

inline Polynomial derivative(const Polynomial& p)
{
    if (p.degree() == 0) {
        return Polynomial();
    }
    std::vector<Rational> c;
    c.reserve(p.degree());
    for (std::size_t i = 1; i <= p.degree(); ++i) {
        c.push_back(Rational(i) * p[i]);
    }
    return Polynomial(std::move(c));
}

/// Horner evaluation.
inline Rational evaluate(const Polynomial& p, const Rational& x0)
{
    const auto c = p.coefficients();
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x0 + *it;
    }
    return acc;
}

/// Degree-k companion equation x^k - A x^(k-1) + B x^(k-2) - ... built from
/// the first k signed coefficients.
inline SignedCoefficients truncate(const SignedCoefficients& s, std::size_t k)
{
    if (k > s.degree()) {
        throw std::out_of_range("truncate: degree " + std::to_string(k) + " exceeds " +
                                std::to_string(s.degree()));
    }
    return SignedCoefficients{std::vector<Rational>(s.values.begin(), s.values.begin() + static_cast<std::ptrdiff_t>(k))};
}

/// Monic polynomial whose roots are the reciprocals of the roots of p:
/// reverse the coefficient list, then divide by the new leading term.
inline Polynomial reciprocal_poly(const Polynomial& p)
{
    detail::require_nonzero(p);
    if (p[0].is_zero()) {
        throw math_error("zero constant term: a zero root has no reciprocal");
    }
    const auto c = p.coefficients();
    std::vector<Rational> reversed(c.rbegin(), c.rend());
    const Rational lead = reversed.back();
    for (Rational& v : reversed) {
        v /= lead;
    }
    return Polynomial(std::move(reversed));
}

inline Polynomial monic(const Polynomial& p) { return from_signed(to_signed(p)); }

/// Canonical text: descending powers with explicit signs, e.g.
/// "x^5 - x^4 + 2/3x^2 - 5". The zero polynomial renders as "0".
inline std::string to_string(const Polynomial& p, char variable = 'x')
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = p.degree() + 1; i-- > 0;) {
        const Rational& c = p[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational magnitude = negative ? -c : c;
        if (i == 0 || magnitude != Rational(1)) {
            out += magnitude.str();
        }
        if (i >= 1) {
            out += variable;
        }
        if (i >= 2) {
            out += '^';
            out += std::to_string(i);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

inline std::ostream& operator<<(std::ostream& os, const SignedCoefficients& s)
{
    os << "[";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        os << (i == 0 ? "" : ", ") << s.values[i];
    }
    return os << "]";
}

} // namespace newton_sums

#endif // NEWTON_SUMS_POLYNOMIAL_HPP
