#ifndef NEWTON_SUMS_SCALAR_HPP
#define NEWTON_SUMS_SCALAR_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

namespace newton_sums
{

/// Raised when an operation leaves its mathematical domain: division by
/// zero, the zero polynomial where roots are needed, a zero root that has
/// no reciprocal, too few power sums to invert.
class math_error : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

/// Two routes that must agree did not. Never expected in a correct build.
class internal_error : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational
{
  public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<I> && sizeof(I) <= sizeof(long)) {
            value_ = static_cast<long>(value);
        } else if constexpr (!std::is_signed_v<I> && sizeof(I) <= sizeof(unsigned long)) {
            value_ = static_cast<unsigned long>(value);
        } else {
            value_ = mpq_class(std::to_string(value));
        }
    }

    Rational(const Integer& value) : value_(value) {} // NOLINT(google-explicit-constructor)

    Rational(const Integer& numerator, const Integer& denominator)
    {
        if (denominator == 0) {
            throw math_error("division by zero");
        }
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }

    /// Parses "num" or "num/den" (optional leading '-', decimal digits only).
    /// Intended for already-validated text; the parser module does the
    /// user-facing diagnostics.
    static Rational from_string(std::string_view text)
    {
        const auto slash = text.find('/');
        auto integer = [](std::string_view digits) {
            Integer out;
            if (digits.empty() || out.set_str(std::string(digits), 10) != 0) {
                throw std::invalid_argument("malformed rational: " + std::string(digits));
            }
            return out;
        };
        if (slash == std::string_view::npos) {
            return Rational(integer(text));
        }
        return Rational(integer(text.substr(0, slash)), integer(text.substr(slash + 1)));
    }

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Bit length of |numerator|; 0 for zero.
    [[nodiscard]] std::size_t numerator_bits() const
    {
        if (is_zero()) {
            return 0;
        }
        return mpz_sizeinbase(value_.get_num_mpz_t(), 2);
    }

    /// "num/den", with "/den" omitted when the denominator is 1.
    [[nodiscard]] std::string str() const { return value_.get_str(10); }

    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational operator-() const { return from_raw(-value_); }

    Rational& operator+=(const Rational& rhs)
    {
        value_ += rhs.value_;
        return *this;
    }
    Rational& operator-=(const Rational& rhs)
    {
        value_ -= rhs.value_;
        return *this;
    }
    Rational& operator*=(const Rational& rhs)
    {
        value_ *= rhs.value_;
        return *this;
    }
    Rational& operator/=(const Rational& rhs)
    {
        if (rhs.is_zero()) {
            throw math_error("division by zero");
        }
        value_ /= rhs.value_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
    {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    static Rational from_raw(mpq_class v)
    {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    // GMP's mpq arithmetic keeps operands canonical; only the two-integer
    // constructor needs an explicit canonicalize().
    mpq_class value_;
};

/// base^exponent by repeated squaring, exponent >= 0.
inline Rational pow(const Rational& base, unsigned long exponent)
{
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            b *= b;
        }
    }
    return result;
}

} // namespace newton_sums

#endif // NEWTON_SUMS_SCALAR_HPP
