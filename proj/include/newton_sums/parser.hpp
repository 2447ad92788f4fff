#ifndef NEWTON_SUMS_PARSER_HPP
#define NEWTON_SUMS_PARSER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <newton_sums/polynomial.hpp>
#include <newton_sums/scalar.hpp>

namespace newton_sums
{

/// Where and why parsing stopped. offset is a byte offset into the input,
/// at most one past its end.
struct ParseDiagnostic
{
    std::size_t offset = 0;
    std::string message;
    std::vector<std::string> expected;

    [[nodiscard]] std::string str() const
    {
        std::string out = "offset " + std::to_string(offset) + ": " + message;
        if (!expected.empty()) {
            out += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i != 0) {
                    out += i + 1 == expected.size() ? " or " : ", ";
                }
                out += expected[i];
            }
            out += ")";
        }
        return out;
    }
};

class parse_error : public std::runtime_error
{
  public:
    explicit parse_error(ParseDiagnostic diagnostic)
        : std::runtime_error(diagnostic.str()), diagnostic_(std::move(diagnostic))
    {
    }

    [[nodiscard]] const ParseDiagnostic& diagnostic() const { return diagnostic_; }

  private:
    ParseDiagnostic diagnostic_;
};

/// Exponents above this are rejected; polynomials are stored densely.
inline constexpr std::size_t max_parsed_exponent = 100000;

/// Grammar help text, shared with the CLI.
inline constexpr std::string_view polynomial_grammar =
    "  expression  = ['-'] term (('+' | '-') ['-'] term)*   ('--' is rejected)\n"
    "  term        = [coefficient] [variable ['^' exponent]]  (not both absent)\n"
    "  coefficient = integer | integer '/' positive-integer\n"
    "  variable    = one ASCII letter, the same letter throughout\n"
    "  exponent    = nonnegative integer\n"
    "  Whitespace is ignored. \"1/2x\" means (1/2)*x. Like terms are combined;\n"
    "  an expression that cancels to zero is an error.\n";

namespace detail
{

enum class TokenKind
{
    integer,
    slash,
    caret,
    plus,
    minus,
    comma,
    letter,
    end,
};

struct Token
{
    TokenKind kind = TokenKind::end;
    std::size_t offset = 0;
    std::string_view text;
};

inline std::string describe(const Token& t)
{
    switch (t.kind) {
    case TokenKind::integer:
        return "integer '" + std::string(t.text) + "'";
    case TokenKind::letter:
        return "variable '" + std::string(t.text) + "'";
    case TokenKind::end:
        return "end of input";
    default:
        return "'" + std::string(t.text) + "'";
    }
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

inline std::vector<Token> tokenize(std::string_view input)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < input.size()) {
        const char c = input[i];
        if (is_space(c)) {
            ++i;
            continue;
        }
        if (is_digit(c)) {
            std::size_t j = i;
            while (j < input.size() && is_digit(input[j])) {
                ++j;
            }
            tokens.push_back({TokenKind::integer, i, input.substr(i, j - i)});
            i = j;
            continue;
        }
        TokenKind kind{};
        switch (c) {
        case '/':
            kind = TokenKind::slash;
            break;
        case '^':
            kind = TokenKind::caret;
            break;
        case '+':
            kind = TokenKind::plus;
            break;
        case '-':
            kind = TokenKind::minus;
            break;
        case ',':
            kind = TokenKind::comma;
            break;
        default:
            if (!is_letter(c)) {
                throw parse_error({i, "unexpected character", {}});
            }
            kind = TokenKind::letter;
        }
        tokens.push_back({kind, i, input.substr(i, 1)});
        ++i;
    }
    tokens.push_back({TokenKind::end, input.size(), {}});
    return tokens;
}

class TokenCursor
{
  public:
    explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    [[nodiscard]] const Token& peek() const { return tokens_[pos_]; }
    [[nodiscard]] bool at(TokenKind k) const { return peek().kind == k; }
    const Token& advance()
    {
        const Token& t = tokens_[pos_];
        if (t.kind != TokenKind::end) {
            ++pos_;
        }
        return t;
    }

    [[noreturn]] void fail(std::string message, std::vector<std::string> expected) const
    {
        throw parse_error({peek().offset, std::move(message), std::move(expected)});
    }

    [[noreturn]] void unexpected(std::vector<std::string> expected) const
    {
        fail("unexpected " + describe(peek()), std::move(expected));
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

inline Integer to_integer(std::string_view digits)
{
    Integer v;
    v.set_str(std::string(digits), 10);
    return v;
}

/// integer ['/' positive-integer], the leading integer already at the cursor.
inline Rational parse_unsigned_rational(TokenCursor& cur)
{
    const Integer num = to_integer(cur.advance().text);
    if (!cur.at(TokenKind::slash)) {
        return Rational(num);
    }
    cur.advance();
    if (!cur.at(TokenKind::integer)) {
        cur.unexpected({"positive integer denominator"});
    }
    const Integer den = to_integer(cur.peek().text);
    if (den == 0) {
        cur.fail("zero denominator", {"positive integer denominator"});
    }
    cur.advance();
    return Rational(num, den);
}

class PolynomialParser
{
  public:
    explicit PolynomialParser(std::string_view input) : cur_(tokenize(input)) {}

    Polynomial parse()
    {
        bool negative = false;
        if (cur_.at(TokenKind::minus)) {
            cur_.advance();
            negative = true;
            reject_double_minus();
        }
        term(negative);
        while (cur_.at(TokenKind::plus) || cur_.at(TokenKind::minus)) {
            negative = cur_.advance().kind == TokenKind::minus;
            if (cur_.at(TokenKind::minus)) {
                if (negative) {
                    cur_.fail("'--' is not allowed", {"term"});
                }
                cur_.advance();
                negative = true;
                reject_double_minus();
            }
            term(negative);
        }
        if (!cur_.at(TokenKind::end)) {
            cur_.unexpected({"'+'", "'-'", "end of input"});
        }

        std::vector<Rational> dense(terms_.empty() ? 1 : terms_.rbegin()->first + 1);
        for (auto& [power, c] : terms_) {
            dense[power] = std::move(c);
        }
        Polynomial p(std::move(dense));
        if (p.is_zero()) {
            throw parse_error({0, "expression reduces to the zero polynomial", {}});
        }
        return p;
    }

  private:
    void reject_double_minus() const
    {
        if (cur_.at(TokenKind::minus)) {
            cur_.fail("'--' is not allowed", {"term"});
        }
    }

    void term(bool negative)
    {
        Rational coefficient(1);
        bool has_coefficient = false;
        if (cur_.at(TokenKind::integer)) {
            coefficient = parse_unsigned_rational(cur_);
            has_coefficient = true;
        }
        std::size_t power = 0;
        if (cur_.at(TokenKind::letter)) {
            const Token& v = cur_.peek();
            if (!variable_) {
                variable_ = v.text[0];
            } else if (*variable_ != v.text[0]) {
                cur_.fail("inconsistent variable '" + std::string(v.text) + "'",
                          {"variable '" + std::string(1, *variable_) + "'"});
            }
            cur_.advance();
            power = 1;
            if (cur_.at(TokenKind::caret)) {
                cur_.advance();
                if (cur_.at(TokenKind::minus)) {
                    cur_.fail("negative exponents are not allowed", {"nonnegative integer exponent"});
                }
                if (!cur_.at(TokenKind::integer)) {
                    cur_.unexpected({"nonnegative integer exponent"});
                }
                const Integer e = to_integer(cur_.peek().text);
                if (e > static_cast<unsigned long>(max_parsed_exponent)) {
                    cur_.fail("exponent too large (limit " + std::to_string(max_parsed_exponent) + ")", {});
                }
                power = e.get_ui();
                cur_.advance();
            }
        } else if (!has_coefficient) {
            cur_.unexpected({"integer", "variable"});
        }
        if (negative) {
            coefficient = -coefficient;
        }
        terms_[power] += coefficient;
    }

    TokenCursor cur_;
    std::optional<char> variable_;
    std::map<std::size_t, Rational> terms_;
};

} // namespace detail

/// Parses a univariate polynomial such as "x^5 - x^4 + 2/3x^2 - 5".
/// Throws parse_error carrying a ParseDiagnostic.
inline Polynomial parse_polynomial(std::string_view input) { return detail::PolynomialParser(input).parse(); }

/// Parses a comma-separated list of rationals, e.g. "1, -2, 1/3".
/// Throws parse_error carrying a ParseDiagnostic.
inline std::vector<Rational> parse_rational_list(std::string_view input)
{
    using detail::TokenKind;
    detail::TokenCursor cur(detail::tokenize(input));
    if (cur.at(TokenKind::end)) {
        cur.fail("empty list", {"rational"});
    }
    std::vector<Rational> out;
    while (true) {
        if (cur.at(TokenKind::comma) || cur.at(TokenKind::end)) {
            cur.fail("empty entry", {"rational"});
        }
        bool negative = false;
        if (cur.at(TokenKind::minus)) {
            cur.advance();
            negative = true;
        }
        if (!cur.at(TokenKind::integer)) {
            cur.unexpected({"integer"});
        }
        Rational v = detail::parse_unsigned_rational(cur);
        out.push_back(negative ? -v : v);
        if (cur.at(TokenKind::end)) {
            break;
        }
        if (!cur.at(TokenKind::comma)) {
            cur.unexpected({"','", "end of input"});
        }
        cur.advance();
    }
    return out;
}

} // namespace newton_sums

#endif // NEWTON_SUMS_PARSER_HPP
