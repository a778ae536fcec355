#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "linalg.hpp"

namespace veech {

namespace detail {

// Recursive-descent parser for exact expressions over Q(sqrt d):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | atom
//   atom   := integer | 'sqrt' '(' integer ')' | '(' expr ')'
class ExprParser {
public:
    ExprParser(std::string_view text, int d) : s_(text), d_(d) {}

    FieldElem parse() {
        reject_decimals();
        FieldElem v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, "cannot parse \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) +
                                               ": " + what);
    }

    void reject_decimals() const {
        for (std::size_t k = 0; k < s_.size(); ++k) {
            const char c = s_[k];
            const bool exponent = (c == 'e' || c == 'E') && k > 0 && std::isdigit(static_cast<unsigned char>(s_[k - 1]));
            if (c == '.' || exponent)
                throw Error(ErrorCode::RequiresExactRational,
                            "decimal literal \"" + std::string(s_) + "\" is not exact; write a fraction such as 1/2 or 3/4*sqrt(3)");
        }
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FieldElem expr() {
        FieldElem v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    FieldElem term() {
        FieldElem v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                v /= unary();
            } else {
                return v;
            }
        }
    }
    FieldElem unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return atom();
    }
    Integer integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }
    FieldElem atom() {
        skip_ws();
        if (eat('(')) {
            FieldElem v = expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (s_.substr(pos_, 4) == "sqrt") {
            pos_ += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            const Integer n = integer();
            if (!eat(')')) fail("missing ')'");
            return surd(n);
        }
        return FieldElem(Rational(integer()), Rational(0), d_);
    }

    // sqrt(n) = k * sqrt(d) with n = k^2 d, or a perfect square.
    FieldElem surd(const Integer& n) {
        if (sgn(n) < 0) fail("square root of a negative number");
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            return FieldElem(Rational(r), Rational(0), d_);
        }
        if (n % d_ == 0) {
            Integer q = n / d_;
            if (mpz_perfect_square_p(q.get_mpz_t())) {
                Integer r;
                mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
                return FieldElem(Rational(0), Rational(r), d_);
            }
        }
        throw Error(ErrorCode::UnsupportedField,
                    "sqrt(" + n.get_str() + ") does not lie in Q(sqrt " + std::to_string(d_) + ")");
    }

    std::string_view s_;
    int d_;
    std::size_t pos_ = 0;
};

inline std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace detail

/// Exact value of an expression such as "5+3*sqrt(3)", "-1/2", "(1+sqrt(3))/2".
inline FieldElem parse_field(std::string_view text, int d = kDefaultRadicand) {
    return detail::ExprParser(text, d).parse();
}

/// "x,y" with exact coordinates.
inline Vec2 parse_vec2(std::string_view text, int d = kDefaultRadicand) {
    auto parts = detail::split(text, ',');
    if (parts.size() != 2) throw Error(ErrorCode::ParseError, "expected \"x,y\", got \"" + std::string(text) + "\"");
    return Vec2{parse_field(parts[0], d), parse_field(parts[1], d)};
}

/// "a,b,c,d" read row-major.
inline Mat2 parse_mat2(std::string_view text, int d = kDefaultRadicand) {
    auto parts = detail::split(text, ',');
    if (parts.size() != 4) throw Error(ErrorCode::ParseError, "expected four entries \"a,b,c,d\", got \"" + std::string(text) + "\"");
    return Mat2(parse_field(parts[0], d), parse_field(parts[1], d), parse_field(parts[2], d), parse_field(parts[3], d));
}

struct TriangleSpec {
    long p1 = 1, p2 = 4, p3 = 7, n = 12;
};

/// "p1,p2,p3/n" (for example "1,4,7/12").
inline TriangleSpec parse_triangle(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected \"p1,p2,p3/n\", got \"" + std::string(text) + "\"");
    auto parts = detail::split(text.substr(0, slash), ',');
    if (parts.size() != 3) throw Error(ErrorCode::ParseError, "expected three angle numerators in \"" + std::string(text) + "\"");
    auto as_long = [&](const std::string& part) {
        FieldElem v = parse_field(part);
        if (!v.is_rational() || v.a().get_den() != 1) throw Error(ErrorCode::ParseError, "\"" + part + "\" is not an integer");
        return v.a().get_num().get_si();
    };
    return {as_long(parts[0]), as_long(parts[1]), as_long(parts[2]), as_long(std::string(text.substr(slash + 1)))};
}

} // namespace veech
