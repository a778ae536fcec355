#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace veech {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

inline constexpr int kDefaultRadicand = 3;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline int sign(const Rational& r) { return sgn(r); }

inline bool is_square_free(int d) {
    if (d < 2) return false;
    for (int p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

/// Exact square root of a non-negative rational, if it is rational.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (sgn(r) == 0) return Rational(0);
    Integer n = r.get_num(), d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rational out(sn, sd);
    out.canonicalize();
    return out;
}

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// The radicand is carried per value rather than globally. Elements with
/// b = 0 are plain rationals and combine with any radicand; combining two
/// irrational elements over different radicands is a contract violation.
class FieldElem {
public:
    FieldElem() : a_(0), b_(0), d_(kDefaultRadicand) {}
    FieldElem(int v) : a_(v), b_(0), d_(kDefaultRadicand) {}   // NOLINT(implicit)
    FieldElem(long v) : a_(v), b_(0), d_(kDefaultRadicand) {}  // NOLINT(implicit)
    FieldElem(const Rational& a) : a_(a), b_(0), d_(kDefaultRadicand) {}  // NOLINT(implicit)
    FieldElem(Rational a, Rational b, int d = kDefaultRadicand)
        : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (!is_square_free(d_))
            throw std::logic_error("radicand must be a square-free integer >= 2");
        a_.canonicalize();
        b_.canonicalize();
    }

    static FieldElem sqrt_radicand(int d = kDefaultRadicand) { return {0, 1, d}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int radicand() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    /// Sign of the real value under the embedding sqrt(d) > 0, decided exactly.
    int sign() const {
        int sa = sgn(a_), sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 with d*b^2. They are never equal for
        // square-free d unless both vanish.
        Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
        return lhs > rhs ? sa : sb;
    }

    FieldElem conjugate() const { return {a_, -b_, d_}; }
    Rational norm() const { return a_ * a_ - b_ * b_ * d_; }

    FieldElem inverse() const {
        if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        Rational n = norm();
        return {a_ / n, -b_ / n, d_};
    }

    /// Double-precision value. Display and test oracles only; no predicate uses it.
    double approximate() const {
        return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
    }

    FieldElem operator-() const { return {-a_, -b_, d_}; }

    FieldElem& operator+=(const FieldElem& o) {
        d_ = common(o);
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    FieldElem& operator-=(const FieldElem& o) {
        d_ = common(o);
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    FieldElem& operator*=(const FieldElem& o) {
        int d = common(o);
        if (o.is_rational()) {
            a_ *= o.a_;
            b_ *= o.a_;
        } else if (is_rational()) {
            b_ = a_ * o.b_;
            a_ *= o.a_;
        } else {
            Rational na = a_ * o.a_ + b_ * o.b_ * d;
            Rational nb = a_ * o.b_ + b_ * o.a_;
            a_ = std::move(na);
            b_ = std::move(nb);
        }
        d_ = d;
        return *this;
    }
    FieldElem& operator/=(const FieldElem& o) {
        if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero field element");
        if (o.is_rational()) {
            a_ /= o.a_;
            b_ /= o.a_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
    friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
    friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
    friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }

    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        if (x.is_rational() && y.is_rational()) return x.a_ == y.a_;
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    friend std::strong_ordering operator<=>(const FieldElem& x, const FieldElem& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Structural (not numeric) total order, cheap and stable; used for
    /// canonical encodings.
    friend int lex_compare(const FieldElem& x, const FieldElem& y) {
        if (int c = cmp(x.a_, y.a_)) return c < 0 ? -1 : 1;
        if (int c = cmp(x.b_, y.b_)) return c < 0 ? -1 : 1;
        return 0;
    }

    /// Compact exact form: "5+3*sqrt(3)", "-1/2*sqrt(3)", "7/11".
    std::string to_string() const {
        std::ostringstream os;
        bool has_a = sgn(a_) != 0, has_b = sgn(b_) != 0;
        if (!has_a && !has_b) return "0";
        if (has_a) os << a_.get_str();
        if (has_b) {
            Rational mag = abs(b_);
            if (sgn(b_) < 0) os << "-";
            else if (has_a) os << "+";
            if (mag != 1) os << mag.get_str() << "*";
            os << "sqrt(" << d_ << ")";
        }
        return os.str();
    }

    std::size_t hash() const {
        std::hash<std::string> h;
        return h(a_.get_str()) * 1000003u ^ h(b_.get_str());
    }

private:
    int common(const FieldElem& o) const {
        if (o.is_rational()) return d_;
        if (is_rational()) return o.d_;
        if (d_ != o.d_) throw std::logic_error("field elements over different radicands combined");
        return d_;
    }

    Rational a_, b_;
    int d_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

inline FieldElem abs(const FieldElem& x) { return x.sign() < 0 ? -x : x; }
inline int sign(const FieldElem& x) { return x.sign(); }

/// x / y when that quotient is rational.
inline std::optional<Rational> is_rational_ratio(const FieldElem& x, const FieldElem& y) {
    if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "ratio with zero denominator");
    FieldElem q = x / y;
    if (!q.is_rational()) return std::nullopt;
    return q.a();
}

/// Exact square root inside the field, if one exists; returns the
/// non-negative root.
inline std::optional<FieldElem> field_sqrt(const FieldElem& x) {
    int s = x.sign();
    if (s < 0) return std::nullopt;
    if (s == 0) return FieldElem(0);
    const int d = x.radicand();
    if (x.is_rational()) {
        if (auto r = rational_sqrt(x.a())) return FieldElem(*r);
        if (auto r = rational_sqrt(x.a() / d)) return FieldElem(0, *r, d);
        return std::nullopt;
    }
    // (p + q sqrt d)^2 = a + b sqrt d  =>  p^2 + d q^2 = a, 2pq = b.
    auto n = rational_sqrt(x.norm());
    if (!n) return std::nullopt;
    for (int sgn_n : {1, -1}) {
        Rational p2 = (x.a() + sgn_n * *n) / 2;
        auto p = rational_sqrt(p2);
        if (!p || sgn(*p) == 0) continue;
        Rational q = x.b() / (2 * *p);
        FieldElem root(*p, q, d);
        if (root * root == x) return abs(root);
    }
    return std::nullopt;
}

} // namespace veech

template <>
struct std::hash<veech::FieldElem> {
    std::size_t operator()(const veech::FieldElem& x) const { return x.hash(); }
};
