#pragma once

#include <array>
#include <ostream>
#include <string>

#include "field.hpp"

namespace veech {

struct Vec2 {
    FieldElem x, y;

    Vec2() = default;
    Vec2(FieldElem x_, FieldElem y_) : x(std::move(x_)), y(std::move(y_)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero(); }

    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    friend Vec2 operator+(Vec2 u, const Vec2& v) { return u += v; }
    friend Vec2 operator-(Vec2 u, const Vec2& v) { return u -= v; }
    friend Vec2 operator*(const FieldElem& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;

    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

inline std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << v.to_string(); }

/// Radicand of the first irrational coordinate (or of x when both are rational).
inline int radicand_of(const Vec2& v) {
    if (!v.x.is_rational()) return v.x.radicand();
    if (!v.y.is_rational()) return v.y.radicand();
    return v.x.radicand();
}

inline FieldElem cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline FieldElem dot(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }
inline FieldElem norm_sq(const Vec2& v) { return dot(v, v); }

/// Sign of the turn a -> b -> c: +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orient(const Vec2& a, const Vec2& b, const Vec2& c) { return cross(b - a, c - a).sign(); }

/// 2x2 matrix [[a, b], [c, d]] over the field.
struct Mat2 {
    FieldElem a{1}, b{0}, c{0}, d{1};

    Mat2() = default;
    Mat2(FieldElem a_, FieldElem b_, FieldElem c_, FieldElem d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Mat2 identity() { return {}; }
    static Mat2 minus_identity() { return {-1, 0, 0, -1}; }

    FieldElem det() const { return a * d - b * c; }
    FieldElem trace() const { return a + d; }

    Mat2 inverse() const {
        FieldElem det_ = det();
        if (det_.is_zero()) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
        FieldElem inv = det_.inverse();
        return {d * inv, -b * inv, -c * inv, a * inv};
    }

    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend Vec2 operator*(const Mat2& m, const Vec2& v) {
        return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
    }
    friend Mat2 operator*(const FieldElem& s, const Mat2& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }
    friend Mat2 operator+(const Mat2& m, const Mat2& n) {
        return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;

    std::string to_string() const {
        return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " +
               d.to_string() + "]]";
    }
};

inline std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.to_string(); }

inline Mat2 mat_mul(const Mat2& m, const Mat2& n) { return m * n; }
inline FieldElem mat_trace(const Mat2& m) { return m.trace(); }
inline FieldElem mat_det(const Mat2& m) { return m.det(); }
inline Mat2 mat_inv(const Mat2& m) { return m.inverse(); }

inline bool is_unimodular(const Mat2& m) {
    FieldElem det = m.det();
    return det == FieldElem(1) || det == FieldElem(-1);
}

/// Orthogonal reflection across the line spanned by `axis`.
inline Mat2 reflection_across(const Vec2& axis) {
    FieldElem n = norm_sq(axis);
    if (n.is_zero()) throw Error(ErrorCode::ZeroDirection, "reflection axis is zero");
    FieldElem inv = n.inverse();
    FieldElem xx = axis.x * axis.x, yy = axis.y * axis.y, xy = axis.x * axis.y;
    return {(xx - yy) * inv, 2 * xy * inv, 2 * xy * inv, (yy - xx) * inv};
}

/// Rotation taking u to v; requires |u| = |v|.
inline Mat2 rotation_taking(const Vec2& u, const Vec2& v) {
    FieldElem inv = norm_sq(u).inverse();
    FieldElem c = dot(u, v) * inv, s = cross(u, v) * inv;
    return {c, -s, s, c};
}

} // namespace veech
