#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "linalg.hpp"

namespace veech {

/// An angle (or an area) stored exactly as k * pi with rational k.
struct AngleMultiple {
    Rational k{0};

    AngleMultiple() = default;
    explicit AngleMultiple(Rational k_) : k(std::move(k_)) { k.canonicalize(); }
    static AngleMultiple pi_times(long num, long den = 1) { return AngleMultiple(make_rational(num, den)); }

    AngleMultiple& operator+=(const AngleMultiple& o) { k += o.k; return *this; }
    AngleMultiple& operator-=(const AngleMultiple& o) { k -= o.k; return *this; }
    friend AngleMultiple operator+(AngleMultiple x, const AngleMultiple& y) { return x += y; }
    friend AngleMultiple operator-(AngleMultiple x, const AngleMultiple& y) { return x -= y; }
    friend AngleMultiple operator*(const Rational& s, const AngleMultiple& x) { return AngleMultiple(s * x.k); }
    friend bool operator==(const AngleMultiple& x, const AngleMultiple& y) { return x.k == y.k; }
    friend std::strong_ordering operator<=>(const AngleMultiple& x, const AngleMultiple& y) {
        int c = cmp(x.k, y.k);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    double approximate() const { return k.get_d() * 3.14159265358979323846; }

    /// "7/3*pi", "pi", "0".
    std::string to_string() const {
        if (sgn(k) == 0) return "0";
        if (k == 1) return "pi";
        if (k == -1) return "-pi";
        return k.get_str() + "*pi";
    }
};

namespace detail {

// Positive multiples of the unit vector at angle j*pi/12, j = 0..11, over Q(sqrt 3).
inline const std::array<Vec2, 12>& twelfth_directions() {
    static const std::array<Vec2, 12> table = [] {
        const FieldElem r3 = FieldElem::sqrt_radicand(3);
        const FieldElem two(2);
        return std::array<Vec2, 12>{
            Vec2{1, 0},
            Vec2{1, two - r3},
            Vec2{1, r3 / 3},
            Vec2{1, 1},
            Vec2{1, r3},
            Vec2{1, two + r3},
            Vec2{0, 1},
            Vec2{-1, two + r3},
            Vec2{-1, r3},
            Vec2{-1, 1},
            Vec2{-1, r3 / 3},
            Vec2{-1, two - r3},
        };
    }();
    return table;
}

} // namespace detail

/// Smallest angular step representable exactly over Q(sqrt d): pi/12 for
/// d = 3, pi/4 otherwise (rational tangents only).
inline int angle_steps_per_pi(int d) { return d == 3 ? 12 : 4; }

/// Vector at angle (num/den)*pi as a positive multiple of its unit vector,
/// with coordinates in Q(sqrt d); empty when the angle is not representable.
inline std::optional<Vec2> direction_at(const AngleMultiple& angle, int d = kDefaultRadicand) {
    Rational k = angle.k;
    const int steps = angle_steps_per_pi(d);
    Rational scaled = k * 12;
    scaled.canonicalize();
    if (scaled.get_den() != 1) return std::nullopt;
    long j = scaled.get_num().get_si();
    if ((j % (12 / steps)) != 0) return std::nullopt;
    j %= 24;
    if (j < 0) j += 24;
    Vec2 v = detail::twelfth_directions()[static_cast<std::size_t>(j % 12)];
    return j >= 12 ? -v : v;
}

/// Counterclockwise angle from `from` to `to`, in [0, 2pi), when it is an
/// exact multiple of pi/12 (d = 3) or pi/4 (other radicands).
inline std::optional<AngleMultiple> angle_between(const Vec2& from, const Vec2& to) {
    if (from.is_zero() || to.is_zero()) throw Error(ErrorCode::ZeroDirection, "angle of a zero vector");
    int d = radicand_of(from);
    if (d == kDefaultRadicand) d = radicand_of(to);
    const int steps = angle_steps_per_pi(d);
    const int stride = 12 / steps;
    for (int j = 0; j < 24; j += stride) {
        Vec2 dir = detail::twelfth_directions()[static_cast<std::size_t>(j % 12)];
        if (j >= 12) dir = -dir;
        // Scaled rotation by angle j*pi/12 applied to `from`.
        Vec2 rotated{dir.x * from.x - dir.y * from.y, dir.y * from.x + dir.x * from.y};
        if (cross(rotated, to).is_zero() && dot(rotated, to).sign() > 0)
            return AngleMultiple(make_rational(j, 12));
    }
    return std::nullopt;
}

} // namespace veech
