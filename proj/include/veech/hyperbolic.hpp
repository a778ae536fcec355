#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "veech_group.hpp"

namespace veech {

/// Point of the real line or infinity.
struct BoundaryPoint {
    std::optional<FieldElem> x;  // empty means infinity

    static BoundaryPoint infinity() { return {}; }
    static BoundaryPoint at(FieldElem v) { return {std::move(v)}; }
    bool is_infinity() const { return !x.has_value(); }

    friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
    std::string to_string() const { return x ? x->to_string() : "inf"; }
};

/// Point re + i*im of the upper half-plane.
struct UHPoint {
    FieldElem re, im;

    UHPoint(FieldElem r, FieldElem i) : re(std::move(r)), im(std::move(i)) {
        if (im.sign() <= 0) throw std::invalid_argument("upper half-plane point needs positive imaginary part");
    }
    friend bool operator==(const UHPoint&, const UHPoint&) = default;
    std::string to_string() const { return re.to_string() + " + (" + im.to_string() + ")i"; }
};

using HypPoint = std::variant<UHPoint, BoundaryPoint>;

inline std::string to_string(const HypPoint& p) {
    return std::visit([](const auto& q) { return q.to_string(); }, p);
}

/// Action of a matrix of determinant +-1: z -> (az+b)/(cz+d), with z
/// replaced by its conjugate when the determinant is -1.
inline UHPoint moebius_apply(const Mat2& g, const UHPoint& z) {
    const int det = g.det().sign();
    if (det == 0) throw Error(ErrorCode::SingularMatrix, "Moebius action of a singular matrix");
    const FieldElem y = det > 0 ? z.im : -z.im;
    // (a w + b)/(c w + d) with w = x + i y, multiplied through by conj(c w + d).
    const FieldElem nr = g.a * z.re + g.b, ni = g.a * y;
    const FieldElem dr = g.c * z.re + g.d, di = g.c * y;
    const FieldElem den = dr * dr + di * di;
    return UHPoint((nr * dr + ni * di) / den, (ni * dr - nr * di) / den);
}

inline BoundaryPoint moebius_apply(const Mat2& g, const BoundaryPoint& p) {
    if (p.is_infinity()) {
        if (g.c.is_zero()) return BoundaryPoint::infinity();
        return BoundaryPoint::at(g.a / g.c);
    }
    const FieldElem den = g.c * *p.x + g.d;
    if (den.is_zero()) return BoundaryPoint::infinity();
    return BoundaryPoint::at((g.a * *p.x + g.b) / den);
}

inline HypPoint moebius_apply(const Mat2& g, const HypPoint& p) {
    return std::visit([&](const auto& q) -> HypPoint { return moebius_apply(g, q); }, p);
}

inline HypPoint moebius_apply(const GroupElement& g, const HypPoint& p) { return moebius_apply(g.m, p); }

/// Vertical line Re z = x0, or the semicircle |z - center|^2 = radius_sq.
struct Geodesic {
    bool vertical = true;
    FieldElem x0;         // vertical: the real part; semicircle: the center
    FieldElem radius_sq;  // semicircle only

    static Geodesic line(FieldElem x) { return {true, std::move(x), FieldElem(0)}; }
    static Geodesic circle(FieldElem center, FieldElem r2) {
        if (r2.sign() <= 0) throw std::invalid_argument("semicircle radius must be positive");
        return {false, std::move(center), std::move(r2)};
    }
    /// The geodesic with endpoints p and q on the boundary.
    static Geodesic through(const BoundaryPoint& p, const BoundaryPoint& q) {
        if (p == q) throw std::invalid_argument("geodesic endpoints coincide");
        if (p.is_infinity()) return line(*q.x);
        if (q.is_infinity()) return line(*p.x);
        const FieldElem c = (*p.x + *q.x) / 2, r = (*q.x - *p.x) / 2;
        return circle(c, r * r);
    }

    /// Exact endpoints p < q when the radius lies in the field.
    std::optional<std::pair<FieldElem, FieldElem>> endpoints() const {
        if (vertical) return std::nullopt;
        auto r = field_sqrt(radius_sq);
        if (!r) return std::nullopt;
        return std::pair{x0 - *r, x0 + *r};
    }

    bool contains(const UHPoint& z) const {
        if (vertical) return z.re == x0;
        const FieldElem dx = z.re - x0;
        return dx * dx + z.im * z.im == radius_sq;
    }
    bool contains(const BoundaryPoint& p) const {
        if (p.is_infinity()) return vertical;
        if (vertical) return *p.x == x0;
        const FieldElem dx = *p.x - x0;
        return dx * dx == radius_sq;
    }
    bool contains(const HypPoint& p) const {
        return std::visit([&](const auto& q) { return contains(q); }, p);
    }

    friend bool operator==(const Geodesic& g, const Geodesic& h) {
        if (g.vertical != h.vertical) return false;
        return g.x0 == h.x0 && (g.vertical || g.radius_sq == h.radius_sq);
    }

    std::string to_string() const {
        if (vertical) return "Re z = " + x0.to_string();
        return "|z - (" + x0.to_string() + ")|^2 = " + radius_sq.to_string();
    }
};

/// Fixed-point set of an orientation-reversing involution [[a, b], [c, -a]]:
/// c|z|^2 - 2a Re z - b = 0.
inline Geodesic fixed_geodesic(const Mat2& r) {
    if (r.det() != FieldElem(-1) || !r.trace().is_zero())
        throw Error(ErrorCode::NotAnInvolution, r.to_string() + " is not a reflection of the half-plane");
    if (r.c.is_zero()) return Geodesic::line(-r.b / (2 * r.a));
    return Geodesic::circle(r.a / r.c, (r.a * r.a + r.b * r.c) / (r.c * r.c));
}

inline Geodesic fixed_geodesic(const GroupElement& r) { return fixed_geodesic(r.m); }

/// Fixed boundary point of a parabolic element.
inline BoundaryPoint parabolic_fixed_point(const Mat2& p) {
    if (p.det() != FieldElem(1) || (p.trace() != FieldElem(2) && p.trace() != FieldElem(-2)))
        throw std::invalid_argument("not a parabolic matrix: " + p.to_string());
    if (p.c.is_zero()) return BoundaryPoint::infinity();
    return BoundaryPoint::at((p.a - p.d) / (2 * p.c));
}

/// Intersection point of two geodesics inside the half-plane, when it exists
/// and has field coordinates.
inline std::optional<UHPoint> intersect(const Geodesic& g, const Geodesic& h) {
    if (g.vertical && h.vertical) return std::nullopt;
    if (h.vertical) return intersect(h, g);
    FieldElem x;
    if (g.vertical) {
        x = g.x0;
    } else {
        if (g.x0 == h.x0) return std::nullopt;
        x = (g.radius_sq - h.radius_sq - g.x0 * g.x0 + h.x0 * h.x0) / (2 * (h.x0 - g.x0));
    }
    const FieldElem dx = x - h.x0;
    const FieldElem y2 = h.radius_sq - dx * dx;
    if (y2.sign() <= 0) return std::nullopt;
    auto y = field_sqrt(y2);
    if (!y) return std::nullopt;
    return UHPoint(x, *y);
}

namespace detail {

// Tangent of g at z pointing towards `toward` along g.
inline Vec2 tangent_toward(const Geodesic& g, const UHPoint& z, const HypPoint& toward) {
    if (g.vertical) {
        bool up = true;
        if (const auto* w = std::get_if<UHPoint>(&toward)) up = w->im > z.im;
        else if (const auto* b = std::get_if<BoundaryPoint>(&toward)) up = b->is_infinity();
        return Vec2{0, up ? 1 : -1};
    }
    // (-y, x - c) moves towards smaller real part.
    Vec2 t{-z.im, z.re - g.x0};
    const FieldElem wx = std::visit(
        [](const auto& q) -> FieldElem {
            if constexpr (std::is_same_v<std::decay_t<decltype(q)>, UHPoint>) return q.re;
            else return *q.x;
        },
        toward);
    return wx > z.re ? -t : t;
}

inline AngleMultiple recognized_angle(const Vec2& u, const Vec2& v) {
    auto a = angle_between(u, v);
    if (!a) throw Error(ErrorCode::UnsupportedAngle, "angle between " + u.to_string() + " and " + v.to_string() +
                                                         " is not a recognized multiple of pi");
    return *a;
}

} // namespace detail

/// Angle in [0, pi/2] between two geodesics through `at`.
inline AngleMultiple interior_angle(const Geodesic& g1, const Geodesic& g2, const UHPoint& at) {
    if (!g1.contains(at) || !g2.contains(at)) throw std::invalid_argument("geodesic does not pass through the point");
    auto tangent = [&](const Geodesic& g) { return g.vertical ? Vec2{0, 1} : Vec2{-at.im, at.re - g.x0}; };
    AngleMultiple a = detail::recognized_angle(tangent(g1), tangent(g2));
    const AngleMultiple pi = AngleMultiple::pi_times(1);
    if (a >= pi) a = a - pi;
    const AngleMultiple other = pi - a;
    return other < a ? other : a;
}

/// Hyperbolic polygon; side k is the geodesic from vertex k to vertex k+1.
struct HypPolygon {
    std::vector<HypPoint> vertices;
    std::vector<Geodesic> sides;

    HypPolygon(std::vector<HypPoint> v, std::vector<Geodesic> s) : vertices(std::move(v)), sides(std::move(s)) {
        const std::size_t n = vertices.size();
        if (n < 3 || sides.size() != n) throw std::invalid_argument("polygon needs n >= 3 vertices and n sides");
        for (std::size_t k = 0; k < n; ++k)
            if (!sides[k].contains(vertices[k]) || !sides[k].contains(vertices[(k + 1) % n]))
                throw std::invalid_argument("side " + std::to_string(k) + " does not join its vertices");
    }

    /// Interior angle at vertex k: zero at ideal vertices.
    AngleMultiple angle(std::size_t k) const {
        const std::size_t n = vertices.size();
        const auto* z = std::get_if<UHPoint>(&vertices[k]);
        if (!z) return AngleMultiple{};
        const Vec2 back = detail::tangent_toward(sides[(k + n - 1) % n], *z, vertices[(k + n - 1) % n]);
        const Vec2 fwd = detail::tangent_toward(sides[k], *z, vertices[(k + 1) % n]);
        const AngleMultiple a = detail::recognized_angle(fwd, back);
        const AngleMultiple two_pi = AngleMultiple::pi_times(2);
        const AngleMultiple other = two_pi - a;
        return other < a ? other : a;
    }
};

inline AngleMultiple polygon_area(const HypPolygon& p) {
    AngleMultiple total = AngleMultiple::pi_times(static_cast<long>(p.vertices.size()) - 2);
    for (std::size_t k = 0; k < p.vertices.size(); ++k) total -= p.angle(k);
    return total;
}

struct OrbifoldData {
    long genus = 0;
    long punctures = 0;
    std::vector<AngleMultiple> cone_angles;
};

/// 2*pi*(2g + p - 2) + sum of (2*pi - theta_i).
inline AngleMultiple gauss_bonnet_area(const OrbifoldData& o) {
    if (o.genus < 0 || o.punctures < 0) throw std::invalid_argument("genus and punctures must be non-negative");
    const AngleMultiple two_pi = AngleMultiple::pi_times(2);
    AngleMultiple area = AngleMultiple::pi_times(2 * (2 * o.genus + o.punctures - 2));
    for (const auto& theta : o.cone_angles) {
        if (theta.k <= 0 || theta >= two_pi) throw std::invalid_argument("cone angle must lie in (0, 2pi)");
        area += two_pi - theta;
    }
    if (area.k <= 0) throw Error(ErrorCode::NonHyperbolic, "orbifold area " + area.to_string() + " is not positive");
    return area;
}

/// Vertices of the fundamental pentagon, derived from the generators: ideal
/// vertices are parabolic fixed points, finite ones are where consecutive
/// fixed geodesics cross.
struct DomainVertices {
    HypPoint A = BoundaryPoint::infinity(), B = BoundaryPoint::infinity(), C = BoundaryPoint::infinity(),
             D = BoundaryPoint::infinity(), E = BoundaryPoint::infinity();

    std::vector<std::pair<std::string, HypPoint>> named() const {
        return {{"A", A}, {"B", B}, {"C", C}, {"D", D}, {"E", E}};
    }
};

inline DomainVertices domain_vertices(const GeneratorSet& gen) {
    auto cross_point = [](const GroupElement& r1, const GroupElement& r2, const char* name) -> HypPoint {
        auto z = intersect(fixed_geodesic(r1), fixed_geodesic(r2));
        if (!z) throw Error(ErrorCode::UnsupportedField, std::string("vertex ") + name + " has no exact field coordinates");
        return *z;
    };
    DomainVertices v;
    v.A = cross_point(gen.R_AB, gen.R_AE, "A");
    v.B = parabolic_fixed_point(gen.P_B.m);
    v.C = cross_point(gen.R_BC, gen.R_CD, "C");
    v.D = parabolic_fixed_point(gen.P_D.m);
    v.E = parabolic_fixed_point(gen.P_E.m);
    return v;
}

/// Each side's fixed geodesic passes through its two named vertices and
/// through none of the other three.
inline bool incidence_check(const GeneratorSet& gen, const DomainVertices& v) {
    const std::vector<std::pair<const GroupElement*, std::pair<int, int>>> sides{
        {&gen.R_AB, {0, 1}}, {&gen.R_BC, {1, 2}}, {&gen.R_CD, {2, 3}}, {&gen.R_DE, {3, 4}}, {&gen.R_AE, {4, 0}}};
    const auto named = v.named();
    for (const auto& [r, ends] : sides) {
        const Geodesic g = fixed_geodesic(*r);
        for (int k = 0; k < 5; ++k) {
            const bool expected = k == ends.first || k == ends.second;
            if (g.contains(named[static_cast<std::size_t>(k)].second) != expected) return false;
        }
    }
    return true;
}

inline HypPolygon domain_polygon(const GeneratorSet& gen, const DomainVertices& v) {
    return HypPolygon({v.A, v.B, v.C, v.D, v.E},
                      {fixed_geodesic(gen.R_AB), fixed_geodesic(gen.R_BC), fixed_geodesic(gen.R_CD),
                       fixed_geodesic(gen.R_DE), fixed_geodesic(gen.R_AE)});
}

/// One step of the lattice certificate.
struct CertificateStep {
    std::string name;
    std::string anchor;
    std::vector<std::pair<std::string, std::string>> values;
    bool passed = false;
    std::string detail;
};

struct CertificateReport {
    std::vector<CertificateStep> steps;
    bool confirmed = false;
    std::string failing_step;

    std::string verdict() const { return confirmed ? "LATTICE_CONFIRMED" : "INCONCLUSIVE"; }
};

/// Index argument showing that the group generated by the reflections is the
/// whole Veech group, so the surface has the lattice property. `frame` maps
/// the reference surface (with its reflection axes at angles 0 and the
/// smallest positive symmetry angle) to `s`.
inline CertificateReport lattice_certificate(const TranslationSurface& s, const Mat2& frame = Mat2::identity(),
                                             long budget = kDefaultBudget) {
    CertificateReport rep;
    auto fail = [&](CertificateStep step, const std::string& why) {
        step.passed = false;
        step.detail = why;
        rep.failing_step = step.name;
        rep.steps.push_back(std::move(step));
        return rep;
    };

    CertificateStep gen_step{"generators", "reflections and parabolics of the Veech group", {}, false, {}};
    GeneratorSet gen;
    try {
        gen = build_generators(s, frame, budget);
    } catch (const std::exception& e) {
        return fail(gen_step, e.what());
    }
    for (const auto& [name, g] : gen.all()) gen_step.values.emplace_back(name, g->m.to_string());
    gen_step.passed = true;
    rep.steps.push_back(gen_step);

    CertificateStep inc{"incidence", "fundamental pentagon ABCDE", {}, false, {}};
    DomainVertices verts;
    try {
        verts = domain_vertices(gen);
        for (const auto& [name, p] : verts.named()) inc.values.emplace_back(name, to_string(p));
        if (!incidence_check(gen, verts)) return fail(inc, "a fixed geodesic misses one of its vertices");
    } catch (const std::exception& e) {
        return fail(inc, e.what());
    }
    inc.passed = true;
    rep.steps.push_back(inc);

    CertificateStep area{"area", "area(Y_G)", {}, false, {}};
    AngleMultiple area_g;
    std::vector<AngleMultiple> cone_angles;
    try {
        const HypPolygon poly = domain_polygon(gen, verts);
        for (std::size_t k = 0; k < 5; ++k) {
            const AngleMultiple a = poly.angle(k);
            area.values.emplace_back("angle_" + verts.named()[k].first, a.to_string());
            if (a.k > 0) cone_angles.push_back(AngleMultiple(2 * a.k));
        }
        long ideal = 0;
        for (const auto& [name, p] : verts.named()) ideal += std::holds_alternative<BoundaryPoint>(p) ? 1 : 0;
        const AngleMultiple half = polygon_area(poly);
        area_g = gauss_bonnet_area({0, ideal, cone_angles});
        area.values.emplace_back("polygon_area", half.to_string());
        area.values.emplace_back("area(Y_G)", area_g.to_string());
        if (AngleMultiple(2 * half.k) != area_g) return fail(area, "twice the polygon area differs from Gauss-Bonnet");
    } catch (const std::exception& e) {
        return fail(area, e.what());
    }
    area.passed = true;
    rep.steps.push_back(area);

    CertificateStep cusps{"cusps", "three inequivalent cusps", {}, false, {}};
    long cusp_count = 0;
    try {
        const std::vector<std::pair<std::string, Direction>> dirs{{"B", gen.dir_B}, {"E", gen.dir_E}, {"D", gen.dir_D}};
        std::vector<CuspInvariant> inv;
        for (const auto& [name, d] : dirs) {
            inv.push_back(cusp_invariants(s, d, budget));
            std::string widths;
            for (const auto& w : inv.back().width_ratios) widths += (widths.empty() ? "" : ", ") + w.to_string();
            cusps.values.emplace_back("modulus_ratio_" + name, inv.back().modulus_ratio.get_str());
            cusps.values.emplace_back("width_ratios_" + name, "[" + widths + "]");
        }
        for (std::size_t i = 0; i < inv.size(); ++i)
            for (std::size_t j = i + 1; j < inv.size(); ++j)
                if (inv[i] == inv[j]) return fail(cusps, "cusps " + dirs[i].first + " and " + dirs[j].first + " agree");
        cusp_count = static_cast<long>(inv.size());
    } catch (const std::exception& e) {
        return fail(cusps, e.what());
    }
    cusps.passed = true;
    rep.steps.push_back(cusps);

    CertificateStep bound{"cone_bound", "area(Y_V) lower bound", {}, false, {}};
    AngleMultiple lower;
    {
        if (cone_angles.empty()) return fail(bound, "no cone point to bound");
        AngleMultiple smallest = cone_angles.front();
        for (const auto& a : cone_angles) smallest = a < smallest ? a : smallest;
        lower = gauss_bonnet_area({0, cusp_count, {smallest}});
        bound.values.emplace_back("theta_max", smallest.to_string());
        bound.values.emplace_back("area(Y_V)_lower_bound", lower.to_string());
    }
    bound.passed = true;
    rep.steps.push_back(bound);

    CertificateStep index{"index", "[V+:G+] = area(Y_G)/area(Y_V)", {}, false, {}};
    const Rational ratio = area_g.k / lower.k;
    index.values.emplace_back("ratio_bound", ratio.get_str());
    if (ratio >= 2) return fail(index, "ratio bound " + ratio.get_str() + " is not below 2");
    index.values.emplace_back("index", "1");
    index.passed = true;
    rep.steps.push_back(index);

    CertificateStep orient{"orientation", "[V:G] = [V+:G+]", {}, false, {}};
    if (!gen.R_AB.is_reflection()) return fail(orient, "no orientation-reversing generator");
    orient.values.emplace_back("orientation_reversing", "R_AB");
    orient.passed = true;
    rep.steps.push_back(orient);

    rep.confirmed = true;
    return rep;
}

} // namespace veech
