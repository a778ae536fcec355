#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "angle.hpp"
#include "linalg.hpp"

namespace veech {

/// Simple polygon with counterclockwise vertices.
struct PlanarPolygon {
    std::vector<Vec2> vertices;

    std::size_t size() const { return vertices.size(); }
    const Vec2& vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
    /// Edge i runs from vertex i to vertex i+1.
    Vec2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }

    FieldElem signed_area() const {
        FieldElem twice;
        for (std::size_t i = 0; i < vertices.size(); ++i) twice += cross(vertex(i), vertex(i + 1));
        return twice / 2;
    }

    friend bool operator==(const PlanarPolygon&, const PlanarPolygon&) = default;
};

struct EdgeRef {
    std::size_t polygon = 0;
    std::size_t edge = 0;

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

namespace detail {

inline bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (orient(a, b, p) != 0) return false;
    return dot(p - a, p - b).sign() <= 0;
}

inline bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

} // namespace detail

/// Counterclockwise, non-self-intersecting, at least three vertices.
inline bool is_simple_ccw(const PlanarPolygon& poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    if (poly.signed_area().sign() <= 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (poly.edge(i).is_zero()) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            const Vec2 &a = poly.vertex(i), &b = poly.vertex(i + 1);
            const Vec2 &c = poly.vertex(j), &d = poly.vertex(j + 1);
            if (adjacent) {
                // Adjacent edges may only share their common endpoint.
                const Vec2& shared = (j == i + 1) ? b : a;
                const Vec2& far_i = (j == i + 1) ? a : b;
                const Vec2& far_j = (j == i + 1) ? d : c;
                if (orient(far_i, shared, far_j) == 0 && dot(far_i - shared, far_j - shared).sign() > 0)
                    return false;
                continue;
            }
            if (detail::segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

/// Planar polygons glued edge-to-edge by translations.
///
/// Each polygon keeps absolute coordinates; the anchor of a polygon never
/// matters for translation equivalence.
class TranslationSurface {
public:
    TranslationSurface() = default;

    /// Builds and validates; throws Error(InvalidSurface) on any violation.
    TranslationSurface(int radicand, std::vector<PlanarPolygon> polygons,
                       const std::vector<std::pair<EdgeRef, EdgeRef>>& gluings)
        : radicand_(radicand), polygons_(std::move(polygons)) {
        partner_.resize(polygons_.size());
        for (std::size_t p = 0; p < polygons_.size(); ++p)
            partner_[p].assign(polygons_[p].size(), EdgeRef{kUnset, kUnset});
        for (const auto& [e, f] : gluings) {
            check_ref(e);
            check_ref(f);
            if (e == f) fail("edge glued to itself");
            if (partner(e).polygon != kUnset || partner(f).polygon != kUnset)
                fail("edge glued more than once");
            partner_[e.polygon][e.edge] = f;
            partner_[f.polygon][f.edge] = e;
        }
        validate();
    }

    int radicand() const { return radicand_; }
    const std::vector<PlanarPolygon>& polygons() const { return polygons_; }
    const PlanarPolygon& polygon(std::size_t i) const { return polygons_.at(i); }
    std::size_t num_polygons() const { return polygons_.size(); }
    std::size_t num_edges() const {
        std::size_t n = 0;
        for (const auto& p : polygons_) n += p.size();
        return n;
    }

    EdgeRef partner(const EdgeRef& e) const { return partner_.at(e.polygon).at(e.edge); }
    Vec2 edge_vector(const EdgeRef& e) const { return polygons_.at(e.polygon).edge(e.edge); }

    /// Each glued pair once, ordered by the smaller reference.
    std::vector<std::pair<EdgeRef, EdgeRef>> gluings() const {
        std::vector<std::pair<EdgeRef, EdgeRef>> out;
        for (std::size_t p = 0; p < polygons_.size(); ++p)
            for (std::size_t e = 0; e < polygons_[p].size(); ++e) {
                EdgeRef a{p, e}, b = partner(a);
                if (a < b) out.emplace_back(a, b);
            }
        return out;
    }

    FieldElem area() const {
        FieldElem total;
        for (const auto& p : polygons_) total += p.signed_area();
        return total;
    }

    friend bool operator==(const TranslationSurface& s, const TranslationSurface& t) {
        return s.radicand_ == t.radicand_ && s.polygons_ == t.polygons_ && s.partner_ == t.partner_;
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    [[noreturn]] static void fail(const std::string& what) { throw Error(ErrorCode::InvalidSurface, what); }

    void check_ref(const EdgeRef& e) const {
        if (e.polygon >= polygons_.size() || e.edge >= polygons_[e.polygon].size())
            fail("edge reference out of range");
    }

    void validate() const {
        if (polygons_.empty()) fail("surface has no polygons");
        for (std::size_t p = 0; p < polygons_.size(); ++p)
            if (!is_simple_ccw(polygons_[p]))
                fail("polygon " + std::to_string(p) + " is not simple and counterclockwise");
        for (std::size_t p = 0; p < polygons_.size(); ++p)
            for (std::size_t e = 0; e < polygons_[p].size(); ++e) {
                EdgeRef a{p, e};
                EdgeRef b = partner(a);
                if (b.polygon == kUnset) fail("edge " + std::to_string(p) + ":" + std::to_string(e) + " is unglued");
                if (edge_vector(a) != -edge_vector(b))
                    fail("glued edges " + std::to_string(p) + ":" + std::to_string(e) + " are not translates");
            }
        // Connectivity of the polygon adjacency graph.
        std::vector<bool> seen(polygons_.size(), false);
        std::queue<std::size_t> todo;
        todo.push(0);
        seen[0] = true;
        std::size_t count = 1;
        while (!todo.empty()) {
            std::size_t p = todo.front();
            todo.pop();
            for (std::size_t e = 0; e < polygons_[p].size(); ++e) {
                std::size_t q = partner(EdgeRef{p, e}).polygon;
                if (!seen[q]) {
                    seen[q] = true;
                    ++count;
                    todo.push(q);
                }
            }
        }
        if (count != polygons_.size()) fail("surface is not connected");
    }

    int radicand_ = kDefaultRadicand;
    std::vector<PlanarPolygon> polygons_;
    std::vector<std::vector<EdgeRef>> partner_;
};

/// Image of the surface under the linear map `a` (det +-1). A reflection
/// reverses polygon orientation, which is repaired by reversing vertex order.
inline TranslationSurface apply_matrix(const Mat2& a, const TranslationSurface& s) {
    if (!is_unimodular(a)) throw Error(ErrorCode::NotUnimodular, "determinant is " + a.det().to_string());
    const bool flips = a.det().sign() < 0;
    std::vector<PlanarPolygon> polys;
    polys.reserve(s.num_polygons());
    for (const auto& p : s.polygons()) {
        PlanarPolygon q;
        const std::size_t n = p.size();
        q.vertices.reserve(n);
        for (std::size_t j = 0; j < n; ++j) q.vertices.push_back(a * p.vertex(flips ? (n - j) % n : j));
        polys.push_back(std::move(q));
    }
    auto remap = [&](const EdgeRef& e) {
        if (!flips) return e;
        return EdgeRef{e.polygon, s.polygon(e.polygon).size() - 1 - e.edge};
    };
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (const auto& [e, f] : s.gluings()) glue.emplace_back(remap(e), remap(f));
    return TranslationSurface(s.radicand(), std::move(polys), glue);
}

/// Replaces polygons by the given ones (same vertex counts) keeping the gluing.
inline TranslationSurface with_polygons(const TranslationSurface& s, std::vector<PlanarPolygon> polys) {
    return TranslationSurface(s.radicand(), std::move(polys), s.gluings());
}

/// Moves polygon `index` by `offset`.
inline TranslationSurface translate_polygon(const TranslationSurface& s, std::size_t index, const Vec2& offset) {
    auto polys = s.polygons();
    for (auto& v : polys.at(index).vertices) v += offset;
    return with_polygons(s, std::move(polys));
}

/// Renumbers polygons by `order` (new i is old order[i]) and rotates vertex
/// lists so old vertex shift[i] becomes vertex 0 of new polygon i.
inline TranslationSurface relabel(const TranslationSurface& s, const std::vector<std::size_t>& order,
                                  const std::vector<std::size_t>& shift) {
    const std::size_t np = s.num_polygons();
    if (order.size() != np || shift.size() != np) throw std::logic_error("relabel: size mismatch");
    std::vector<std::size_t> new_index(np);
    for (std::size_t i = 0; i < np; ++i) new_index.at(order[i]) = i;
    std::vector<PlanarPolygon> polys(np);
    for (std::size_t i = 0; i < np; ++i) {
        const auto& old = s.polygon(order[i]);
        for (std::size_t j = 0; j < old.size(); ++j) polys[i].vertices.push_back(old.vertex(j + shift[i]));
    }
    auto remap = [&](const EdgeRef& e) {
        std::size_t ni = new_index[e.polygon];
        std::size_t n = s.polygon(e.polygon).size();
        return EdgeRef{ni, (e.edge + n - shift[ni] % n) % n};
    };
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (const auto& [e, f] : s.gluings()) glue.emplace_back(remap(e), remap(f));
    return TranslationSurface(s.radicand(), std::move(polys), glue);
}

/// Cuts polygon `index` along the diagonal joining vertices i < j. The two
/// pieces replace the polygon (first piece in place, second appended).
inline TranslationSurface split_polygon(const TranslationSurface& s, std::size_t index, std::size_t i, std::size_t j) {
    const auto& poly = s.polygon(index);
    const std::size_t n = poly.size();
    if (!(i < j && j < n) || j == i + 1 || (i == 0 && j == n - 1))
        throw Error(ErrorCode::InvalidSurface, "split needs two non-adjacent vertices");
    PlanarPolygon first, second;
    for (std::size_t k = i; k <= j; ++k) first.vertices.push_back(poly.vertex(k));
    for (std::size_t k = j; k != i + n + 1; ++k) second.vertices.push_back(poly.vertex(k));
    // The diagonal must run through the interior.
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || (k + 1) % n == i || (k + 1) % n == j) continue;
        if (detail::segments_intersect(poly.vertex(i), poly.vertex(j), poly.vertex(k), poly.vertex(k + 1)))
            throw Error(ErrorCode::InvalidSurface, "diagonal crosses the boundary");
    }
    if (!is_simple_ccw(first) || !is_simple_ccw(second))
        throw Error(ErrorCode::InvalidSurface, "diagonal is not interior");

    auto polys = s.polygons();
    const std::size_t second_index = polys.size();
    polys[index] = first;
    polys.push_back(second);
    const std::size_t first_n = first.size(), second_n = second.size();
    auto remap = [&](const EdgeRef& e) {
        if (e.polygon != index) return e;
        if (e.edge >= i && e.edge < j) return EdgeRef{index, e.edge - i};
        return EdgeRef{second_index, (e.edge + n - j) % n};
    };
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (const auto& [e, f] : s.gluings()) glue.emplace_back(remap(e), remap(f));
    glue.emplace_back(EdgeRef{index, first_n - 1}, EdgeRef{second_index, second_n - 1});
    return TranslationSurface(s.radicand(), std::move(polys), glue);
}

/// Glues the two distinct polygons meeting along edge `e` into one polygon
/// (in the slot of e.polygon). Throws InvalidSurface when the union is not simple.
inline TranslationSurface merge_polygons(const TranslationSurface& s, const EdgeRef& e) {
    const EdgeRef f = s.partner(e);
    if (f.polygon == e.polygon) throw Error(ErrorCode::InvalidSurface, "edge is glued within one polygon");
    const auto& p = s.polygon(e.polygon);
    const auto& q = s.polygon(f.polygon);
    const std::size_t np = p.size(), nq = q.size();
    const Vec2 offset = p.vertex(e.edge + 1) - q.vertex(f.edge);
    PlanarPolygon merged;
    for (std::size_t k = 0; k < np; ++k) merged.vertices.push_back(p.vertex(e.edge + 1 + k));
    for (std::size_t k = 0; k + 2 < nq; ++k) merged.vertices.push_back(q.vertex(f.edge + 2 + k) + offset);
    if (!is_simple_ccw(merged)) throw Error(ErrorCode::InvalidSurface, "merged polygon is not simple");

    std::vector<PlanarPolygon> polys;
    std::vector<std::size_t> new_index(s.num_polygons());
    for (std::size_t k = 0, next = 0; k < s.num_polygons(); ++k) {
        if (k == f.polygon) continue;
        new_index[k] = next++;
        polys.push_back(k == e.polygon ? merged : s.polygon(k));
    }
    const std::size_t target = new_index[e.polygon];
    auto remap = [&](const EdgeRef& r) {
        if (r.polygon == e.polygon) return EdgeRef{target, (r.edge + np - e.edge - 1) % np};
        if (r.polygon == f.polygon) return EdgeRef{target, np - 1 + (r.edge + nq - f.edge - 1) % nq};
        return EdgeRef{new_index[r.polygon], r.edge};
    };
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (const auto& [a, b] : s.gluings()) {
        if ((a == e && b == f) || (a == f && b == e)) continue;
        glue.emplace_back(remap(a), remap(b));
    }
    return TranslationSurface(s.radicand(), std::move(polys), glue);
}

/// Unfolding of the triangle with angles (p1, p2, p3) * pi / n.
///
/// Vertex 0 sits at the origin, vertex 1 along the direction `base_angle`
/// (default p1*pi/n). Copies are indexed by the elements of the
/// group generated by the linear reflections in the sides; copy g and copy
/// g*r glue along side e when r is the reflection in e.
struct Unfolding {
    TranslationSurface surface;
    std::vector<Mat2> group;   // group[i] is the linear part of polygon i
    PlanarPolygon triangle;
};

/// Triangle with angles p1*pi/n at V0 = origin, p2*pi/n at V1 and p3*pi/n at
/// V2, and side V0V1 a positive multiple of the unit vector at `base_angle`
/// (default p1*pi/n, which makes the horizontal the mirror image of side
/// V0V2 in side V0V1).
inline Unfolding unfold_triangle_detailed(long p1, long p2, long p3, long n, int radicand = kDefaultRadicand,
                                          std::optional<AngleMultiple> base = std::nullopt) {
    if (p1 < 1 || p2 < 1 || p3 < 1 || n < 1 || p1 + p2 + p3 != n)
        throw Error(ErrorCode::InvalidTriangle, "angles must be positive and sum to pi");
    const long g = std::gcd(std::gcd(p1, p2), std::gcd(p3, n));
    p1 /= g, p2 /= g, p3 /= g, n /= g;
    const AngleMultiple base_angle = base.value_or(AngleMultiple::pi_times(p1, n));
    auto dir = [&](const AngleMultiple& a) {
        auto v = direction_at(a, radicand);
        if (!v) throw Error(ErrorCode::UnsupportedField, "angle " + a.to_string() + " has no exact direction over Q(sqrt " +
                                                             std::to_string(radicand) + ")");
        // Re-tag rational coordinates with the working radicand.
        return Vec2{FieldElem(v->x.a(), v->x.b(), v->x.is_rational() ? radicand : v->x.radicand()),
                    FieldElem(v->y.a(), v->y.b(), v->y.is_rational() ? radicand : v->y.radicand())};
    };
    const AngleMultiple a1 = AngleMultiple::pi_times(p1, n), a2 = AngleMultiple::pi_times(p2, n);
    const Vec2 v0{FieldElem(0, 0, radicand), FieldElem(0, 0, radicand)};
    const Vec2 v1 = dir(base_angle);
    const Vec2 d0 = dir(base_angle + a1);
    const Vec2 d1 = dir(base_angle + AngleMultiple::pi_times(1) - a2);
    // v0 + s*d0 = v1 + t*d1.
    const FieldElem s = cross(v1, d1) / cross(d0, d1);
    const Vec2 v2 = s * d0;
    PlanarPolygon tri{{v0, v1, v2}};
    if (tri.signed_area().sign() <= 0) throw Error(ErrorCode::InvalidTriangle, "degenerate triangle");

    const std::array<Mat2, 3> reflections{reflection_across(v1 - v0), reflection_across(v2 - v1),
                                          reflection_across(v0 - v2)};
    std::vector<Mat2> group{Mat2::identity()};
    std::map<std::string, std::size_t> index{{Mat2::identity().to_string(), 0}};
    std::vector<std::array<std::size_t, 3>> times_reflection;
    for (std::size_t i = 0; i < group.size(); ++i) {
        std::array<std::size_t, 3> row{};
        for (std::size_t k = 0; k < 3; ++k) {
            Mat2 h = group[i] * reflections[k];
            auto [it, inserted] = index.emplace(h.to_string(), group.size());
            if (inserted) group.push_back(h);
            row[k] = it->second;
        }
        times_reflection.push_back(row);
    }

    std::vector<PlanarPolygon> polys;
    for (const auto& m : group) {
        PlanarPolygon copy;
        if (m.det().sign() > 0) copy.vertices = {m * v0, m * v1, m * v2};
        else copy.vertices = {m * v0, m * v2, m * v1};
        polys.push_back(std::move(copy));
    }
    auto local_edge = [&](std::size_t copy, std::size_t side) {
        return group[copy].det().sign() > 0 ? side : 2 - side;
    };
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            std::size_t j = times_reflection[i][k];
            if (i < j) glue.emplace_back(EdgeRef{i, local_edge(i, k)}, EdgeRef{j, local_edge(j, k)});
        }
    return {TranslationSurface(radicand, std::move(polys), glue), std::move(group), std::move(tri)};
}

inline TranslationSurface unfold_triangle(long p1, long p2, long p3, long n, int radicand = kDefaultRadicand) {
    return unfold_triangle_detailed(p1, p2, p3, n, radicand).surface;
}

/// Unit square with opposite sides identified.
inline TranslationSurface square_torus(int radicand = kDefaultRadicand) {
    auto f = [&](long v) { return FieldElem(v, 0, radicand); };
    PlanarPolygon sq{{Vec2{f(0), f(0)}, Vec2{f(1), f(0)}, Vec2{f(1), f(1)}, Vec2{f(0), f(1)}}};
    return TranslationSurface(radicand, {sq}, {{EdgeRef{0, 0}, EdgeRef{0, 2}}, {EdgeRef{0, 1}, EdgeRef{0, 3}}});
}

} // namespace veech
