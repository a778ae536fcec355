#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "surface.hpp"

namespace veech {

/// Side `side` of triangle `tri`; also names the corner at the start of that side.
struct HalfEdge {
    int tri = -1;
    int side = 0;

    friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

namespace detail {

inline bool in_closed_triangle(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c) {
    return orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
}

/// Triangulates a simple counterclockwise polygon (collinear vertices
/// allowed) into counterclockwise index triples.
inline std::vector<std::array<std::size_t, 3>> ear_clip(const std::vector<Vec2>& pts) {
    std::vector<std::size_t> ring(pts.size());
    std::iota(ring.begin(), ring.end(), 0);
    std::vector<std::array<std::size_t, 3>> out;
    while (ring.size() > 3) {
        const std::size_t m = ring.size();
        bool clipped = false;
        for (std::size_t k = 0; k < m && !clipped; ++k) {
            std::size_t a = ring[(k + m - 1) % m], b = ring[k], c = ring[(k + 1) % m];
            if (orient(pts[a], pts[b], pts[c]) <= 0) continue;
            bool empty = true;
            for (std::size_t r : ring) {
                if (r == a || r == b || r == c) continue;
                if (in_closed_triangle(pts[r], pts[a], pts[b], pts[c])) {
                    empty = false;
                    break;
                }
            }
            if (!empty) continue;
            out.push_back({a, b, c});
            ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
            clipped = true;
        }
        if (!clipped) throw Error(ErrorCode::InvalidSurface, "polygon could not be triangulated");
    }
    if (orient(pts[ring[0]], pts[ring[1]], pts[ring[2]]) <= 0)
        throw Error(ErrorCode::InvalidSurface, "degenerate final ear");
    out.push_back({ring[0], ring[1], ring[2]});
    return out;
}

/// Z-basis of the subgroup of Q(sqrt d)^2 generated by `gens`.
inline std::vector<Vec2> integer_span_basis(const std::vector<Vec2>& gens, int d) {
    // Coordinates over the Q-basis (1, sqrt d) of each component, cleared of denominators.
    Integer den = 1;
    auto coords = [](const Vec2& v) {
        return std::array<Rational, 4>{v.x.a(), v.x.b(), v.y.a(), v.y.b()};
    };
    for (const auto& g : gens)
        for (const auto& q : coords(g)) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<std::array<Integer, 4>> rows;
    for (const auto& g : gens) {
        std::array<Integer, 4> row;
        auto c = coords(g);
        for (std::size_t k = 0; k < 4; ++k) {
            Rational scaled = c[k] * den;
            row[k] = scaled.get_num();
        }
        rows.push_back(row);
    }
    std::size_t pivot = 0;
    for (std::size_t col = 0; col < 4 && pivot < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot; r < rows.size(); ++r)
                if (sgn(rows[r][col]) != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
            if (best == rows.size()) break;
            std::swap(rows[pivot], rows[best]);
            bool others = false;
            for (std::size_t r = pivot + 1; r < rows.size(); ++r) {
                if (sgn(rows[r][col]) == 0) continue;
                Integer q = rows[r][col] / rows[pivot][col];
                for (std::size_t k = 0; k < 4; ++k) rows[r][k] -= q * rows[pivot][k];
                if (sgn(rows[r][col]) != 0) others = true;
            }
            if (!others) {
                ++pivot;
                break;
            }
        }
    }
    std::vector<Vec2> basis;
    for (std::size_t r = 0; r < pivot; ++r) {
        const auto& row = rows[r];
        auto q = [&](std::size_t k) {
            Rational v(row[k], den);
            v.canonicalize();
            return v;
        };
        basis.push_back(Vec2{FieldElem(q(0), q(1), d), FieldElem(q(2), q(3), d)});
    }
    return basis;
}

} // namespace detail

/// Triangulated translation surface stored by edge vectors only.
///
/// Triangle t has counterclockwise side vectors edges[t][0..2] summing to
/// zero; in local coordinates vertex 0 is the origin, vertex 1 is edges[t][0],
/// vertex 2 is edges[t][0] + edges[t][1]. Side i runs from vertex i to i+1.
class Triangulation {
public:
    Triangulation() = default;

    static Triangulation from_surface(const TranslationSurface& s) {
        Triangulation out;
        out.radicand_ = s.radicand();
        std::vector<std::vector<HalfEdge>> of_polygon_edge(s.num_polygons());
        std::vector<std::pair<HalfEdge, HalfEdge>> internal;
        for (std::size_t p = 0; p < s.num_polygons(); ++p) {
            const auto& poly = s.polygon(p);
            const std::size_t n = poly.size();
            of_polygon_edge[p].assign(n, HalfEdge{});
            auto tris = detail::ear_clip(poly.vertices);
            std::map<std::pair<std::size_t, std::size_t>, HalfEdge> diagonal;
            for (const auto& tri : tris) {
                const int t = static_cast<int>(out.edges_.size());
                out.edges_.push_back({poly.vertex(tri[1]) - poly.vertex(tri[0]), poly.vertex(tri[2]) - poly.vertex(tri[1]),
                                      poly.vertex(tri[0]) - poly.vertex(tri[2])});
                out.partner_.push_back({});
                for (int side = 0; side < 3; ++side) {
                    std::size_t a = tri[static_cast<std::size_t>(side)], b = tri[static_cast<std::size_t>((side + 1) % 3)];
                    HalfEdge h{t, side};
                    if (b == (a + 1) % n) {
                        of_polygon_edge[p][a] = h;
                    } else if (auto it = diagonal.find({b, a}); it != diagonal.end()) {
                        internal.emplace_back(h, it->second);
                    } else {
                        diagonal[{a, b}] = h;
                    }
                }
            }
        }
        for (const auto& [h, g] : internal) out.link(h, g);
        for (const auto& [e, f] : s.gluings())
            out.link(of_polygon_edge[e.polygon][e.edge], of_polygon_edge[f.polygon][f.edge]);
        return out;
    }

    int radicand() const { return radicand_; }
    std::size_t num_triangles() const { return edges_.size(); }
    const Vec2& edge(int t, int side) const { return edges_[static_cast<std::size_t>(t)][static_cast<std::size_t>(side)]; }
    const Vec2& edge(const HalfEdge& h) const { return edge(h.tri, h.side); }
    HalfEdge partner(const HalfEdge& h) const {
        return partner_[static_cast<std::size_t>(h.tri)][static_cast<std::size_t>(h.side)];
    }

    Vec2 vertex(int t, int i) const {
        switch (i % 3) {
        case 0: return Vec2{FieldElem(0), FieldElem(0)};
        case 1: return edge(t, 0);
        default: return edge(t, 0) + edge(t, 1);
        }
    }

    FieldElem area() const {
        FieldElem total;
        for (const auto& e : edges_) total += cross(e[0], -e[2]);
        return total / 2;
    }

    /// Next corner counterclockwise around the same surface point.
    HalfEdge next_corner(const HalfEdge& c) const { return partner(HalfEdge{c.tri, (c.side + 2) % 3}); }

    /// Corner directions: start = side c.side, end = reverse of the previous side.
    Vec2 corner_start(const HalfEdge& c) const { return edge(c); }
    Vec2 corner_end(const HalfEdge& c) const { return -edge(c.tri, (c.side + 2) % 3); }

    /// Whether `dir` lies in the half-open angular range [start, end) of the corner.
    bool corner_contains(const HalfEdge& c, const Vec2& dir) const {
        return cross(corner_start(c), dir).sign() >= 0 && cross(dir, corner_end(c)).sign() > 0;
    }

    /// Corner cycles, one per surface point, each in counterclockwise order.
    std::vector<std::vector<HalfEdge>> vertex_classes() const {
        std::vector<std::array<bool, 3>> seen(edges_.size(), {false, false, false});
        std::vector<std::vector<HalfEdge>> out;
        for (int t = 0; t < static_cast<int>(edges_.size()); ++t)
            for (int i = 0; i < 3; ++i) {
                if (seen[static_cast<std::size_t>(t)][static_cast<std::size_t>(i)]) continue;
                std::vector<HalfEdge> cycle;
                HalfEdge c{t, i};
                do {
                    seen[static_cast<std::size_t>(c.tri)][static_cast<std::size_t>(c.side)] = true;
                    cycle.push_back(c);
                    c = next_corner(c);
                } while (!(c == HalfEdge{t, i}));
                out.push_back(std::move(cycle));
            }
        return out;
    }

    /// Total angle around a corner cycle, in units of 2*pi.
    long winding(const std::vector<HalfEdge>& cycle) const {
        const Vec2 probe{FieldElem(1), FieldElem(0)};
        long count = 0;
        for (const auto& c : cycle)
            if (corner_contains(c, probe)) ++count;
        return count;
    }

    /// Image under a linear map of determinant +-1.
    Triangulation transformed(const Mat2& m) const {
        if (!is_unimodular(m)) throw Error(ErrorCode::NotUnimodular, "determinant is " + m.det().to_string());
        Triangulation out = *this;
        if (m.det().sign() > 0) {
            for (auto& tri : out.edges_)
                for (auto& e : tri) e = m * e;
            return out;
        }
        for (std::size_t t = 0; t < edges_.size(); ++t) {
            const auto& e = edges_[t];
            out.edges_[t] = {-(m * e[2]), -(m * e[1]), -(m * e[0])};
            for (int k = 0; k < 3; ++k) {
                HalfEdge p = partner_[t][static_cast<std::size_t>(2 - k)];
                out.partner_[t][static_cast<std::size_t>(k)] = HalfEdge{p.tri, 2 - p.side};
            }
        }
        return out;
    }

    /// Whether the quadrilateral formed by the two triangles on `h` is
    /// strictly convex, so that the diagonal can be exchanged.
    bool is_flippable(const HalfEdge& h) const {
        auto [quad, ok] = quadrilateral(h);
        if (!ok) return false;
        const auto& [p0, p1, p2, p3] = quad;
        return orient(p0, p1, p2) > 0 && orient(p1, p2, p3) > 0 && orient(p2, p3, p0) > 0 && orient(p3, p0, p1) > 0;
    }

    /// Sign of the in-circle test of the far vertex across `h` against the
    /// circumcircle of h's triangle: +1 strictly inside (not Delaunay),
    /// 0 cocircular, -1 outside.
    int incircle(const HalfEdge& h) const {
        const HalfEdge g = partner(h);
        const Vec2 b = edge(h);
        const Vec2 c = b + edge(h.tri, (h.side + 1) % 3);
        const Vec2 d = edge(g.tri, (g.side + 1) % 3);
        const FieldElem bb = norm_sq(b), cc = norm_sq(c), dd = norm_sq(d);
        FieldElem det = b.x * (c.y * dd - cc * d.y) - b.y * (c.x * dd - cc * d.x) + bb * (c.x * d.y - c.y * d.x);
        return -det.sign();
    }

    /// Exchanges the diagonal of the quadrilateral around `h`. The two
    /// triangles keep their slots; returns the new diagonal half-edge.
    HalfEdge flip(const HalfEdge& h) {
        if (!is_flippable(h)) throw std::logic_error("flip of a non-convex quadrilateral");
        const HalfEdge g = partner(h);
        const int t = h.tri, u = g.tri;
        const int i = h.side, j = g.side;
        const Vec2 b = edge(t, (i + 1) % 3), c = edge(t, (i + 2) % 3);
        const Vec2 p = edge(u, (j + 1) % 3), q = edge(u, (j + 2) % 3);
        const HalfEdge tb{t, (i + 1) % 3}, tc{t, (i + 2) % 3}, up{u, (j + 1) % 3}, uq{u, (j + 2) % 3};
        // New slots: t = [q, b, diag], u = [c, p, diag'].
        std::map<HalfEdge, HalfEdge> moved{{uq, {t, 0}}, {tb, {t, 1}}, {tc, {u, 0}}, {up, {u, 1}}};
        std::map<HalfEdge, HalfEdge> old_partner;
        for (const auto& [old, now] : moved) old_partner[old] = partner(old);
        edges_[static_cast<std::size_t>(t)] = {q, b, -(q + b)};
        edges_[static_cast<std::size_t>(u)] = {c, p, -(c + p)};
        for (const auto& [old, now] : moved) {
            HalfEdge op = old_partner[old];
            auto it = moved.find(op);
            HalfEdge target = it != moved.end() ? it->second : op;
            set_partner(now, target);
            if (it == moved.end()) set_partner(op, now);
        }
        link(HalfEdge{t, 2}, HalfEdge{u, 2});
        return HalfEdge{t, 2};
    }

    /// Lawson flips until every edge is locally Delaunay.
    void make_delaunay() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int t = 0; t < static_cast<int>(edges_.size()); ++t)
                for (int i = 0; i < 3; ++i) {
                    HalfEdge h{t, i};
                    if (incircle(h) > 0) {
                        flip(h);
                        changed = true;
                    }
                }
        }
    }

    bool is_delaunay() const {
        for (int t = 0; t < static_cast<int>(edges_.size()); ++t)
            for (int i = 0; i < 3; ++i)
                if (incircle(HalfEdge{t, i}) > 0) return false;
        return true;
    }

    /// Removes every point of cone angle 2*pi from the vertex set. A surface
    /// without singularities keeps exactly one marked point.
    void remove_regular_vertices() {
        for (int guard = 0;; ++guard) {
            if (guard > 100000) throw Error(ErrorCode::InvalidSurface, "marked point removal did not terminate");
            auto classes = vertex_classes();
            std::vector<std::size_t> regular;
            for (std::size_t k = 0; k < classes.size(); ++k)
                if (winding(classes[k]) == 1) regular.push_back(k);
            if (regular.empty()) return;
            if (regular.size() == classes.size()) {
                if (classes.size() > 1) *this = lattice_torus();
                return;
            }
            std::stable_sort(regular.begin(), regular.end(),
                             [&](std::size_t x, std::size_t y) { return classes[x].size() < classes[y].size(); });
            bool progressed = false;
            for (std::size_t k : regular)
                if (try_remove_vertex(classes[k])) {
                    progressed = true;
                    break;
                }
            if (progressed) continue;
            if (!is_delaunay()) {
                make_delaunay();
                continue;
            }
            // A star that revisits a triangle cannot be cut out directly;
            // flip an incident edge and retry.
            for (std::size_t k : regular) {
                for (const auto& c : classes[k]) {
                    if (is_flippable(c) && (reduces_degree(c) || is_loop(c, classes[k]))) {
                        flip(c);
                        progressed = true;
                        break;
                    }
                }
                if (progressed) break;
            }
            if (!progressed) throw Error(ErrorCode::InvalidSurface, "could not remove a marked point");
        }
    }

    /// Translation lattice of a flat torus (every vertex regular), as two
    /// basis vectors with positive orientation.
    std::pair<Vec2, Vec2> holonomy_basis() const {
        const std::size_t n = edges_.size();
        std::vector<std::optional<Vec2>> offset(n);
        offset[0] = Vec2{FieldElem(0), FieldElem(0)};
        std::vector<int> order{0};
        for (std::size_t k = 0; k < order.size(); ++k) {
            int t = order[k];
            for (int i = 0; i < 3; ++i) {
                HalfEdge g = partner(HalfEdge{t, i});
                auto& slot = offset[static_cast<std::size_t>(g.tri)];
                if (slot) continue;
                slot = *offset[static_cast<std::size_t>(t)] + vertex(t, i + 1) - vertex(g.tri, g.side);
                order.push_back(g.tri);
            }
        }
        std::vector<Vec2> generators;
        for (int t = 0; t < static_cast<int>(n); ++t)
            for (int i = 0; i < 3; ++i) {
                HalfEdge g = partner(HalfEdge{t, i});
                Vec2 delta = *offset[static_cast<std::size_t>(t)] + vertex(t, i + 1) -
                             (*offset[static_cast<std::size_t>(g.tri)] + vertex(g.tri, g.side));
                if (!delta.is_zero()) generators.push_back(delta);
            }
        auto basis = detail::integer_span_basis(generators, radicand_);
        if (basis.size() != 2) throw Error(ErrorCode::InvalidSurface, "holonomy of a torus must have rank 2");
        if (cross(basis[0], basis[1]).sign() < 0) std::swap(basis[0], basis[1]);
        return {basis[0], basis[1]};
    }

    /// Presentation as a surface with one polygon per triangle, each anchored
    /// at the origin.
    TranslationSurface to_surface() const {
        std::vector<PlanarPolygon> polys;
        for (int t = 0; t < static_cast<int>(edges_.size()); ++t)
            polys.push_back(PlanarPolygon{{vertex(t, 0), vertex(t, 1), vertex(t, 2)}});
        std::vector<std::pair<EdgeRef, EdgeRef>> glue;
        for (int t = 0; t < static_cast<int>(edges_.size()); ++t)
            for (int i = 0; i < 3; ++i) {
                HalfEdge h{t, i}, g = partner(h);
                if (h < g)
                    glue.emplace_back(EdgeRef{static_cast<std::size_t>(t), static_cast<std::size_t>(i)},
                                      EdgeRef{static_cast<std::size_t>(g.tri), static_cast<std::size_t>(g.side)});
            }
        return TranslationSurface(radicand_, std::move(polys), glue);
    }

private:
    void set_partner(const HalfEdge& h, const HalfEdge& g) {
        partner_[static_cast<std::size_t>(h.tri)][static_cast<std::size_t>(h.side)] = g;
    }
    void link(const HalfEdge& h, const HalfEdge& g) {
        set_partner(h, g);
        set_partner(g, h);
    }

    // Quadrilateral (origin, p, a, a+b) around h in the local frame of h's start.
    std::pair<std::array<Vec2, 4>, bool> quadrilateral(const HalfEdge& h) const {
        const HalfEdge g = partner(h);
        if (g.tri == h.tri) return {{}, false};
        const Vec2 a = edge(h), b = edge(h.tri, (h.side + 1) % 3);
        const Vec2 p = edge(g.tri, (g.side + 1) % 3);
        return {{Vec2{FieldElem(0), FieldElem(0)}, p, a, a + b}, true};
    }

    Triangulation lattice_torus() const {
        auto [u, w] = holonomy_basis();
        Triangulation out;
        out.radicand_ = radicand_;
        out.edges_ = {{u, w, -(u + w)}, {u + w, -u, -w}};
        out.partner_.resize(2);
        out.link(HalfEdge{0, 0}, HalfEdge{1, 1});
        out.link(HalfEdge{0, 1}, HalfEdge{1, 2});
        out.link(HalfEdge{0, 2}, HalfEdge{1, 0});
        return out;
    }

    bool is_loop(const HalfEdge& c, const std::vector<HalfEdge>& cls) const {
        HalfEdge end{c.tri, (c.side + 1) % 3};
        return std::find(cls.begin(), cls.end(), end) != cls.end();
    }

    // Flipping side c of the corner at c's start removes one edge from that point.
    bool reduces_degree(const HalfEdge& c) const {
        const HalfEdge g = partner(c);
        auto classes = vertex_classes();
        auto class_of = [&](const HalfEdge& corner) {
            for (std::size_t k = 0; k < classes.size(); ++k)
                for (const auto& x : classes[k])
                    if (x == corner) return k;
            return classes.size();
        };
        const std::size_t start = class_of(c);
        const std::size_t apex_t = class_of(HalfEdge{c.tri, (c.side + 2) % 3});
        const std::size_t apex_u = class_of(HalfEdge{g.tri, (g.side + 2) % 3});
        return apex_t != start && apex_u != start;
    }

    bool try_remove_vertex(const std::vector<HalfEdge>& cycle) {
        const std::size_t m = cycle.size();
        if (m < 3) return false;
        std::vector<int> star;
        for (const auto& c : cycle) star.push_back(c.tri);
        std::vector<int> sorted = star;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

        std::vector<Vec2> link_pts;
        std::vector<HalfEdge> link_edge;  // old half-edge of link side k
        for (const auto& c : cycle) {
            link_pts.push_back(edge(c));
            link_edge.push_back(HalfEdge{c.tri, (c.side + 1) % 3});
        }
        std::vector<std::array<std::size_t, 3>> tris;
        try {
            tris = detail::ear_clip(link_pts);
        } catch (const Error&) {
            return false;
        }

        // Old triangles outside the star keep their relative order.
        std::vector<int> new_index(edges_.size(), -1);
        std::vector<std::array<Vec2, 3>> new_edges;
        std::vector<std::array<HalfEdge, 3>> new_partner;
        for (int t = 0; t < static_cast<int>(edges_.size()); ++t) {
            if (std::find(star.begin(), star.end(), t) != star.end()) continue;
            new_index[static_cast<std::size_t>(t)] = static_cast<int>(new_edges.size());
            new_edges.push_back(edges_[static_cast<std::size_t>(t)]);
            new_partner.push_back(partner_[static_cast<std::size_t>(t)]);
        }
        const int base = static_cast<int>(new_edges.size());
        std::map<HalfEdge, HalfEdge> link_to_new;  // old link half-edge -> new half-edge
        std::map<std::pair<std::size_t, std::size_t>, HalfEdge> diagonal;
        std::vector<std::pair<HalfEdge, HalfEdge>> diag_pairs;
        for (std::size_t k = 0; k < tris.size(); ++k) {
            const auto& tri = tris[k];
            const int t = base + static_cast<int>(k);
            new_edges.push_back({link_pts[tri[1]] - link_pts[tri[0]], link_pts[tri[2]] - link_pts[tri[1]],
                                 link_pts[tri[0]] - link_pts[tri[2]]});
            new_partner.push_back({});
            for (int side = 0; side < 3; ++side) {
                std::size_t a = tri[static_cast<std::size_t>(side)], b = tri[static_cast<std::size_t>((side + 1) % 3)];
                HalfEdge h{t, side};
                if (b == (a + 1) % m) {
                    link_to_new[link_edge[a]] = h;
                } else if (auto it = diagonal.find({b, a}); it != diagonal.end()) {
                    diag_pairs.emplace_back(h, it->second);
                } else {
                    diagonal[{a, b}] = h;
                }
            }
        }
        auto translate = [&](const HalfEdge& old) {
            if (auto it = link_to_new.find(old); it != link_to_new.end()) return it->second;
            return HalfEdge{new_index[static_cast<std::size_t>(old.tri)], old.side};
        };
        for (auto& row : new_partner)
            for (auto& p : row)
                if (p.tri >= 0) p = translate(p);
        for (const auto& [old, now] : link_to_new) {
            HalfEdge target = translate(partner(old));
            new_partner[static_cast<std::size_t>(now.tri)][static_cast<std::size_t>(now.side)] = target;
        }
        for (const auto& [h, g] : diag_pairs) {
            new_partner[static_cast<std::size_t>(h.tri)][static_cast<std::size_t>(h.side)] = g;
            new_partner[static_cast<std::size_t>(g.tri)][static_cast<std::size_t>(g.side)] = h;
        }
        edges_ = std::move(new_edges);
        partner_ = std::move(new_partner);
        return true;
    }

    int radicand_ = kDefaultRadicand;
    std::vector<std::array<Vec2, 3>> edges_;
    std::vector<std::array<HalfEdge, 3>> partner_;
};

/// Triangulation whose vertices are exactly the cone points (one marked
/// point on a flat torus), made Delaunay.
inline Triangulation delaunay_triangulation(const TranslationSurface& s) {
    Triangulation t = Triangulation::from_surface(s);
    t.remove_regular_vertices();
    t.make_delaunay();
    return t;
}

/// Cone data of a surface.
struct ConePointReport {
    std::vector<std::pair<AngleMultiple, long>> cones;  // (cone angle, number of points), by angle
    long genus = 0;
    std::size_t num_polygons = 0;
    std::size_t num_vertices = 0;
};

/// Cone angles from the winding of each vertex orbit (always an exact
/// multiple of 2*pi on a translation surface); genus from V - E + F.
inline ConePointReport cone_points(const TranslationSurface& s) {
    Triangulation t = Triangulation::from_surface(s);
    auto classes = t.vertex_classes();
    std::map<long, long> by_winding;
    for (const auto& c : classes) ++by_winding[t.winding(c)];
    ConePointReport report;
    for (const auto& [w, count] : by_winding) report.cones.emplace_back(AngleMultiple::pi_times(2 * w), count);
    const long v = static_cast<long>(classes.size());
    const long f = static_cast<long>(s.num_polygons());
    const long e = static_cast<long>(s.num_edges() / 2);
    const long chi = v - e + f;
    report.genus = (2 - chi) / 2;
    report.num_polygons = s.num_polygons();
    report.num_vertices = classes.size();
    return report;
}

} // namespace veech
