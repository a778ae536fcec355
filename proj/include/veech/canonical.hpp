#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "triangulation.hpp"

namespace veech {

/// Faces of the Delaunay decomposition: triangles merged across every
/// cocircular edge. Each cell is a convex polygon given by its boundary
/// half-edges in counterclockwise order.
struct DelaunayCells {
    Triangulation tri;
    std::vector<std::vector<HalfEdge>> cells;
    std::map<HalfEdge, std::pair<std::size_t, std::size_t>> position;  // boundary half-edge -> (cell, index)

    bool is_internal(const HalfEdge& h) const { return tri.incircle(h) == 0; }
};

inline DelaunayCells delaunay_cells(Triangulation t) {
    DelaunayCells out;
    out.tri = std::move(t);
    const auto& tri = out.tri;
    std::set<HalfEdge> used;
    for (int f = 0; f < static_cast<int>(tri.num_triangles()); ++f)
        for (int i = 0; i < 3; ++i) {
            HalfEdge start{f, i};
            if (out.is_internal(start) || used.count(start)) continue;
            std::vector<HalfEdge> cycle;
            HalfEdge h = start;
            do {
                used.insert(h);
                out.position[h] = {out.cells.size(), cycle.size()};
                cycle.push_back(h);
                HalfEdge next{h.tri, (h.side + 1) % 3};
                while (out.is_internal(next)) {
                    HalfEdge across = tri.partner(next);
                    next = HalfEdge{across.tri, (across.side + 1) % 3};
                }
                h = next;
            } while (!(h == start));
            out.cells.push_back(std::move(cycle));
        }
    return out;
}

namespace detail {

struct CellEncoding {
    std::vector<Rational> tokens;
    std::vector<std::size_t> order;     // cells in label order
    std::vector<std::size_t> rotation;  // first boundary index of each cell
};

inline void push_field(std::vector<Rational>& out, const FieldElem& x) {
    out.push_back(x.a());
    out.push_back(x.b());
}

// Breadth-first encoding rooted at boundary position `first` of `root`. Stops
// early once the partial token stream exceeds `bound`.
inline bool encode_cells(const DelaunayCells& dc, std::size_t root, std::size_t first, CellEncoding& enc,
                         const std::vector<Rational>* bound) {
    const std::size_t nc = dc.cells.size();
    std::vector<long> label(nc, -1);
    enc.tokens.clear();
    enc.order.clear();
    enc.rotation.assign(nc, 0);
    label[root] = 0;
    enc.rotation[root] = first;
    enc.order.push_back(root);
    bool tied = bound != nullptr;
    auto emit = [&](Rational v) {
        if (tied) {
            const std::size_t k = enc.tokens.size();
            int c = cmp(v, (*bound)[k]);
            if (c > 0) return false;
            if (c < 0) tied = false;
        }
        enc.tokens.push_back(std::move(v));
        return true;
    };
    for (std::size_t q = 0; q < enc.order.size(); ++q) {
        const std::size_t c = enc.order[q];
        const auto& cycle = dc.cells[c];
        const std::size_t m = cycle.size();
        if (!emit(Rational(static_cast<long>(m)))) return false;
        for (std::size_t k = 0; k < m; ++k) {
            const HalfEdge h = cycle[(enc.rotation[c] + k) % m];
            const Vec2 v = dc.tri.edge(h);
            std::vector<Rational> parts;
            push_field(parts, v.x);
            push_field(parts, v.y);
            for (auto& p : parts)
                if (!emit(std::move(p))) return false;
            const auto [nb, idx] = dc.position.at(dc.tri.partner(h));
            if (label[nb] < 0) {
                label[nb] = static_cast<long>(enc.order.size());
                enc.rotation[nb] = idx;
                enc.order.push_back(nb);
            }
            const std::size_t mn = dc.cells[nb].size();
            const std::size_t offset = (idx + mn - enc.rotation[nb]) % mn;
            if (!emit(Rational(label[nb]))) return false;
            if (!emit(Rational(static_cast<long>(offset)))) return false;
        }
    }
    return true;
}

} // namespace detail

/// Canonical presentation of the translation-equivalence class of `s`: the
/// Delaunay cells of the surface with its regular points forgotten, labelled
/// by the lexicographically least breadth-first traversal and each anchored
/// with its first edge starting at the origin.
inline TranslationSurface canonical_form(const TranslationSurface& s) {
    const DelaunayCells dc = delaunay_cells(delaunay_triangulation(s));
    detail::CellEncoding best, trial;
    bool have = false;
    for (std::size_t c = 0; c < dc.cells.size(); ++c)
        for (std::size_t r = 0; r < dc.cells[c].size(); ++r) {
            if (!detail::encode_cells(dc, c, r, trial, have ? &best.tokens : nullptr)) continue;
            if (!have || trial.tokens < best.tokens) {
                std::swap(best, trial);
                have = true;
            }
        }

    const std::size_t nc = dc.cells.size();
    std::vector<std::size_t> label(nc);
    for (std::size_t k = 0; k < nc; ++k) label[best.order[k]] = k;
    std::vector<PlanarPolygon> polys(nc);
    for (std::size_t k = 0; k < nc; ++k) {
        const std::size_t c = best.order[k];
        const auto& cycle = dc.cells[c];
        Vec2 p{FieldElem(0, 0, s.radicand()), FieldElem(0, 0, s.radicand())};
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            polys[k].vertices.push_back(p);
            p += dc.tri.edge(cycle[(best.rotation[c] + j) % cycle.size()]);
        }
    }
    auto ref = [&](const HalfEdge& h) {
        const auto [c, idx] = dc.position.at(h);
        const std::size_t m = dc.cells[c].size();
        return EdgeRef{label[c], (idx + m - best.rotation[c]) % m};
    };
    std::vector<std::pair<EdgeRef, EdgeRef>> glue;
    for (const auto& [h, pos] : dc.position) {
        EdgeRef a = ref(h), b = ref(dc.tri.partner(h));
        if (a < b) glue.emplace_back(a, b);
    }
    std::sort(glue.begin(), glue.end());
    return TranslationSurface(s.radicand(), std::move(polys), glue);
}

inline bool is_translation_equivalent(const TranslationSurface& s1, const TranslationSurface& s2) {
    if (s1.radicand() != s2.radicand()) return false;
    if (s1.area() != s2.area()) return false;
    return canonical_form(s1) == canonical_form(s2);
}

/// Edge vectors of minimal length in the Delaunay triangulation, which are
/// exactly the shortest saddle connections (both orientations).
inline std::vector<Vec2> shortest_saddle_connections(const TranslationSurface& s) {
    const Triangulation t = delaunay_triangulation(s);
    std::vector<Vec2> out;
    std::optional<FieldElem> best;
    for (int f = 0; f < static_cast<int>(t.num_triangles()); ++f)
        for (int i = 0; i < 3; ++i) {
            const Vec2& v = t.edge(f, i);
            FieldElem len = norm_sq(v);
            if (!best || len < *best) {
                best = len;
                out.clear();
            }
            if (len == *best && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
    std::sort(out.begin(), out.end(), [](const Vec2& a, const Vec2& b) {
        if (int c = lex_compare(a.x, b.x)) return c < 0;
        return lex_compare(a.y, b.y) < 0;
    });
    return out;
}

namespace detail {

inline bool mat_less(const Mat2& m, const Mat2& n) {
    for (auto [x, y] : {std::pair{&m.a, &n.a}, {&m.b, &n.b}, {&m.c, &n.c}, {&m.d, &n.d}})
        if (int c = lex_compare(*x, *y)) return c < 0;
    return false;
}

} // namespace detail

/// All orthogonal A over the field with A(s) translation-equivalent to s,
/// sorted with rotations first.
inline std::vector<Mat2> euclidean_isometry_group(const TranslationSurface& s) {
    const TranslationSurface canon = canonical_form(s);
    const auto shortest = shortest_saddle_connections(canon);
    std::vector<Mat2> out;
    const Vec2& u = shortest.front();
    for (const auto& w : shortest) {
        const Mat2 rot = rotation_taking(u, w);
        for (const Mat2& cand : {rot, rot * reflection_across(u)}) {
            if (std::find(out.begin(), out.end(), cand) != out.end()) continue;
            if (canonical_form(apply_matrix(cand, canon)) == canon) out.push_back(cand);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Mat2& m, const Mat2& n) {
        const int dm = m.det().sign(), dn = n.det().sign();
        if (dm != dn) return dm > dn;
        return detail::mat_less(m, n);
    });
    return out;
}

/// Group axioms by table: contains I, closed under products and inverses.
inline bool is_group_table_closed(const std::vector<Mat2>& elems) {
    auto has = [&](const Mat2& m) { return std::find(elems.begin(), elems.end(), m) != elems.end(); };
    if (!has(Mat2::identity())) return false;
    for (const auto& g : elems) {
        if (!has(g.inverse())) return false;
        for (const auto& h : elems)
            if (!has(g * h)) return false;
    }
    return true;
}

inline std::size_t element_order(const Mat2& g, std::size_t limit = 1000) {
    Mat2 p = g;
    for (std::size_t k = 1; k <= limit; ++k) {
        if (p == Mat2::identity()) return k;
        p = p * g;
    }
    return 0;
}

/// Dihedral group of the given order: a closed table whose rotations form a
/// cyclic group of half the order and whose other half are involutions.
inline bool is_dihedral(const std::vector<Mat2>& elems, std::size_t order) {
    if (order < 2 || order % 2 != 0 || elems.size() != order || !is_group_table_closed(elems)) return false;
    std::size_t rotations = 0;
    bool cyclic = false;
    for (const auto& g : elems) {
        if (g.det().sign() > 0) {
            ++rotations;
            cyclic = cyclic || element_order(g) == order / 2;
        } else if (element_order(g) != 2) {
            return false;
        }
    }
    return rotations == order / 2 && cyclic;
}

} // namespace veech
