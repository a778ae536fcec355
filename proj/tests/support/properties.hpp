#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary. Each check runs a fixed number of seeded cases and reports the
// number of failures with a description of the first one.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <veech/hyperbolic.hpp>

#include "../oracle/float_decomposer.hpp"

namespace props {

using namespace veech;

struct Outcome {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
    bool ok() const { return failures == 0 && cases > 0; }
};

/// Triangles with the lattice property whose unfoldings live over Q(sqrt 3)
/// or Q, small enough for many random cases.
inline const std::vector<std::array<long, 4>>& lattice_triangles() {
    static const std::vector<std::array<long, 4>> list{
        {1, 4, 7, 12}, {1, 1, 2, 4}, {1, 1, 1, 3}, {1, 2, 3, 6}, {1, 1, 4, 6}, {1, 5, 6, 12}, {3, 4, 5, 12}, {1, 2, 9, 12}};
    return list;
}

inline const TranslationSurface& unfolded(std::size_t k) {
    static std::map<std::size_t, TranslationSurface> cache;
    auto it = cache.find(k);
    if (it == cache.end()) {
        const auto& t = lattice_triangles().at(k);
        it = cache.emplace(k, unfold_triangle(t[0], t[1], t[2], t[3])).first;
    }
    return it->second;
}

inline Rational random_rational(std::mt19937_64& rng, long range = 20, long max_den = 9) {
    std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
    return make_rational(num(rng), den(rng));
}

inline FieldElem random_field(std::mt19937_64& rng) {
    return FieldElem(random_rational(rng), random_rational(rng));
}

/// A saddle connection direction: an edge of a randomly flipped triangulation
/// whose vertices are the cone points.
inline Direction random_saddle_direction(const TranslationSurface& s, std::mt19937_64& rng, int flips = 6) {
    Triangulation t = delaunay_triangulation(s);
    std::uniform_int_distribution<int> tri(0, static_cast<int>(t.num_triangles()) - 1), side(0, 2);
    for (int k = 0; k < flips; ++k) {
        const HalfEdge h{tri(rng), side(rng)};
        if (t.is_flippable(h)) t.flip(h);
    }
    return Direction(t.edge(HalfEdge{tri(rng), side(rng)}));
}

inline Outcome field_axioms(int cases, unsigned seed) {
    std::mt19937_64 rng(seed);
    Outcome out;
    for (int i = 0; i < cases; ++i, ++out.cases) {
        const FieldElem a = random_field(rng), b = random_field(rng), c = random_field(rng);
        const std::string tag = "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
        if (a + b != b + a || a * b != b * a) out.fail("commutativity: " + tag);
        if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) out.fail("associativity: " + tag);
        if (a * (b + c) != a * b + a * c) out.fail("distributivity: " + tag);
        if (a + FieldElem(0) != a || a * FieldElem(1) != a || a - a != FieldElem(0)) out.fail("identities: " + tag);
        if (!a.is_zero() && a * a.inverse() != FieldElem(1)) out.fail("inverse: " + tag);
        if (!b.is_zero() && (a / b) * b != a) out.fail("division: " + tag);
        if ((a < b) && !(a + c < b + c)) out.fail("order and addition: " + tag);
        if (a.sign() > 0 && b.sign() > 0 && (a * b).sign() <= 0) out.fail("order and product: " + tag);
        const double approx = a.approximate() * b.approximate();
        if (std::abs((a * b).approximate() - approx) > 1e-9 * (1 + std::abs(approx))) out.fail("embedding: " + tag);
    }
    return out;
}

/// Sum of cylinder areas equals the surface area, in random saddle directions
/// on random lattice surfaces.
inline Outcome area_conservation(int cases, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(1, lattice_triangles().size() - 1);
    Outcome out;
    for (int i = 0; i < cases; ++i, ++out.cases) {
        // Every tenth case uses the large (1,4,7)/12 surface.
        const std::size_t k = i % 10 == 0 ? 0 : pick(rng);
        const TranslationSurface& s = unfolded(k);
        const Direction dir = random_saddle_direction(s, rng);
        try {
            const auto dec = decompose(s, dir);
            FieldElem total(0);
            for (const auto& c : dec.cylinders) {
                if (c.circumference.sign() <= 0 || c.height.sign() <= 0) out.fail("degenerate cylinder");
                total += c.area();
            }
            if (total != s.area())
                out.fail("surface " + std::to_string(k) + " direction " + dir.to_string() + ": " + total.to_string() +
                         " != " + s.area().to_string());
        } catch (const std::exception& e) {
            out.fail("surface " + std::to_string(k) + " direction " + dir.to_string() + ": " + e.what());
        }
    }
    return out;
}

inline TranslationSurface random_cut_and_paste(const TranslationSurface& s, std::mt19937_64& rng, int moves) {
    TranslationSurface cur = s;
    std::uniform_int_distribution<int> kind(0, 3);
    for (int m = 0; m < moves; ++m) {
        std::uniform_int_distribution<std::size_t> poly(0, cur.num_polygons() - 1);
        const std::size_t p = poly(rng);
        try {
            switch (kind(rng)) {
            case 0:
                cur = translate_polygon(cur, p, Vec2{random_field(rng), random_field(rng)});
                break;
            case 1: {
                std::vector<std::size_t> order(cur.num_polygons()), shift(cur.num_polygons());
                std::iota(order.begin(), order.end(), 0);
                std::shuffle(order.begin(), order.end(), rng);
                for (std::size_t i = 0; i < shift.size(); ++i)
                    shift[i] = std::uniform_int_distribution<std::size_t>(0, cur.polygon(order[i]).size() - 1)(rng);
                cur = relabel(cur, order, shift);
                break;
            }
            case 2: {
                const std::size_t n = cur.polygon(p).size();
                if (n < 4) break;
                const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 3)(rng);
                const std::size_t j = std::uniform_int_distribution<std::size_t>(i + 2, n - 1)(rng);
                if (i == 0 && j == n - 1) break;
                cur = split_polygon(cur, p, i, j);
                break;
            }
            default: {
                const std::size_t e = std::uniform_int_distribution<std::size_t>(0, cur.polygon(p).size() - 1)(rng);
                cur = merge_polygons(cur, EdgeRef{p, e});
                break;
            }
            }
        } catch (const Error&) {
            // A cut or merge that is not geometrically possible is skipped.
        }
    }
    return cur;
}

/// canonical_form is idempotent and blind to relabelling, translation and
/// cutting or gluing along saddle connections.
inline Outcome canonical_invariance(int cases, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, lattice_triangles().size() - 1);
    std::map<std::size_t, TranslationSurface> canon;
    Outcome out;
    for (int i = 0; i < cases; ++i, ++out.cases) {
        const std::size_t k = pick(rng);
        const TranslationSurface& s = unfolded(k);
        auto it = canon.find(k);
        if (it == canon.end()) it = canon.emplace(k, canonical_form(s)).first;
        const TranslationSurface moved = random_cut_and_paste(s, rng, 8);
        const TranslationSurface c = canonical_form(moved);
        if (c != it->second) out.fail("surface " + std::to_string(k) + ": canonical form changed after cut and paste");
        if (i % 4 == 0 && canonical_form(c) != c) out.fail("surface " + std::to_string(k) + ": not idempotent");
    }
    return out;
}

inline Mat2 random_unimodular(std::mt19937_64& rng) {
    Mat2 m = Mat2::identity();
    std::uniform_int_distribution<int> kind(0, 3);
    for (int k = 0; k < 4; ++k) {
        const FieldElem q = random_field(rng) / 4;
        switch (kind(rng)) {
        case 0: m = m * Mat2(1, q, 0, 1); break;
        case 1: m = m * Mat2(1, 0, q, 1); break;
        case 2: m = m * Mat2(-1, 0, 0, 1); break;
        default: {
            const FieldElem r = q.is_zero() ? FieldElem(1) : q;
            m = m * Mat2(r, 0, 0, r.inverse());
        }
        }
    }
    return m;
}

/// (g h) z = g (h z) for random g, h of determinant +-1 and random z.
inline Outcome moebius_action(int cases, unsigned seed) {
    std::mt19937_64 rng(seed);
    Outcome out;
    for (int i = 0; i < cases; ++i, ++out.cases) {
        const Mat2 g = random_unimodular(rng), h = random_unimodular(rng);
        FieldElem im = abs(random_field(rng));
        if (im.is_zero()) im = FieldElem(1);
        const UHPoint z(random_field(rng), im);
        const BoundaryPoint x = i % 3 == 0 ? BoundaryPoint::infinity() : BoundaryPoint::at(random_field(rng));
        if (moebius_apply(g * h, z) != moebius_apply(g, moebius_apply(h, z)))
            out.fail("interior point: g=" + g.to_string() + " h=" + h.to_string() + " z=" + z.to_string());
        if (moebius_apply(g * h, x) != moebius_apply(g, moebius_apply(h, x)))
            out.fail("boundary point: g=" + g.to_string() + " h=" + h.to_string() + " x=" + x.to_string());
        if (moebius_apply(Mat2::identity(), z) != z) out.fail("identity");
    }
    return out;
}

/// Exact decomposition against the floating-point oracle: equal cylinder
/// counts and moduli within `rel_tol` after sorting.
inline std::string oracle_mismatch(const TranslationSurface& s, const Direction& dir, double rel_tol = 1e-9) {
    const auto exact = decompose(s, dir);
    const auto approx =
        oracle::float_decompose(s, dir.vector().x.approximate(), dir.vector().y.approximate());
    if (exact.cylinders.size() != approx.size())
        return "direction " + dir.to_string() + ": " + std::to_string(exact.cylinders.size()) + " exact cylinders, " +
               std::to_string(approx.size()) + " oracle cylinders";
    std::vector<double> a, b;
    for (const auto& c : exact.cylinders) a.push_back(c.modulus.approximate());
    for (const auto& c : approx) b.push_back(c.modulus());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < a.size(); ++k)
        if (std::abs(a[k] - b[k]) > rel_tol * std::abs(a[k]))
            return "direction " + dir.to_string() + ": modulus " + std::to_string(a[k]) + " vs oracle " +
                   std::to_string(b[k]);
    return {};
}

} // namespace props
