#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"

namespace veech {

inline constexpr long kDefaultBudget = 10000;

/// Projective direction, normalized so its first nonzero coordinate is 1.
class Direction {
public:
    explicit Direction(Vec2 v) : v_(std::move(v)) {
        if (v_.is_zero()) throw Error(ErrorCode::ZeroDirection, "direction vector is zero");
        const FieldElem lead = v_.x.is_zero() ? v_.y : v_.x;
        v_ = Vec2{v_.x / lead, v_.y / lead};
    }
    static Direction horizontal() { return Direction(Vec2{1, 0}); }
    static Direction with_slope(const FieldElem& s) { return Direction(Vec2{1, s}); }

    const Vec2& vector() const { return v_; }
    bool is_vertical() const { return v_.x.is_zero(); }
    std::optional<FieldElem> slope() const {
        if (is_vertical()) return std::nullopt;
        return v_.y;
    }

    /// Unimodular map sending this direction to (1, 0).
    Mat2 to_horizontal() const {
        if (is_vertical()) return Mat2(0, 1, -1, 0);
        return Mat2(1, 0, -v_.y, 1);
    }

    friend bool operator==(const Direction&, const Direction&) = default;
    std::string to_string() const { return v_.to_string(); }

private:
    Vec2 v_;
};

/// A maximal cylinder. Circumference and height are measured after the
/// direction is sheared to horizontal (circumference in units of the
/// normalized direction vector), so circumference * height is the area.
/// `modulus` is the Euclidean modulus (height / circumference of the actual
/// cylinder), which equals height / (circumference * |v|^2).
struct Cylinder {
    FieldElem circumference;
    FieldElem height;
    FieldElem modulus;
    long boundary_saddle_connections = 0;

    FieldElem area() const { return circumference * height; }
};

/// Horizontal saddle connection in the sheared frame.
struct SaddleConnection {
    HalfEdge start;     // corner of the starting vertex
    FieldElem length;   // horizontal length in the sheared frame
    long crossings = 0; // triangle edges crossed
};

struct CylinderDecomposition {
    Direction direction = Direction::horizontal();
    FieldElem direction_norm_sq{1};
    std::vector<Cylinder> cylinders;
    std::vector<SaddleConnection> saddle_connections;

    std::vector<FieldElem> moduli() const {
        std::vector<FieldElem> out;
        for (const auto& c : cylinders) out.push_back(c.modulus);
        return out;
    }
};

namespace detail {

// Exact horizontal decomposition of a triangulation whose vertices are all stop points.
class HorizontalDecomposer {
public:
    HorizontalDecomposer(const Triangulation& t, long budget) : t_(t), budget_(budget), levels_(t.num_triangles()) {}

    void trace_all() {
        for (int f = 0; f < static_cast<int>(t_.num_triangles()); ++f)
            for (int i = 0; i < 3; ++i) {
                HalfEdge c{f, i};
                if (t_.corner_contains(c, Vec2{1, 0})) trace(c);
            }
    }

    std::vector<Cylinder> cylinders() {
        build_slabs();
        const std::size_t n = slabs_.size();
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        for (const auto& [a, b, shift] : adjacency_) parent[find(a)] = find(b);

        std::map<std::size_t, std::size_t> comp_index;
        std::vector<std::vector<std::size_t>> comps;
        for (std::size_t k = 0; k < n; ++k) {
            auto [it, fresh] = comp_index.emplace(find(k), comps.size());
            if (fresh) comps.emplace_back();
            comps[it->second].push_back(k);
        }

        // Height coordinate inside each cylinder, propagated across edges.
        std::vector<std::vector<std::pair<std::size_t, FieldElem>>> nbrs(n);
        for (const auto& [a, b, shift] : adjacency_) {
            nbrs[a].emplace_back(b, shift);
            nbrs[b].emplace_back(a, -shift);
        }
        std::vector<std::optional<FieldElem>> offset(n);
        std::vector<Cylinder> out;
        std::vector<std::size_t> comp_of(n);
        for (std::size_t ci = 0; ci < comps.size(); ++ci) {
            const auto& comp = comps[ci];
            for (std::size_t k : comp) comp_of[k] = ci;
            offset[comp.front()] = FieldElem(0);
            std::vector<std::size_t> queue{comp.front()};
            for (std::size_t q = 0; q < queue.size(); ++q) {
                const std::size_t a = queue[q];
                for (const auto& [b, shift] : nbrs[a]) {
                    // y_b = y_a + shift on the shared edge, so offset_b = offset_a - shift.
                    FieldElem want = *offset[a] - shift;
                    if (!offset[b]) {
                        offset[b] = want;
                        queue.push_back(b);
                    } else if (*offset[b] != want) {
                        throw std::logic_error("inconsistent height coordinate inside a cylinder");
                    }
                }
            }
            FieldElem area, lo = slabs_[comp.front()].bottom + *offset[comp.front()], hi = lo;
            for (std::size_t k : comp) {
                area += slabs_[k].area;
                FieldElem b = slabs_[k].bottom + *offset[k], t = slabs_[k].top + *offset[k];
                if (b < lo) lo = b;
                if (t > hi) hi = t;
            }
            Cylinder cyl;
            cyl.height = hi - lo;
            cyl.circumference = area / cyl.height;
            out.push_back(cyl);
        }

        // Boundary saddle connections and a circumference cross-check.
        std::vector<FieldElem> bottom_length(out.size()), top_length(out.size());
        for (const auto& sc : bounds_) {
            const std::size_t above = comp_of[slab_at(sc.above_tri, sc.above_level, true)];
            const std::size_t below = comp_of[slab_at(sc.below_tri, sc.below_level, false)];
            ++out[above].boundary_saddle_connections;
            ++out[below].boundary_saddle_connections;
            bottom_length[above] += saddles_[sc.saddle].length;
            top_length[below] += saddles_[sc.saddle].length;
        }
        for (std::size_t k = 0; k < out.size(); ++k)
            if (bottom_length[k] != out[k].circumference || top_length[k] != out[k].circumference)
                throw std::logic_error("cylinder boundary length disagrees with its circumference");
        return out;
    }

    const std::vector<SaddleConnection>& saddles() const { return saddles_; }

private:
    struct Slab {
        int tri;
        FieldElem bottom, top, area;
    };
    struct Bound {
        std::size_t saddle;
        int above_tri;
        FieldElem above_level;
        int below_tri;
        FieldElem below_level;
    };

    // Point on side e of triangle f at parameter lambda from the side's start.
    Vec2 on_side(int f, int e, const FieldElem& lambda) const {
        return t_.vertex(f, e) + lambda * t_.edge(f, e);
    }

    void add_level(int f, const FieldElem& y) {
        auto& lv = levels_[static_cast<std::size_t>(f)];
        if (std::find(lv.begin(), lv.end(), y) == lv.end()) lv.push_back(y);
    }

    void trace(const HalfEdge& corner) {
        SaddleConnection sc{corner, FieldElem(0), 0};
        const std::size_t index = saddles_.size();
        const int f0 = corner.tri, i0 = corner.side;
        const Vec2 start = t_.vertex(f0, i0);
        if (t_.edge(corner).y.is_zero()) {
            // Runs along a horizontal side; the triangle lies above it.
            sc.length = t_.edge(corner).x;
            const HalfEdge g = t_.partner(corner);
            saddles_.push_back(sc);
            bounds_.push_back({index, f0, start.y, g.tri, t_.vertex(g.tri, g.side).y});
            return;
        }
        add_level(f0, start.y);
        bounds_.push_back({index, f0, start.y, f0, start.y});
        // Leave through the opposite side.
        int f = f0, e = (i0 + 1) % 3;
        Vec2 p = start;
        for (;;) {
            const Vec2 a = t_.vertex(f, e), b = t_.vertex(f, e + 1);
            const FieldElem lambda = (p.y - a.y) / (b.y - a.y);
            const Vec2 exit = on_side(f, e, lambda);
            sc.length += exit.x - p.x;
            if (++sc.crossings > budget_)
                throw Error(ErrorCode::BudgetExceeded,
                            "separatrix did not close within " + std::to_string(budget_) + " crossings (undetermined)");
            const HalfEdge g = t_.partner(HalfEdge{f, e});
            f = g.tri;
            const int entry = g.side;
            p = on_side(f, entry, FieldElem(1) - lambda);
            const Vec2 apex = t_.vertex(f, entry + 2);
            if (apex.y == p.y) {
                sc.length += apex.x - p.x;
                add_level(f, p.y);
                break;
            }
            add_level(f, p.y);
            const Vec2 b2 = t_.vertex(f, entry + 1);
            const bool via_next = (p.y - b2.y).sign() * (p.y - apex.y).sign() < 0;
            e = via_next ? (entry + 1) % 3 : (entry + 2) % 3;
        }
        saddles_.push_back(sc);
    }

    // Width of the horizontal chord of triangle f at height y.
    FieldElem chord(int f, const FieldElem& y) const {
        std::vector<FieldElem> xs;
        for (int e = 0; e < 3; ++e) {
            const Vec2 a = t_.vertex(f, e), b = t_.vertex(f, e + 1);
            if (a.y == b.y) {
                if (a.y == y) return abs(b.x - a.x);
                continue;
            }
            FieldElem lo = a.y < b.y ? a.y : b.y, hi = a.y < b.y ? b.y : a.y;
            if (y < lo || y > hi) continue;
            xs.push_back(a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x));
        }
        FieldElem mn = xs.front(), mx = xs.front();
        for (const auto& x : xs) {
            if (x < mn) mn = x;
            if (x > mx) mx = x;
        }
        return mx - mn;
    }

    void build_slabs() {
        slabs_.clear();
        first_slab_.assign(t_.num_triangles(), 0);
        for (int f = 0; f < static_cast<int>(t_.num_triangles()); ++f) {
            auto lv = levels_[static_cast<std::size_t>(f)];
            for (int i = 0; i < 3; ++i) {
                const FieldElem y = t_.vertex(f, i).y;
                if (std::find(lv.begin(), lv.end(), y) == lv.end()) lv.push_back(y);
            }
            std::sort(lv.begin(), lv.end());
            levels_[static_cast<std::size_t>(f)] = lv;
            first_slab_[static_cast<std::size_t>(f)] = slabs_.size();
            for (std::size_t k = 0; k + 1 < lv.size(); ++k) {
                const FieldElem area = (chord(f, lv[k]) + chord(f, lv[k + 1])) * (lv[k + 1] - lv[k]) / 2;
                slabs_.push_back({f, lv[k], lv[k + 1], area});
            }
        }
        adjacency_.clear();
        for (int f = 0; f < static_cast<int>(t_.num_triangles()); ++f)
            for (int e = 0; e < 3; ++e) {
                const HalfEdge h{f, e}, g = t_.partner(h);
                if (t_.edge(h).y.is_zero() || g < h) continue;
                // Start of h is the end of g.
                const FieldElem shift = t_.vertex(g.tri, g.side + 1).y - t_.vertex(f, e).y;
                const FieldElem y0 = t_.vertex(f, e).y, y1 = t_.vertex(f, e + 1).y;
                const FieldElem lo = y0 < y1 ? y0 : y1, hi = y0 < y1 ? y1 : y0;
                for (std::size_t a = slab_begin(f); a < slab_end(f); ++a) {
                    if (slabs_[a].bottom < lo || slabs_[a].top > hi) continue;
                    for (std::size_t b = slab_begin(g.tri); b < slab_end(g.tri); ++b) {
                        const FieldElem bl = slabs_[b].bottom - shift, bt = slabs_[b].top - shift;
                        const FieldElem ol = bl > slabs_[a].bottom ? bl : slabs_[a].bottom;
                        const FieldElem ot = bt < slabs_[a].top ? bt : slabs_[a].top;
                        if (ot > ol) adjacency_.push_back({a, b, shift});
                    }
                }
            }
    }

    std::size_t slab_begin(int f) const { return first_slab_[static_cast<std::size_t>(f)]; }
    std::size_t slab_end(int f) const {
        return static_cast<std::size_t>(f) + 1 < first_slab_.size() ? first_slab_[static_cast<std::size_t>(f) + 1]
                                                                   : slabs_.size();
    }

    // Slab of triangle f whose bottom (or top) is level y.
    std::size_t slab_at(int f, const FieldElem& y, bool bottom) const {
        for (std::size_t k = slab_begin(f); k < slab_end(f); ++k)
            if ((bottom ? slabs_[k].bottom : slabs_[k].top) == y) return k;
        throw std::logic_error("no slab at a saddle connection level");
    }

    struct Adjacent {
        std::size_t a, b;
        FieldElem shift;
    };

    const Triangulation& t_;
    long budget_;
    std::vector<std::vector<FieldElem>> levels_;
    std::vector<SaddleConnection> saddles_;
    std::vector<Bound> bounds_;
    std::vector<Slab> slabs_;
    std::vector<std::size_t> first_slab_;
    std::vector<Adjacent> adjacency_;
};

} // namespace detail

/// Cylinder decomposition in direction `dir`, found by tracing every
/// separatrix in that direction until it reaches a cone point.
inline CylinderDecomposition decompose(const TranslationSurface& s, const Direction& dir, long budget = kDefaultBudget) {
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    const Triangulation sheared = delaunay_triangulation(s).transformed(dir.to_horizontal());
    detail::HorizontalDecomposer dec(sheared, budget);
    dec.trace_all();
    CylinderDecomposition out;
    out.direction = dir;
    out.direction_norm_sq = norm_sq(dir.vector());
    out.cylinders = dec.cylinders();
    out.saddle_connections = dec.saddles();
    for (auto& c : out.cylinders) c.modulus = c.height / (c.circumference * out.direction_norm_sq);
    std::sort(out.cylinders.begin(), out.cylinders.end(), [](const Cylinder& x, const Cylinder& y) {
        if (x.modulus != y.modulus) return x.modulus > y.modulus;
        return x.circumference < y.circumference;
    });
    return out;
}

/// Greatest common divisor of commensurable moduli.
struct Commensurability {
    FieldElem gcd;
    std::vector<long> multipliers;  // modulus_i / gcd, in cylinder order
};

inline std::optional<Commensurability> commensurability_class(const CylinderDecomposition& dec) {
    if (dec.cylinders.empty()) throw std::logic_error("empty decomposition");
    const FieldElem& m1 = dec.cylinders.front().modulus;
    std::vector<Rational> ratios;
    for (const auto& c : dec.cylinders) {
        auto r = is_rational_ratio(c.modulus, m1);
        if (!r) return std::nullopt;
        ratios.push_back(*r);
    }
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& r : ratios) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num_mpz_t());
    }
    Rational x(den_lcm, num_gcd);
    x.canonicalize();
    Commensurability out{m1 / FieldElem(x), {}};
    for (const auto& r : ratios) {
        Rational k = r * x;
        out.multipliers.push_back(k.get_num().get_si());
    }
    return out;
}

/// The shear I + k * v (-v_y, v_x)^T fixing v, with k = (1/alpha) / |v|^2.
inline Mat2 parabolic_from_gcd(const Direction& dir, const FieldElem& alpha) {
    const Vec2& v = dir.vector();
    const FieldElem k = alpha.inverse() / norm_sq(v);
    return Mat2::identity() + k * Mat2(-v.x * v.y, v.x * v.x, -v.y * v.y, v.x * v.y);
}

/// Generating parabolic of the direction, verified to lie in the Veech group.
inline Mat2 parabolic_for_direction(const TranslationSurface& s, const Direction& dir, long budget = kDefaultBudget) {
    CylinderDecomposition dec;
    try {
        dec = decompose(s, dir, budget);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        throw Error(ErrorCode::NotParallelDecomposable,
                    "no cylinder decomposition in direction " + dir.to_string() + " within budget");
    }
    auto cls = commensurability_class(dec);
    if (!cls) throw Error(ErrorCode::IncommensurableModuli, "moduli in direction " + dir.to_string() + " are incommensurable");
    const Mat2 p = parabolic_from_gcd(dir, cls->gcd);
    if (!is_translation_equivalent(apply_matrix(p, s), s))
        throw Error(ErrorCode::MembershipFailed, "parabolic " + p.to_string() + " does not preserve the surface");
    return p;
}

/// Sorted ratios max/min of cylinder widths (heights across the cylinders)
/// over all pairs; {1} for a single cylinder. Heights in one direction scale
/// uniformly under affine maps, so these ratios are affine invariants.
inline std::vector<FieldElem> width_ratio_invariant(const CylinderDecomposition& dec) {
    if (dec.cylinders.empty()) throw std::logic_error("empty decomposition");
    const auto& cs = dec.cylinders;
    if (cs.size() == 1) return {FieldElem(1)};
    std::vector<FieldElem> out;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            const FieldElem &a = cs[i].height, &b = cs[j].height;
            out.push_back(a > b ? a / b : b / a);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace veech
