#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cylinders.hpp"

namespace veech {

enum class Provenance { Euclidean, Parabolic, Composition, Scalar };

inline std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::Euclidean: return "euclidean";
    case Provenance::Parabolic: return "parabolic";
    case Provenance::Composition: return "composition";
    case Provenance::Scalar: return "scalar";
    }
    return "unknown";
}

/// A candidate element of the Veech group: a matrix of determinant +-1 with
/// a note on how it was obtained.
struct GroupElement {
    Mat2 m;
    Provenance provenance = Provenance::Composition;
    std::string derivation;

    GroupElement() = default;
    GroupElement(Mat2 m_, Provenance p = Provenance::Composition, std::string how = {})
        : m(std::move(m_)), provenance(p), derivation(std::move(how)) {
        if (!is_unimodular(m)) throw Error(ErrorCode::NotUnimodular, "group element " + m.to_string() + " has determinant " +
                                                                         m.det().to_string());
    }

    int det_sign() const { return m.det().sign(); }
    bool is_reflection() const { return det_sign() < 0; }

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
        return GroupElement(g.m * h.m, Provenance::Composition, g.derivation + " * " + h.derivation);
    }
};

/// Membership test against a fixed surface, reusing its canonical form.
class MembershipOracle {
public:
    explicit MembershipOracle(TranslationSurface s) : surface_(std::move(s)), canon_(canonical_form(surface_)) {}

    bool contains(const Mat2& m) const {
        if (!is_unimodular(m)) return false;
        return canonical_form(apply_matrix(m, surface_)) == canon_;
    }
    const TranslationSurface& surface() const { return surface_; }

private:
    TranslationSurface surface_;
    TranslationSurface canon_;
};

inline bool verify_membership(const TranslationSurface& s, const GroupElement& g) {
    return is_translation_equivalent(apply_matrix(g.m, s), s);
}

/// Eigendirection of m for eigenvalue lambda (which must be an eigenvalue).
inline Direction eigendirection(const Mat2& m, const FieldElem& lambda) {
    const Mat2 k = m + (-lambda) * Mat2::identity();
    if (!k.det().is_zero()) throw std::logic_error("not an eigenvalue: " + lambda.to_string());
    if (!k.b.is_zero() || !k.a.is_zero()) return Direction(Vec2{k.b, -k.a});
    if (!k.d.is_zero() || !k.c.is_zero()) return Direction(Vec2{-k.d, k.c});
    return Direction::horizontal();
}

/// Generators of the lattice Veech group for an S_Delta-like surface, named
/// by the sides of the fundamental polygon they reflect in.
struct GeneratorSet {
    GroupElement R_AB, R_AE, R_BC, R_CD, R_DE, minus_I;
    GroupElement P_B, P_E, P_D;
    Direction dir_B = Direction::horizontal();
    Direction dir_E = Direction::horizontal();
    Direction dir_D = Direction::horizontal();

    std::vector<std::pair<std::string, const GroupElement*>> reflections() const {
        return {{"R_AB", &R_AB}, {"R_BC", &R_BC}, {"R_CD", &R_CD}, {"R_DE", &R_DE}, {"R_AE", &R_AE}};
    }
    std::vector<std::pair<std::string, const GroupElement*>> all() const {
        return {{"R_AB", &R_AB}, {"R_AE", &R_AE}, {"R_BC", &R_BC}, {"R_CD", &R_CD}, {"R_DE", &R_DE},
                {"minus_I", &minus_I}, {"P_B", &P_B}, {"P_E", &P_E}, {"P_D", &P_D}};
    }
};

namespace detail {

// Angle of a reflection's axis in [0, pi), when it is a recognized multiple.
inline std::optional<AngleMultiple> axis_angle(const Mat2& r) {
    const Direction axis = eigendirection(r, FieldElem(1));
    auto a = angle_between(Vec2{1, 0}, axis.vector());
    if (!a) return std::nullopt;
    if (a->k >= 1) *a = *a - AngleMultiple::pi_times(1);
    return a;
}

} // namespace detail

/// Seed reflections of the surface read in `frame`: R_AB fixes the frame's
/// horizontal, R_AE is the reflection whose axis makes the smallest positive
/// angle with it. Both come from the Euclidean isometry group of frame^-1(s).
inline std::pair<Mat2, Mat2> seed_reflections(const TranslationSurface& s, const Mat2& frame = Mat2::identity()) {
    const Mat2 inv = frame.inverse();
    const auto group = euclidean_isometry_group(apply_matrix(inv, s));
    std::optional<Mat2> horizontal;
    std::optional<std::pair<AngleMultiple, Mat2>> smallest;
    for (const auto& g : group) {
        if (g.det().sign() > 0) continue;
        auto a = detail::axis_angle(g);
        if (!a) continue;
        if (a->k == 0) horizontal = g;
        else if (!smallest || *a < smallest->first) smallest = std::pair{*a, g};
    }
    if (!horizontal || !smallest)
        throw Error(ErrorCode::MembershipFailed, "surface lacks the two reflection symmetries");
    return {frame * *horizontal * inv, frame * smallest->second * inv};
}

/// Runs the construction of the generators: seeds, the three parabolics and
/// their compositions, each checked with `verify_membership`.
inline GeneratorSet build_generators(const TranslationSurface& s, const Mat2& frame = Mat2::identity(),
                                     long budget = kDefaultBudget) {
    const MembershipOracle oracle(s);
    auto check = [&](const std::string& name, const GroupElement& g) {
        if (!oracle.contains(g.m))
            throw Error(ErrorCode::MembershipFailed, name + " = " + g.m.to_string() + " is not in the Veech group");
    };
    GeneratorSet gen;
    const auto [r_ab, r_ae] = seed_reflections(s, frame);
    gen.R_AB = GroupElement(r_ab, Provenance::Euclidean, "R_AB");
    gen.R_AE = GroupElement(r_ae, Provenance::Euclidean, "R_AE");
    gen.minus_I = GroupElement(Mat2::minus_identity(), Provenance::Scalar, "-I");
    check("R_AB", gen.R_AB);
    check("R_AE", gen.R_AE);
    check("-I", gen.minus_I);

    gen.dir_B = eigendirection(gen.R_AB.m, FieldElem(1));
    gen.P_B = GroupElement(parabolic_for_direction(s, gen.dir_B, budget), Provenance::Parabolic, "P_B");
    gen.R_BC = GroupElement(gen.P_B.m * gen.R_AB.m, Provenance::Composition, "P_B * R_AB");
    check("R_BC", gen.R_BC);

    gen.dir_E = eigendirection(gen.R_AE.m, FieldElem(1));
    gen.P_E = GroupElement(parabolic_for_direction(s, gen.dir_E, budget), Provenance::Parabolic, "P_E");
    gen.R_DE = GroupElement(gen.R_AE.m * gen.P_E.m, Provenance::Composition, "R_AE * P_E");
    check("R_DE", gen.R_DE);

    gen.dir_D = eigendirection(gen.R_DE.m, FieldElem(-1));
    gen.P_D = GroupElement(parabolic_for_direction(s, gen.dir_D, budget), Provenance::Parabolic, "P_D");
    gen.R_CD = GroupElement(gen.R_DE.m * gen.P_D.m, Provenance::Composition, "R_DE * P_D");
    check("R_CD", gen.R_CD);
    return gen;
}

/// Whether the fixed geodesics of two reflections meet at a right angle,
/// i.e. trace(r1 * r2) = 0.
inline bool right_angle_check(const GroupElement& r1, const GroupElement& r2) {
    if (!r1.is_reflection() || !r2.is_reflection())
        throw Error(ErrorCode::NotAReflection, "right-angle check needs two determinant -1 elements");
    return (r1.m * r2.m).trace().is_zero();
}

/// Affine invariants of a parabolic direction.
struct CuspInvariant {
    Rational modulus_ratio;
    std::vector<FieldElem> width_ratios;
    std::vector<long> multipliers;

    friend bool operator==(const CuspInvariant& x, const CuspInvariant& y) {
        return x.modulus_ratio == y.modulus_ratio && x.width_ratios == y.width_ratios;
    }
};

inline CuspInvariant cusp_invariants(const TranslationSurface& s, const Direction& dir, long budget = kDefaultBudget) {
    const auto dec = decompose(s, dir, budget);
    const auto cls = commensurability_class(dec);
    if (!cls) throw Error(ErrorCode::IncommensurableModuli, "moduli in direction " + dir.to_string() + " are incommensurable");
    long lo = cls->multipliers.front(), hi = lo;
    for (long m : cls->multipliers) {
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    Rational ratio(hi, lo);
    ratio.canonicalize();
    return {ratio, width_ratio_invariant(dec), cls->multipliers};
}

} // namespace veech
