#include <gtest/gtest.h>

#include <veech/hyperbolic.hpp>
#include <veech/parse.hpp>

using namespace veech;

namespace {

const TranslationSurface& s_delta() {
    static const TranslationSurface s = unfold_triangle(1, 4, 7, 12);
    return s;
}

const GeneratorSet& generators() {
    static const GeneratorSet g = build_generators(s_delta());
    return g;
}

const MembershipOracle& oracle() {
    static const MembershipOracle o(s_delta());
    return o;
}

Mat2 M(const char* a, const char* b, const char* c, const char* d) {
    return Mat2(parse_field(a), parse_field(b), parse_field(c), parse_field(d));
}

}  // namespace

TEST(Generators, SeedReflections) {
    EXPECT_EQ(generators().R_AB.m, Mat2(1, 0, 0, -1));
    EXPECT_EQ(generators().R_AE.m, M("sqrt(3)/2", "1/2", "1/2", "-sqrt(3)/2"));
    EXPECT_EQ(generators().minus_I.m, Mat2::minus_identity());
}

TEST(Generators, CompositionsMatchReferenceMatrices) {
    const auto& g = generators();
    EXPECT_EQ(g.R_BC.m, M("1", "-10-6*sqrt(3)", "0", "-1"));
    EXPECT_EQ(g.R_DE.m, M("(-3-sqrt(3))/2", "(13+7*sqrt(3))/2", "(1-sqrt(3))/2", "(3+sqrt(3))/2"));
    EXPECT_EQ(g.R_CD.m, M("5+3*sqrt(3)", "-51-30*sqrt(3)", "1", "-5-3*sqrt(3)"));
    EXPECT_EQ(g.R_BC.m, g.P_B.m * g.R_AB.m);
    EXPECT_EQ(g.R_DE.m, g.R_AE.m * g.P_E.m);
    EXPECT_EQ(g.R_CD.m, g.R_DE.m * g.P_D.m);
}

TEST(Generators, ThirdDirectionIsEigendirectionOfRDE) {
    const auto& g = generators();
    EXPECT_EQ(g.dir_D, Direction::with_slope(parse_field("(-4+3*sqrt(3))/11")));
    EXPECT_EQ(g.R_DE.m * g.dir_D.vector(), -g.dir_D.vector());
}

TEST(Generators, ReflectionStructure) {
    for (const auto& [name, r] : generators().reflections()) {
        EXPECT_EQ(r->m.det(), FieldElem(-1)) << name;
        EXPECT_EQ(r->m.trace(), FieldElem(0)) << name;
        const Mat2 sq = r->m * r->m;
        EXPECT_TRUE(sq == Mat2::identity() || sq == Mat2::minus_identity()) << name;
    }
    const auto& g = generators();
    for (const auto* p : {&g.P_B, &g.P_E, &g.P_D}) {
        EXPECT_EQ(p->m.det(), FieldElem(1));
        EXPECT_EQ(p->m.trace(), FieldElem(2));
    }
    EXPECT_EQ(g.P_B.m * g.dir_B.vector(), g.dir_B.vector());
    EXPECT_EQ(g.P_E.m * g.dir_E.vector(), g.dir_E.vector());
    EXPECT_EQ(g.P_D.m * g.dir_D.vector(), g.dir_D.vector());
}

TEST(Generators, Provenance) {
    const auto& g = generators();
    EXPECT_EQ(g.R_AB.provenance, Provenance::Euclidean);
    EXPECT_EQ(g.P_B.provenance, Provenance::Parabolic);
    EXPECT_EQ(g.R_CD.provenance, Provenance::Composition);
    EXPECT_EQ(g.minus_I.provenance, Provenance::Scalar);
}

TEST(Membership, AllGeneratorsAreMembers) {
    for (const auto& [name, el] : generators().all()) EXPECT_TRUE(oracle().contains(el->m)) << name;
    EXPECT_TRUE(verify_membership(s_delta(), generators().P_B));
}

TEST(Membership, NegativeControls) {
    EXPECT_FALSE(oracle().contains(Mat2(1, 1, 0, 1)));
    EXPECT_FALSE(oracle().contains(Mat2(1, parse_field("5+3*sqrt(3)"), 0, 1)));
    EXPECT_FALSE(oracle().contains(Mat2(2, 0, 0, 1)));  // not unimodular
    EXPECT_FALSE(verify_membership(s_delta(), GroupElement(Mat2(1, 1, 0, 1))));
}

TEST(Membership, GroupElementRejectsNonUnimodular) {
    try {
        GroupElement g(Mat2(2, 0, 0, 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotUnimodular);
    }
}

TEST(RightAngle, ProductOfSideReflections) {
    const auto& g = generators();
    EXPECT_TRUE(right_angle_check(g.R_BC, g.R_CD));
    EXPECT_EQ(g.R_BC.m * g.R_CD.m, M("-5-3*sqrt(3)", "53+30*sqrt(3)", "-1", "5+3*sqrt(3)"));
    EXPECT_FALSE(right_angle_check(g.R_AB, g.R_AB));
    EXPECT_FALSE(right_angle_check(g.R_AB, g.R_AE));
    EXPECT_EQ((g.R_AB.m * g.R_AE.m).trace(), parse_field("sqrt(3)"));
    try {
        (void)right_angle_check(g.P_B, g.R_AB);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAReflection);
    }
}

TEST(Cusps, Invariants) {
    const auto& g = generators();
    const auto b = cusp_invariants(s_delta(), g.dir_B);
    const auto e = cusp_invariants(s_delta(), g.dir_E);
    const auto d = cusp_invariants(s_delta(), g.dir_D);
    EXPECT_EQ(b.modulus_ratio, 2);
    EXPECT_EQ(e.modulus_ratio, 3);
    EXPECT_EQ(d.modulus_ratio, 2);
    EXPECT_EQ(b.width_ratios.back(), parse_field("1+sqrt(3)"));
    EXPECT_EQ(d.width_ratios.back(), parse_field("(1+sqrt(3))/2"));
    EXPECT_FALSE(b == e);
    EXPECT_FALSE(b == d);
    EXPECT_FALSE(e == d);
}

TEST(Cusps, ConjugationConsistency) {
    const auto& g = generators();
    for (const auto& [name, el] : g.all()) {
        const auto image = apply_matrix(el->m, s_delta());
        for (const Direction& dir : {g.dir_B, g.dir_E}) {
            const auto before = cusp_invariants(s_delta(), dir);
            const auto after = cusp_invariants(image, Direction(el->m * dir.vector()));
            EXPECT_EQ(before.modulus_ratio, after.modulus_ratio) << name;
        }
    }
}

TEST(Generators, ConjugateSetOnSPrime) {
    const Mat2 A(1, parse_field("5+3*sqrt(3)"), 0, 1);
    const auto sp = apply_matrix(A, s_delta());
    const auto gp = build_generators(sp, A);
    const auto& g = generators();
    const Mat2 Ainv = A.inverse();
    auto named = g.all();
    auto named_p = gp.all();
    for (std::size_t k = 0; k < named.size(); ++k)
        EXPECT_EQ(named_p[k].second->m, A * named[k].second->m * Ainv) << named[k].first;
}
