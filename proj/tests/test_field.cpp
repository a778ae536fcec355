#include <gtest/gtest.h>

#include <random>

#include <veech/angle.hpp>
#include <veech/parse.hpp>

using namespace veech;

namespace {

FieldElem F(const char* s) { return parse_field(s); }

}  // namespace

TEST(Field, ConjugateProduct) { EXPECT_EQ(F("1+sqrt(3)") * F("1-sqrt(3)"), FieldElem(-2)); }

TEST(Field, InverseOfFivePlusThreeRootThree) {
    const FieldElem x = F("5+3*sqrt(3)");
    EXPECT_EQ(x * (FieldElem(1) / x), FieldElem(1));
    EXPECT_EQ(x.inverse(), F("-5/2+3/2*sqrt(3)"));
}

TEST(Field, HorizontalModuliQuotientIsTwo) { EXPECT_EQ(F("10+6*sqrt(3)") / F("5+3*sqrt(3)"), FieldElem(2)); }

TEST(Field, DivisionByZeroThrows) {
    try {
        (void)(FieldElem(1) / FieldElem(0));
        FAIL() << "expected DivisionByZero";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
}

TEST(Field, SignIsExact) {
    EXPECT_EQ(FieldElem(0).sign(), 0);
    EXPECT_EQ(F("-4+3*sqrt(3)").sign(), 1);
    EXPECT_EQ(F("1-sqrt(3)").sign(), -1);
    EXPECT_EQ(F("-7+4*sqrt(3)").sign(), -1);  // 48 < 49
    EXPECT_EQ(F("7-4*sqrt(3)").sign(), 1);
    // 97^2 = 9409 and 3 * 56^2 = 9408: a near cancellation.
    EXPECT_EQ(F("97-56*sqrt(3)").sign(), 1);
    EXPECT_EQ(F("-97+56*sqrt(3)").sign(), -1);
}

TEST(Field, RationalCoefficientsAreReduced) {
    const FieldElem x(make_rational(6, 4), make_rational(-10, 20));
    EXPECT_EQ(x.a(), make_rational(3, 2));
    EXPECT_EQ(x.b(), make_rational(-1, 2));
    EXPECT_EQ(x.a().get_den(), 2);
}

TEST(Field, ArbitraryPrecision) {
    FieldElem x = F("2+sqrt(3)");
    FieldElem p(1);
    for (int i = 0; i < 200; ++i) p *= x;
    // (2+sqrt3)^200 (2-sqrt3)^200 = 1, far beyond 64-bit coefficients.
    FieldElem q(1);
    for (int i = 0; i < 200; ++i) q *= x.conjugate();
    EXPECT_EQ(p * q, FieldElem(1));
    EXPECT_GT(p.a().get_num().get_str().size(), 100u);
}

TEST(Field, RationalRatio) {
    auto r = is_rational_ratio(F("1/(5+3*sqrt(3))"), F("1/(10+6*sqrt(3))"));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, 2);
    r = is_rational_ratio(F("3/(6+4*sqrt(3))"), F("1/(6+4*sqrt(3))"));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, 3);
    EXPECT_FALSE(is_rational_ratio(F("1+sqrt(3)"), FieldElem(2)));
    EXPECT_THROW((void)is_rational_ratio(FieldElem(1), FieldElem(0)), Error);
}

TEST(Field, RationalRatioRoundTrip) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> k(-9, 9), den(1, 9);
    for (int i = 0; i < 200; ++i) {
        const FieldElem y(make_rational(k(rng), den(rng)), make_rational(k(rng), den(rng)));
        if (y.is_zero()) continue;
        const Rational r = make_rational(k(rng), den(rng));
        const auto got = is_rational_ratio(FieldElem(r) * y, y);
        ASSERT_TRUE(got);
        EXPECT_EQ(FieldElem(*got) * y, FieldElem(r) * y);
    }
}

TEST(Field, FieldSqrt) {
    auto r = field_sqrt(F("4+2*sqrt(3)"));
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, F("1+sqrt(3)"));
    EXPECT_FALSE(field_sqrt(FieldElem(2)));
    EXPECT_FALSE(field_sqrt(FieldElem(-1)));
}

TEST(Field, StringRoundTrip) {
    for (const char* s : {"0", "5+3*sqrt(3)", "-1/2*sqrt(3)", "7/11", "-4/11+3/11*sqrt(3)", "sqrt(3)"}) {
        const FieldElem x = F(s);
        EXPECT_EQ(parse_field(x.to_string()), x) << s;
    }
    EXPECT_EQ(F("5+3*sqrt(3)").to_string(), "5+3*sqrt(3)");
    EXPECT_EQ(F("-sqrt(3)/2").to_string(), "-1/2*sqrt(3)");
}

TEST(Field, ApproximateIsOnlyAnEmbedding) {
    EXPECT_NEAR(F("2-sqrt(3)").approximate(), 0.2679491924311227, 1e-15);
}

TEST(Mat2, ReferenceMatrixAlgebra) {
    const Mat2 R_BC(1, F("-10-6*sqrt(3)"), 0, -1);
    const Mat2 R_CD(F("5+3*sqrt(3)"), F("-51-30*sqrt(3)"), 1, F("-5-3*sqrt(3)"));
    EXPECT_EQ(mat_trace(R_BC * R_CD), FieldElem(0));
    EXPECT_EQ(mat_det(Mat2(1, 0, 0, -1)), FieldElem(-1));
    EXPECT_EQ(Mat2::identity() * Mat2::identity(), Mat2::identity());
    EXPECT_EQ(mat_inv(R_CD) * R_CD, Mat2::identity());
}

TEST(Mat2, SingularInverseThrows) {
    try {
        (void)mat_inv(Mat2(1, 2, 2, 4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
    }
}

TEST(Mat2, TraceAndDeterminantIdentities) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> k(-6, 6), den(1, 5);
    auto f = [&] { return FieldElem(make_rational(k(rng), den(rng)), make_rational(k(rng), den(rng))); };
    for (int i = 0; i < 300; ++i) {
        const Mat2 a(f(), f(), f(), f()), b(f(), f(), f(), f());
        EXPECT_EQ((a * b).trace(), (b * a).trace());
        EXPECT_EQ((a * b).det(), a.det() * b.det());
        const FieldElem x = f(), y = f();
        EXPECT_EQ((x * y).sign(), x.sign() * y.sign());
    }
}

TEST(Angle, TwelfthDirectionsRecognized) {
    for (long j = 0; j < 24; ++j) {
        const AngleMultiple a = AngleMultiple::pi_times(j, 12);
        const auto v = direction_at(a);
        ASSERT_TRUE(v) << j;
        const auto back = angle_between(Vec2{1, 0}, *v);
        ASSERT_TRUE(back) << j;
        EXPECT_EQ(*back, a) << j;
    }
    EXPECT_FALSE(direction_at(AngleMultiple::pi_times(1, 5)));
}

TEST(Angle, Printing) {
    EXPECT_EQ(AngleMultiple::pi_times(14, 3).to_string(), "14/3*pi");
    EXPECT_EQ(AngleMultiple::pi_times(1).to_string(), "pi");
    EXPECT_EQ(AngleMultiple().to_string(), "0");
}
