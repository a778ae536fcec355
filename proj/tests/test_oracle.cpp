#include <gtest/gtest.h>

#include <numeric>

#include <veech/parse.hpp>

#include "support/properties.hpp"

using namespace veech;

TEST(Oracle, ReferenceDirections) {
    const auto& s = props::unfolded(0);
    for (const char* slope : {"0", "2-sqrt(3)", "(-4+3*sqrt(3))/11"}) {
        const Direction d = Direction::with_slope(parse_field(slope));
        EXPECT_EQ(props::oracle_mismatch(s, d), "") << slope;
    }
}

TEST(Oracle, SquareTorus) {
    const auto torus = square_torus();
    const auto h = oracle::float_decompose(torus, 1, 0);
    ASSERT_EQ(h.size(), 1u);
    EXPECT_NEAR(h[0].modulus(), 1.0, 1e-12);
    const auto d = oracle::float_decompose(torus, 1, 2);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_NEAR(d[0].modulus(), 0.2, 1e-12);
}

TEST(Oracle, RandomPeriodicDirectionsOnTarget) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10; ++i) {
        const Direction d = props::random_saddle_direction(props::unfolded(0), rng);
        EXPECT_EQ(props::oracle_mismatch(props::unfolded(0), d), "");
    }
}

TEST(Oracle, RandomPeriodicDirectionsOnOtherSurfaces) {
    std::mt19937_64 rng(77);
    for (std::size_t k = 1; k < props::lattice_triangles().size(); ++k)
        for (int i = 0; i < 5; ++i) {
            const Direction d = props::random_saddle_direction(props::unfolded(k), rng);
            EXPECT_EQ(props::oracle_mismatch(props::unfolded(k), d), "") << "surface " << k;
        }
}

TEST(Oracle, AreaAgreesWithSurface) {
    const auto& s = props::unfolded(0);
    double total = 0;
    for (const auto& c : oracle::float_decompose(s, 1, 0)) total += c.circumference * c.height;
    EXPECT_NEAR(total, s.area().approximate(), 1e-9);
}
