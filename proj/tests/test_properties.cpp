#include <gtest/gtest.h>

#include <numeric>

#include "support/properties.hpp"

namespace {

constexpr int kCases = 1000;

void expect_clean(const props::Outcome& o) {
    EXPECT_EQ(o.cases, kCases);
    EXPECT_EQ(o.failures, 0) << o.first_failure;
}

}  // namespace

TEST(Property, FieldAxioms) { expect_clean(props::field_axioms(kCases, 101)); }

TEST(Property, AreaConservation) { expect_clean(props::area_conservation(kCases, 202)); }

TEST(Property, CanonicalFormIdempotentAndCutInvariant) { expect_clean(props::canonical_invariance(kCases, 303)); }

TEST(Property, MoebiusGroupAction) { expect_clean(props::moebius_action(kCases, 404)); }
