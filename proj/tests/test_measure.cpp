#include <gtest/gtest.h>

#include "support.hpp"

using namespace nadd;
using testing_support::random_capacity;

TEST(Capacity, SmallestNondegenerateCase) {
    auto mu = build_capacity(FiniteSpace(1), std::vector<Value>{0, 1});
    EXPECT_EQ(mu(1), Value(1));
}

TEST(Capacity, AcceptsMonotoneTable) {
    auto mu = build_capacity(FiniteSpace(2), std::vector<Value>{0, Rational(1, 2), Rational(1, 3), 1});
    EXPECT_EQ(mu(0b11), Value(1));
    EXPECT_TRUE(mu.is_exact());
}

TEST(Capacity, RejectsMonotonicityViolationWithOffendingPair) {
    try {
        build_capacity(FiniteSpace(2), std::vector<Value>{0, 1, 0, Rational(1, 2)});
        FAIL() << "expected MonotonicityViolation";
    } catch (const MonotonicityViolation& e) {
        EXPECT_EQ(e.smaller_mask, 0b01u);
        EXPECT_EQ(e.larger_mask, 0b11u);
    }
}

TEST(Capacity, RejectsNonzeroEmptySet) {
    EXPECT_THROW(build_capacity(FiniteSpace(1), std::vector<Value>{1, 1}), NonzeroEmptySet);
}

TEST(Capacity, RejectsBadGroundSetSizes) {
    EXPECT_THROW(FiniteSpace(0), ValidationError);
    EXPECT_THROW(FiniteSpace(25), ValidationError);
    EXPECT_NO_THROW(FiniteSpace(24));
}

TEST(Capacity, SparseFormRequiresEverySubset) {
    std::map<Mask, Value> t{{0, Value(0)}, {1, Value(1)}, {3, Value(2)}};
    EXPECT_THROW(build_capacity(FiniteSpace(2), t), ValidationError);
    t[2] = Value(1);
    EXPECT_NO_THROW(build_capacity(FiniteSpace(2), t));
}

// Covering pairs suffice: a table accepted by the builder is monotone on all pairs A ⊆ B.
TEST(Capacity, AcceptedTablesAreMonotoneOnAllPairs) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        FiniteSpace space(n);
        std::vector<Value> t(space.subset_count());
        for (Mask a = 1; a < space.subset_count(); ++a) t[a] = Value(static_cast<long>(rng() % 4));
        bool monotone = true;
        for (Mask a = 0; a < space.subset_count(); ++a)
            for (Mask b = 0; b < space.subset_count(); ++b)
                if ((a & b) == a && t[b] < t[a]) monotone = false;
        if (monotone)
            EXPECT_NO_THROW(build_capacity(space, t));
        else
            EXPECT_THROW(build_capacity(space, t), MonotonicityViolation);
    }
}

TEST(PowerCapacity, PerfectPowersStayExact) {
    auto mu = build_capacity(FiniteSpace(1), std::vector<Value>{0, Rational(1, 4)});
    EXPECT_EQ(power_capacity(mu, Rational(1, 2))(1), Value(Rational(1, 2)));
}

TEST(PowerCapacity, IrrationalEntriesAreFloats) {
    auto mu = build_capacity(FiniteSpace(1), std::vector<Value>{0, Rational(1, 2)});
    Value v = power_capacity(mu, Rational(1, 2))(1);
    EXPECT_FALSE(v.is_exact());
    EXPECT_NEAR(v.to_double(), 0.7071067811865476, 1e-15);
}

TEST(PowerCapacity, InfinityIsFixed) {
    auto mu = build_capacity(FiniteSpace(1), std::vector<Value>{0, Value::infinity()});
    EXPECT_TRUE(power_capacity(mu, Rational(3))(1).is_infinite());
}

TEST(PowerCapacity, ComposesMultiplicatively) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto mu = random_capacity(3, rng);
        for (auto [r, s] : {std::pair{Rational(2), Rational(3)}, std::pair{Rational(1, 2), Rational(4)},
                            std::pair{Rational(2, 3), Rational(3, 2)}}) {
            auto lhs = power_capacity(power_capacity(mu, r), s);
            auto rhs = power_capacity(mu, r * s);
            for (Mask a = 0; a < mu.subset_count(); ++a) {
                if (lhs(a).is_exact() && rhs(a).is_exact())
                    EXPECT_EQ(lhs(a), rhs(a));
                else
                    EXPECT_TRUE(approx_equal(lhs(a), rhs(a)));
            }
        }
    }
}

TEST(CapacityMin, ClampsAndIdentityAtInfinity) {
    auto mu = build_capacity(FiniteSpace(2), std::vector<Value>{0, 1, 1, 2});
    EXPECT_EQ(capacity_min(mu, Value(1))(3), Value(1));
    EXPECT_EQ(capacity_min(mu, Value::infinity()), mu);
}

TEST(AdditiveCapacity, SumsPointMasses) {
    auto mu = additive_capacity({Value(Rational(1, 2)), Value(Rational(1, 3)), Value(2)});
    EXPECT_EQ(mu(0b101), Value(Rational(5, 2)));
    EXPECT_EQ(mu(0b111), Value(Rational(17, 6)));
}
