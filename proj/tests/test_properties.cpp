#include <gtest/gtest.h>

#include "support.hpp"

using namespace nadd;
using namespace testing_support;

namespace {
Capacity table2(Value a, Value b, Value x) { return build_capacity(FiniteSpace(2), std::vector<Value>{0, a, b, x}); }

// Definition-level oracles, independent of the library's checker.
bool oracle_weak_null_additive(const Capacity& mu) {
    for (Mask a = 0; a < mu.subset_count(); ++a)
        for (Mask b = 0; b < mu.subset_count(); ++b)
            if (mu(a).is_zero() && mu(b).is_zero() && !mu(a | b).is_zero()) return false;
    return true;
}
bool oracle_null_additive(const Capacity& mu) {
    for (Mask a = 0; a < mu.subset_count(); ++a)
        for (Mask b = 0; b < mu.subset_count(); ++b)
            if (mu(b).is_zero() && mu(a | b) != mu(a)) return false;
    return true;
}
bool oracle_subadditive(const Capacity& mu) {
    for (Mask a = 0; a < mu.subset_count(); ++a)
        for (Mask b = 0; b < mu.subset_count(); ++b)
            if ((a & b) == 0 && mu(a | b) > mu(a) + mu(b)) return false;
    return true;
}
}  // namespace

TEST(Property, NameRoundTrip) {
    for (auto id : kAllProperties) EXPECT_EQ(parse_property(property_name(id)).id, id);
    auto q = parse_property(" RELAXED_SUBADDITIVE(3/2) ");
    EXPECT_EQ(q.id, PropertyId::RELAXED_SUBADDITIVE);
    EXPECT_EQ(*q.constant, Rational(3, 2));
    EXPECT_EQ(q.to_string(), "RELAXED_SUBADDITIVE(3/2)");
    EXPECT_THROW(parse_property("NOT_A_PROPERTY"), ParseError);
    EXPECT_THROW(parse_property("RELAXED_SUBADDITIVE(3/2"), ParseError);
}

TEST(Check, WeakNullAdditivityCounterexample) {
    auto mu = table2(0, 0, 1);
    auto c = check(mu, PropertyId::WEAK_NULL_ADDITIVE);
    EXPECT_FALSE(c.holds());
    ASSERT_EQ(c.witness.size(), 2u);
    EXPECT_EQ(c.witness[0] | c.witness[1], 0b11u);
    EXPECT_TRUE(replay(mu, c));
}

TEST(Check, FiniteSpaceContinuityAlwaysHolds) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 50; ++i) {
        auto mu = random_capacity(1 + static_cast<int>(rng() % 4), rng);
        for (auto id : {PropertyId::CONT_FROM_BELOW, PropertyId::CONT_FROM_ABOVE, PropertyId::ORDER_CONTINUOUS,
                        PropertyId::NULL_CONTINUOUS, PropertyId::PROPERTY_C, PropertyId::PROPERTY_S1})
            EXPECT_TRUE(check(mu, id).holds());
    }
}

TEST(Check, AdditiveTableHoldsEverything) {
    auto mu = table2(Rational(1, 2), Rational(1, 3), Rational(5, 6));
    for (auto id : kAllProperties) EXPECT_TRUE(check(mu, id).holds()) << property_name(id);
    EXPECT_EQ(minimal_relaxed_constant(mu), Value(1));
}

TEST(MinimalRelaxedConstant, Examples) {
    EXPECT_EQ(minimal_relaxed_constant(table2(1, 1, 3)), Value(Rational(3, 2)));
    EXPECT_TRUE(minimal_relaxed_constant(table2(0, 0, 1)).is_infinite());
    auto mu = table2(1, 1, 3);
    EXPECT_FALSE(check(mu, PropertyId::SUBADDITIVE).holds());
    EXPECT_TRUE(check(mu, PropertyQuery(PropertyId::RELAXED_SUBADDITIVE, Rational(3, 2))).holds());
    auto tight = check(mu, PropertyQuery(PropertyId::RELAXED_SUBADDITIVE, Rational(4, 3)));
    EXPECT_FALSE(tight.holds());
    EXPECT_TRUE(replay(mu, tight));
}

TEST(MinimalRelaxedConstant, IsTheLeastPassingConstant) {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        auto mu = random_positive_capacity(1 + static_cast<int>(rng() % 4), rng);
        Value k = minimal_relaxed_constant(mu);
        ASSERT_TRUE(k.is_rational());
        EXPECT_TRUE(check(mu, PropertyQuery(PropertyId::RELAXED_SUBADDITIVE, k.rational())).holds());
        if (k > Value(1))
            EXPECT_FALSE(check(mu, PropertyQuery(PropertyId::RELAXED_SUBADDITIVE, k.rational() * Rational(99, 100))).holds());
    }
}

TEST(Check, AgreesWithDefinitionOracles) {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 400; ++i) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto mu = i % 2 ? random_null_additive_capacity(n, rng) : random_capacity(n, rng, 2, 3);
        EXPECT_EQ(check(mu, PropertyId::WEAK_NULL_ADDITIVE).holds(), oracle_weak_null_additive(mu));
        EXPECT_EQ(check(mu, PropertyId::NULL_ADDITIVE).holds(), oracle_null_additive(mu));
        EXPECT_EQ(check(mu, PropertyId::SUBADDITIVE).holds(), oracle_subadditive(mu));
        for (auto id : kAllProperties) {
            auto c = check(mu, id);
            if (!c.holds()) EXPECT_TRUE(replay(mu, c)) << property_name(id);
        }
    }
}

TEST(Check, NullAdditiveGeneratorIsNullAdditive) {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
        auto mu = random_null_additive_capacity(1 + static_cast<int>(rng() % 5), rng);
        EXPECT_TRUE(check(mu, PropertyId::NULL_ADDITIVE).holds());
        EXPECT_TRUE(check(mu, PropertyId::AUTOCONT_BELOW).holds());
    }
}

TEST(Replay, RejectsHoldsAndForgedWitnesses) {
    auto mu = table2(Rational(1, 2), Rational(1, 3), Rational(5, 6));
    EXPECT_FALSE(replay(mu, check(mu, PropertyId::SUBADDITIVE)));
    PropertyCertificate forged{PropertyId::WEAK_NULL_ADDITIVE, Verdict::FAILS, {0b01, 0b10}, ""};
    EXPECT_FALSE(replay(mu, forged));
}

TEST(Distortion, Identity) {
    auto lambda = table2(Rational(1, 2), Rational(1, 2), 1);
    EXPECT_EQ(distorted_capacity(lambda, Distortion::identity()), lambda);
}

TEST(Distortion, JumpAtOne) {
    auto mu = distorted_capacity(table2(Rational(1, 2), Rational(1, 2), 1), Distortion::jump());
    EXPECT_EQ(mu(0b01), Value(Rational(1, 2)));
    EXPECT_EQ(mu(0b10), Value(Rational(1, 2)));
    EXPECT_EQ(mu(0b11), Value(2));
    EXPECT_EQ(minimal_relaxed_constant(mu), Value(2));
}

TEST(Distortion, TangentReachesInfinity) {
    auto mu = distorted_capacity(table2(Rational(1, 2), Rational(1, 4), 1), Distortion::tan_half_pi());
    EXPECT_TRUE(mu(0b11).is_infinite());
    EXPECT_NEAR(mu(0b01).to_double(), 1.0, 1e-15);
    EXPECT_NEAR(mu(0b10).to_double(), std::tan(M_PI / 8), 1e-15);
}

TEST(Distortion, RejectsBadMaps) {
    auto lambda = table2(Rational(1, 2), Rational(1, 4), 1);
    EXPECT_THROW(distorted_capacity(lambda, Distortion{"shift", [](const Value& t) { return t + Value(1); }}),
                 DistortionNotMonotone);
    EXPECT_THROW(distorted_capacity(lambda, Distortion::table({{Value(0), Value(0)}, {Value(Rational(1, 2)), Value(2)},
                                                               {Value(1), Value(1)}})),
                 DistortionNotMonotone);
}

TEST(Claims, ParseConjunction) {
    auto c = parse_claim("AUTOCONT_ABOVE&CONT_FROM_BELOW", "PGP");
    ASSERT_EQ(c.premise.size(), 2u);
    EXPECT_EQ(c.premise_text(), "AUTOCONT_ABOVE&CONT_FROM_BELOW");
    EXPECT_EQ(c.conclusion.id, PropertyId::PGP);
    EXPECT_EQ(default_claims().size(), 24u);
}

TEST(Scan, SampledTablesAreMonotoneOnTheGrid) {
    std::mt19937_64 rng(59);
    auto grid = sampling_grid();
    for (int i = 0; i < 100; ++i) {
        auto mu = sample_capacity(3, rng);
        for (const auto& v : mu.table())
            EXPECT_NE(std::find(grid.begin(), grid.end(), v.rational()), grid.end());
    }
}

TEST(Scan, NoViolationsAndConverseHunt) {
    auto r = implication_scan(2, 3000, 7, default_claims());
    EXPECT_EQ(r.total_violations(), 0u);
    bool found = false;
    for (const auto& c : r.claims)
        if (c.claim.premise.size() == 1 && c.claim.premise[0].id == PropertyId::SUBADDITIVE &&
            c.claim.conclusion.id == PropertyId::WEAK_NULL_ADDITIVE)
            for (const auto& mu : c.converse_counterexamples) {
                EXPECT_TRUE(check(mu, PropertyId::WEAK_NULL_ADDITIVE).holds());
                EXPECT_FALSE(check(mu, PropertyId::SUBADDITIVE).holds());
                found = true;
            }
    EXPECT_TRUE(found);
}

TEST(Scan, Deterministic) {
    auto a = implication_scan(3, 300, 99, default_claims());
    auto b = implication_scan(3, 300, 99, default_claims());
    ASSERT_EQ(a.claims.size(), b.claims.size());
    for (std::size_t i = 0; i < a.claims.size(); ++i) {
        EXPECT_EQ(a.claims[i].converse_count, b.claims[i].converse_count);
        EXPECT_EQ(a.claims[i].converse_counterexamples, b.claims[i].converse_counterexamples);
    }
    EXPECT_THROW(implication_scan(7, 1, 1, default_claims()), ValidationError);
}

TEST(Scan, PowerStability) {
    // Null sets are preserved by μ ↦ μ^r, so every null-set property is too.
    std::mt19937_64 rng(61);
    for (int i = 0; i < 200; ++i) {
        auto mu = sample_capacity(1 + static_cast<int>(rng() % 3), rng);
        for (auto r : {Rational(1, 2), Rational(2)}) {
            auto nu = power_capacity(mu, r);
            for (auto id : kAllProperties) {
                if (id == PropertyId::SUBADDITIVE) continue;
                EXPECT_EQ(check(mu, id).holds(), check(nu, id).holds()) << property_name(id);
            }
        }
    }
}
