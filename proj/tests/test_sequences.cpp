#include <gtest/gtest.h>

#include "support.hpp"

using namespace nadd;
using namespace testing_support;

namespace {
Capacity two_point(Value a, Value b, Value x) { return build_capacity(FiniteSpace(2), std::vector<Value>{0, a, b, x}); }
Function fn(const char* s) { return Function::parse(s); }
Rational pow2_inv(unsigned k) { return Rational(Integer(1), Integer(1) << k); }
}  // namespace

TEST(ExplicitSequence, TermsCycle) {
    auto seq = ExplicitSequence::eventually({fn("0,0")}, {fn("1,0"), fn("0,1")});
    EXPECT_EQ(seq.term(1), fn("0,0"));
    EXPECT_EQ(seq.term(2), fn("1,0"));
    EXPECT_EQ(seq.term(5), fn("0,1"));
    EXPECT_THROW(seq.term(0), std::out_of_range);
    EXPECT_THROW(ExplicitSequence::truncated({fn("1,0")}).term(2), std::out_of_range);
    EXPECT_THROW(ExplicitSequence({fn("1,0")}, {fn("1")}), ValidationError);
}

TEST(InMeasure, ConstantSequence) {
    auto mu = two_point(Rational(1, 2), Rational(1, 3), 1);
    auto f = fn("2,1");
    auto r = converges_in_measure(mu, ExplicitSequence::eventually({}, {f}), f);
    EXPECT_EQ(r.verdict, ConvergenceVerdict::CONVERGES);
    for (const auto& row : r.table.rows)
        for (const auto& v : row) EXPECT_TRUE(v.is_zero());
}

TEST(InMeasure, NullDiscrepancyConverges) {
    auto mu = two_point(0, 1, 1);
    auto r = converges_in_measure(mu, ExplicitSequence::eventually({fn("5,5")}, {fn("3,1")}), fn("0,1"));
    EXPECT_EQ(r.verdict, ConvergenceVerdict::CONVERGES);
    EXPECT_EQ(r.table.rows[0].front(), Value(1));
    EXPECT_TRUE(r.table.rows[1].front().is_zero());
}

TEST(InMeasure, TruncatedIsInconclusive) {
    auto mu = two_point(Rational(1, 2), Rational(1, 2), 1);
    auto r = converges_in_measure(mu, ExplicitSequence::truncated({fn("1,0"), fn("0,0")}), fn("0,0"));
    EXPECT_EQ(r.verdict, ConvergenceVerdict::INCONCLUSIVE);
    EXPECT_EQ(r.table.rows.size(), 2u);
}

TEST(Cauchy, ConstantSequenceFromOne) {
    auto mu = two_point(Rational(1, 2), Rational(1, 3), 1);
    auto r = cauchy_in_measure(mu, ExplicitSequence::eventually({}, {fn("2,1")}), default_eps_grid(), Rational(1, 10));
    EXPECT_EQ(r.verdict, ConvergenceVerdict::CONVERGES);
    ASSERT_TRUE(r.n0);
    EXPECT_EQ(*r.n0, 1u);
}

TEST(Cauchy, AlternatingPairHasWitness) {
    auto mu = two_point(Rational(1, 2), Rational(1, 2), 1);
    auto r = cauchy_in_measure(mu, ExplicitSequence::eventually({}, {fn("1,0"), fn("1,1")}), default_eps_grid(),
                               Rational(1, 10));
    EXPECT_EQ(r.verdict, ConvergenceVerdict::FAILS);
    ASSERT_TRUE(r.witness_pair);
    EXPECT_EQ(r.witness_value, Value(Rational(1, 2)));
}

TEST(Cauchy, PrefixDoesNotHideCycleMembers) {
    auto mu = two_point(Rational(1, 2), Rational(1, 2), 1);
    auto seq = ExplicitSequence::eventually({fn("9,9"), fn("9,9"), fn("9,9")}, {fn("0,0"), fn("1,0")});
    auto r = cauchy_in_measure(mu, seq, default_eps_grid(), Rational(1, 10));
    EXPECT_EQ(r.verdict, ConvergenceVerdict::FAILS);
    EXPECT_EQ(r.table.rows.back().front(), Value(Rational(1, 2)));
}

TEST(Pointwise, NullExceptionalPoint) {
    auto mu = two_point(0, 1, 1);
    auto seq = ExplicitSequence::eventually({}, {fn("0,1"), fn("2,1")});
    auto ae = converges_ae(mu, seq, fn("0,1"));
    EXPECT_EQ(ae.verdict, ConvergenceVerdict::CONVERGES);
    EXPECT_EQ(ae.exceptional, 0b01u);
    EXPECT_EQ(converges_au(mu, seq, fn("0,1")).verdict, ConvergenceVerdict::CONVERGES);
    EXPECT_THROW(converges_ae(mu, ExplicitSequence::truncated({fn("0,1")}), fn("0,1")), UndecidableAtHorizon);
}

TEST(Sequences, ModesAgreeOnRandomEventuallyPeriodic) {
    // a.u. ⇒ a.e. and in measure; on weakly null-additive μ, in measure ⇒ Cauchy.
    std::mt19937_64 rng(89);
    for (int i = 0; i < 300; ++i) {
        int n = 1 + static_cast<int>(rng() % 3);
        auto mu = i % 2 ? random_null_additive_capacity(n, rng) : random_capacity(n, rng, 2, 2);
        auto f = random_function(n, rng, true, 1, 2);
        std::vector<Function> prefix, cycle;
        for (std::size_t k = rng() % 3; k > 0; --k) prefix.push_back(random_function(n, rng, true, 1, 2));
        for (std::size_t k = 1 + rng() % 2; k > 0; --k) cycle.push_back(rng() % 2 ? f : random_function(n, rng, true, 1, 2));
        auto seq = ExplicitSequence::eventually(prefix, cycle);
        auto au = converges_au(mu, seq, f);
        auto ae = converges_ae(mu, seq, f);
        auto im = converges_in_measure(mu, seq, f);
        if (au.verdict == ConvergenceVerdict::CONVERGES) {
            EXPECT_EQ(ae.verdict, ConvergenceVerdict::CONVERGES);
            EXPECT_EQ(im.verdict, ConvergenceVerdict::CONVERGES);
        }
        if (check(mu, PropertyId::PGP).holds() && im.verdict == ConvergenceVerdict::CONVERGES)
            EXPECT_EQ(cauchy_in_measure(mu, seq, default_eps_grid(), Rational(1, 100)).verdict,
                      ConvergenceVerdict::CONVERGES);
        // The l0 prenorm of f_n − f vanishes along the cycle iff the sequence converges in measure.
        bool all_zero = true;
        for (const auto& g : cycle) all_zero = all_zero && l0_prenorm(mu, g - f).is_zero();
        EXPECT_EQ(all_zero, im.verdict == ConvergenceVerdict::CONVERGES);
    }
}

TEST(Family, Counter1CosingletonConvergesInMeasureNotAU) {
    auto mu = CountableFamily::counter1();
    IndicatorSequence seq{IndicatorShape::COSINGLETON};
    auto im = converges_in_measure(mu, seq, NatSet::all(), default_eps_grid(), 10);
    EXPECT_EQ(im.verdict, ConvergenceVerdict::CONVERGES);
    for (unsigned n = 1; n <= 10; ++n) EXPECT_EQ(im.table.rows[n - 1].front(), Value(pow2_inv(n)));
    auto au = converges_au(mu, seq, NatSet::all(), 10);
    EXPECT_EQ(au.verdict, ConvergenceVerdict::FAILS);
    EXPECT_EQ(au.tail_union_limit, Value(1));
    for (const auto& v : au.tail_unions) EXPECT_GT(v, Value(1));
    EXPECT_EQ(converges_ae(mu, seq, NatSet::all()).verdict, ConvergenceVerdict::CONVERGES);
}

TEST(Family, Counter1PrefixCauchyButNotConvergent) {
    auto mu = CountableFamily::counter1();
    IndicatorSequence seq{IndicatorShape::PREFIX};
    auto im = converges_in_measure(mu, seq, NatSet::all(), default_eps_grid(), 12);
    EXPECT_EQ(im.verdict, ConvergenceVerdict::FAILS);
    EXPECT_EQ(im.limit, Value(1));
    for (unsigned n = 1; n <= 12; ++n) EXPECT_EQ(im.table.rows[n - 1].front(), Value(1 + pow2_inv(n)));
    auto c = cauchy_in_measure(mu, seq, Rational(1, 100), 12);
    EXPECT_EQ(c.verdict, ConvergenceVerdict::CONVERGES);
    ASSERT_TRUE(c.n0);
    EXPECT_EQ(*c.n0, 7u);  // 2^{-7} < 1/100 <= 2^{-6}
    for (unsigned n0 = 1; n0 <= 12; ++n0) EXPECT_EQ(c.sup_from[n0 - 1], Value(pow2_inv(n0)));
}

TEST(Family, PairSupOracle) {
    // Brute-force sup over m > n >= n0 of COUNTER1(A_m △ A_n), m up to 40.
    auto mu = CountableFamily::counter1();
    for (auto shape : {IndicatorShape::PREFIX, IndicatorShape::COSINGLETON, IndicatorShape::SINGLETON, IndicatorShape::TAIL}) {
        IndicatorSequence seq{shape};
        auto c = cauchy_in_measure(mu, seq, Rational(1, 2), 6);
        for (unsigned n0 = 1; n0 <= 6; ++n0) {
            Value best(0);
            for (unsigned nn = n0; nn <= 40; ++nn)
                for (unsigned m = nn + 1; m <= 40; ++m) best = max(best, eval_family(mu, seq.set(m) ^ seq.set(nn)));
            EXPECT_LE(best, c.sup_from[n0 - 1]) << shape_name(shape);
            EXPECT_NEAR(best.to_double(), c.sup_from[n0 - 1].to_double(), 1e-9) << shape_name(shape);
        }
    }
}

TEST(Family, Counter2CosingletonConvergesAU) {
    auto mu = CountableFamily::counter2();
    IndicatorSequence seq{IndicatorShape::COSINGLETON};
    EXPECT_EQ(converges_au(mu, seq, NatSet::all()).verdict, ConvergenceVerdict::CONVERGES);
    EXPECT_EQ(converges_in_measure(mu, seq, NatSet::all()).verdict, ConvergenceVerdict::CONVERGES);
}

TEST(Family, Counter3NothingVanishes) {
    auto mu = CountableFamily::counter3();
    IndicatorSequence seq{IndicatorShape::SINGLETON};
    EXPECT_EQ(converges_in_measure(mu, seq, NatSet::empty()).verdict, ConvergenceVerdict::FAILS);
    EXPECT_EQ(cauchy_in_measure(mu, seq, Rational(1, 4)).verdict, ConvergenceVerdict::FAILS);
    EXPECT_EQ(converges_ae(mu, seq, NatSet::empty()).verdict, ConvergenceVerdict::CONVERGES);
    EXPECT_EQ(converges_au(mu, seq, NatSet::empty()).verdict, ConvergenceVerdict::FAILS);
}

TEST(Family, RejectsNonNaturalFamilies) {
    EXPECT_THROW(converges_ae(CountableFamily::weak_l1(), IndicatorSequence{IndicatorShape::TAIL}, NatSet::empty()),
                 UnsupportedSet);
    EXPECT_EQ(parse_shape("TAIL"), IndicatorShape::TAIL);
    EXPECT_THROW(parse_shape("SPIRAL"), ParseError);
}

TEST(ConvergenceInstances, MonotoneChainUpToF) {
    auto mu = two_point(Rational(1, 2), Rational(1, 3), 1);
    auto f = fn("2,1");
    auto seq = ExplicitSequence::eventually({fn("0,0"), fn("2,0")}, {f});
    auto r = monotone_au_convergence_instance(mu, seq, f, {IntegralMode::CHOQUET, 2});
    ASSERT_EQ(r.values.size(), 3u);
    EXPECT_EQ(r.values[0], Value(0));
    EXPECT_EQ(r.values[1], Value(2));
    EXPECT_EQ(r.values[2], Value(Rational(5, 2)));
    EXPECT_EQ(r.target, Value(Rational(5, 2)));
    auto s = monotone_au_convergence_instance(mu, seq, f, {IntegralMode::SHILKRET, 1});
    EXPECT_EQ(s.values.back(), Value(1));
    auto constant = monotone_au_convergence_instance(mu, ExplicitSequence::eventually({}, {f}), f, {});
    EXPECT_EQ(constant.values.front(), constant.target);
}

TEST(ConvergenceInstances, MonotoneRejectsBrokenHypotheses) {
    auto ok = two_point(Rational(1, 2), Rational(1, 3), 1);
    EXPECT_THROW(monotone_au_convergence_instance(ok, ExplicitSequence::eventually({fn("2,1")}, {fn("1,1")}), fn("1,1"), {}),
                 HypothesisViolated);
    auto bad = two_point(1, 0, 2);  // μ({1}) = 0 but μ(X \ {1}) = 1 < 2
    EXPECT_THROW(monotone_au_convergence_instance(bad, ExplicitSequence::eventually({}, {fn("1,0")}), fn("1,0"), {}),
                 HypothesisViolated);
}

TEST(ConvergenceInstances, FatouInstances) {
    std::mt19937_64 rng(97);
    auto mu = random_null_additive_capacity(3, rng);
    auto f = fn("1,2,3");
    auto eq = fatou_au_instance(mu, ExplicitSequence::eventually({fn("0,0,0")}, {f}), f, {});
    EXPECT_EQ(eq.lhs, eq.liminf);
    auto up = fatou_au_instance(mu, ExplicitSequence::eventually({}, {f, fn("2,2,3")}), f, {IntegralMode::SHILKRET, 1});
    EXPECT_LE(up.lhs, up.liminf);
}

TEST(ConvergenceInstances, NecessityWitness) {
    auto mu = two_point(1, 0, 2);
    auto w = hypothesis_necessity_witness(mu, {});
    ASSERT_TRUE(w);
    EXPECT_LT(w->sequence_value, w->limit_value);
    EXPECT_TRUE(mu(w->b).is_zero());
    EXPECT_FALSE(hypothesis_necessity_witness(two_point(1, 1, 2), {}));
}
