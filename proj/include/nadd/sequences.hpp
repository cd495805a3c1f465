#pragma once

// Convergence modes for function sequences.
//
// Explicit sequences on a finite space are given as a prefix followed by an
// optional declared cycle that repeats forever (a cycle of length one means
// the sequence is eventually constant).  With a declared cycle every mode is
// decided exactly from finitely many terms; without one only the table up to
// the horizon is known and no limit verdict is claimed.
//
// Indicator families on ℕ are f_n = χ_{A_n} for a named set shape under a
// catalog capacity, with hand-derived closed forms for every limit.

#include <optional>
#include <string>
#include <vector>

#include "nadd/catalog.hpp"
#include "nadd/integrals.hpp"
#include "nadd/prenorms.hpp"

namespace nadd {

enum class ConvergenceVerdict { CONVERGES, FAILS, INCONCLUSIVE };

inline std::string verdict_name(ConvergenceVerdict v) {
    switch (v) {
        case ConvergenceVerdict::CONVERGES: return "CONVERGES";
        case ConvergenceVerdict::FAILS: return "FAILS";
        case ConvergenceVerdict::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

inline std::vector<Rational> default_eps_grid() {
    return {Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)};
}
inline constexpr std::size_t kDefaultHorizon = 64;

/// f_1, ..., f_P, then c_1, ..., c_L repeated.
class ExplicitSequence {
public:
    ExplicitSequence(std::vector<Function> prefix, std::vector<Function> cycle)
        : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
        if (prefix_.empty() && cycle_.empty()) throw ValidationError("sequence has no terms");
        int n = prefix_.empty() ? cycle_.front().size() : prefix_.front().size();
        for (const auto* part : {&prefix_, &cycle_})
            for (const auto& f : *part)
                if (f.size() != n) throw ValidationError("sequence terms live on ground sets of different sizes");
    }
    static ExplicitSequence truncated(std::vector<Function> terms) { return {std::move(terms), {}}; }
    static ExplicitSequence eventually(std::vector<Function> prefix, std::vector<Function> cycle) {
        if (cycle.empty()) throw ValidationError("declared cycle must be nonempty");
        return {std::move(prefix), std::move(cycle)};
    }

    bool has_tail() const { return !cycle_.empty(); }
    int space_size() const { return prefix_.empty() ? cycle_.front().size() : prefix_.front().size(); }
    const std::vector<Function>& prefix() const { return prefix_; }
    const std::vector<Function>& cycle() const { return cycle_; }

    /// Number of terms available without a cycle; otherwise unbounded.
    std::optional<std::size_t> known_length() const {
        if (has_tail()) return std::nullopt;
        return prefix_.size();
    }

    /// 1-based term.
    const Function& term(std::size_t k) const {
        if (k == 0) throw std::out_of_range("terms are numbered from 1");
        if (k <= prefix_.size()) return prefix_[k - 1];
        if (!has_tail()) throw std::out_of_range("term beyond the truncated sequence");
        return cycle_[(k - 1 - prefix_.size()) % cycle_.size()];
    }

private:
    std::vector<Function> prefix_;
    std::vector<Function> cycle_;
};

struct MeasureTable {
    std::vector<Rational> eps;
    std::vector<std::vector<Value>> rows;  // rows[n-1][j] for ε = eps[j]
};

struct InMeasureResult {
    ConvergenceVerdict verdict;
    MeasureTable table;
    Value floor;  // limsup of μ({f_n ≠ f}); 0 when CONVERGES
};

namespace detail {

inline Mask level_above(const Function& a, const Function& b, const Rational& eps) {
    return (a - b).abs().greater(Value(eps));
}

inline void check_grid(const std::vector<Rational>& eps_grid, std::size_t horizon) {
    if (eps_grid.empty()) throw ValidationError("eps grid must be nonempty");
    for (const auto& e : eps_grid)
        if (e <= 0) throw ValidationError("eps values must be positive");
    if (horizon < 1) throw ValidationError("horizon must be at least 1");
}

inline std::size_t table_length(const ExplicitSequence& seq, std::size_t horizon) {
    if (auto len = seq.known_length()) return std::min(*len, horizon);
    return horizon;
}

}  // namespace detail

/// μ({|f_n − f| > ε}) → 0 for every ε > 0.  With a declared cycle this holds
/// exactly when every cycle member equals f outside a null set.
inline InMeasureResult converges_in_measure(const Capacity& mu, const ExplicitSequence& seq, const Function& f,
                                            const std::vector<Rational>& eps_grid = default_eps_grid(),
                                            std::size_t horizon = kDefaultHorizon) {
    detail::check_grid(eps_grid, horizon);
    detail::require_same_space(mu, f);
    InMeasureResult r{ConvergenceVerdict::INCONCLUSIVE, {eps_grid, {}}, Value(0)};
    for (std::size_t n = 1; n <= detail::table_length(seq, horizon); ++n) {
        std::vector<Value> row;
        for (const auto& e : eps_grid) row.push_back(mu(detail::level_above(seq.term(n), f, e)));
        r.table.rows.push_back(std::move(row));
    }
    if (!seq.has_tail()) return r;
    for (const auto& g : seq.cycle()) r.floor = max(r.floor, mu(disagreement_set(g, f)));
    r.verdict = r.floor.is_zero() ? ConvergenceVerdict::CONVERGES : ConvergenceVerdict::FAILS;
    return r;
}

struct CauchyResult {
    ConvergenceVerdict verdict;
    MeasureTable table;                  // rows[n0-1][j] = sup_{m,n >= n0} μ({|f_m − f_n| > ε_j})
    std::optional<std::size_t> n0;       // least n0 with every table entry < δ from n0 on
    std::optional<std::pair<std::size_t, std::size_t>> witness_pair;  // non-Cauchy pair (1-based)
    Value witness_value;                 // μ({f_m ≠ f_n}) for the witness pair
};

/// Cauchy in μ-measure.  With a declared cycle the sequence is Cauchy exactly
/// when the cycle members agree pairwise outside null sets.
inline CauchyResult cauchy_in_measure(const Capacity& mu, const ExplicitSequence& seq,
                                      const std::vector<Rational>& eps_grid, const Rational& delta,
                                      std::size_t horizon = kDefaultHorizon) {
    detail::check_grid(eps_grid, horizon);
    if (delta <= 0) throw ValidationError("delta must be positive");
    if (seq.space_size() != mu.n()) throw ValidationError("sequence and capacity live on different ground sets");
    CauchyResult r{ConvergenceVerdict::INCONCLUSIVE, {eps_grid, {}}, std::nullopt, std::nullopt, Value(0)};

    // Distinct terms from index n0 on: the remaining prefix plus the cycle (exact),
    // or the remaining terms up to the horizon (truncated).
    auto members_from = [&](std::size_t n0) {
        std::vector<std::size_t> idx;
        if (!seq.has_tail()) {
            for (std::size_t k = n0; k <= detail::table_length(seq, horizon); ++k) idx.push_back(k);
            return idx;
        }
        const std::size_t p = seq.prefix().size();
        for (std::size_t k = n0; k <= p; ++k) idx.push_back(k);
        for (std::size_t k = 1; k <= seq.cycle().size(); ++k) idx.push_back(p + k);
        return idx;
    };

    const std::size_t rows = detail::table_length(seq, horizon);
    for (std::size_t n0 = 1; n0 <= rows; ++n0) {
        auto idx = members_from(n0);
        std::vector<Value> row;
        for (const auto& e : eps_grid) {
            Value sup(0);
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = i + 1; j < idx.size(); ++j)
                    sup = max(sup, mu(detail::level_above(seq.term(idx[i]), seq.term(idx[j]), e)));
            row.push_back(sup);
        }
        bool below = std::all_of(row.begin(), row.end(), [&](const Value& v) { return v < Value(delta); });
        if (below && !r.n0) r.n0 = n0;
        if (!below) r.n0.reset();
        r.table.rows.push_back(std::move(row));
    }
    if (!seq.has_tail()) return r;

    const auto& cyc = seq.cycle();
    const std::size_t base = seq.prefix().size() + 1;
    for (std::size_t i = 0; i < cyc.size() && !r.witness_pair; ++i)
        for (std::size_t j = i + 1; j < cyc.size(); ++j) {
            Value v = mu(disagreement_set(cyc[i], cyc[j]));
            if (!v.is_zero()) {
                r.witness_pair = std::pair{base + i, base + j};
                r.witness_value = v;
                break;
            }
        }
    r.verdict = r.witness_pair ? ConvergenceVerdict::FAILS : ConvergenceVerdict::CONVERGES;
    if (r.verdict == ConvergenceVerdict::FAILS) r.n0.reset();
    return r;
}

struct PointwiseResult {
    ConvergenceVerdict verdict;
    Mask exceptional;  // points where f_n does not tend to f
    Value exceptional_measure;
};

namespace detail {
inline Mask nonconvergence_set(const ExplicitSequence& seq, const Function& f) {
    if (!seq.has_tail())
        throw UndecidableAtHorizon("pointwise limits of a truncated sequence are undecidable; declare its cycle");
    Mask bad = 0;
    for (const auto& g : seq.cycle()) bad |= disagreement_set(g, f);
    return bad;
}
}  // namespace detail

/// f_n → f outside a null set.
inline PointwiseResult converges_ae(const Capacity& mu, const ExplicitSequence& seq, const Function& f) {
    detail::require_same_space(mu, f);
    Mask bad = detail::nonconvergence_set(seq, f);
    Value m = mu(bad);
    return {m.is_zero() ? ConvergenceVerdict::CONVERGES : ConvergenceVerdict::FAILS, bad, m};
}

/// For every ε > 0 some E with μ(E) < ε carries uniform convergence off E.  On
/// a finite set uniform and pointwise convergence coincide, so the smallest
/// admissible E is the nonconvergence set itself.
inline PointwiseResult converges_au(const Capacity& mu, const ExplicitSequence& seq, const Function& f) {
    return converges_ae(mu, seq, f);
}

// ---------------------------------------------------------------------------
// Indicator families on ℕ

enum class IndicatorShape {
    PREFIX,       // A_n = {1..n}
    COSINGLETON,  // A_n = ℕ \ {n}
    SINGLETON,    // A_n = {n}
    TAIL,         // A_n = {n, n+1, ...}
};

inline std::string shape_name(IndicatorShape s) {
    switch (s) {
        case IndicatorShape::PREFIX: return "PREFIX";
        case IndicatorShape::COSINGLETON: return "COSINGLETON";
        case IndicatorShape::SINGLETON: return "SINGLETON";
        case IndicatorShape::TAIL: return "TAIL";
    }
    return "?";
}

inline IndicatorShape parse_shape(std::string_view s) {
    for (auto v : {IndicatorShape::PREFIX, IndicatorShape::COSINGLETON, IndicatorShape::SINGLETON, IndicatorShape::TAIL})
        if (shape_name(v) == s) return v;
    throw ParseError("unknown indicator shape '" + std::string(s) + "'");
}

/// A one-parameter set family m ↦ S_m on ℕ.
enum class SetShape { FIRST, FROM, ONLY, ALL_BUT, ALL };

inline NatSet shape_at(SetShape s, std::uint64_t m) {
    switch (s) {
        case SetShape::FIRST: return NatSet::range(1, m);
        case SetShape::FROM: return NatSet::tail(std::max<std::uint64_t>(m, 1));
        case SetShape::ONLY: return NatSet::finite({m});
        case SetShape::ALL_BUT: return NatSet::cofinite({m});
        case SetShape::ALL: return NatSet::all();
    }
    return {};
}

/// lim_{m→∞} μ(S_m), by closed form.
inline Value shape_limit(const CountableFamily& fam, SetShape s) {
    switch (fam.id) {
        case FamilyId::COUNTER1:
            switch (s) {
                case SetShape::FIRST: return Value(1);      // 1 − 2^{-m}
                case SetShape::FROM: return Value(1);       // 1 + 2^{1-m}
                case SetShape::ONLY: return Value(0);       // 2^{-m}
                case SetShape::ALL_BUT: return Value(2);    // 2 − 2^{-m}
                case SetShape::ALL: return Value(2);
            }
            break;
        case FamilyId::COUNTER2_JUMP: {
            // ν(S_m) → scale from below for FIRST and ALL_BUT, → 0 for FROM and ONLY.
            const Value s_val(fam.scale);
            auto from_below = [&] { return s_val <= Value(1) ? s_val : Value(1) + s_val; };
            switch (s) {
                case SetShape::FIRST:
                case SetShape::ALL_BUT: return from_below();
                case SetShape::FROM:
                case SetShape::ONLY: return Value(0);
                case SetShape::ALL: return jump_at_one(s_val);
            }
            break;
        }
        case FamilyId::COUNTER3_THREE_VALUED:
            return s == SetShape::ALL ? Value(1) : Value(Rational(1, 2));
        default: break;
    }
    throw UnsupportedSet(family_name(fam.id) + " has no closed-form limits on the naturals");
}

/// f_n = χ_{A_n} for a named shape.
struct IndicatorSequence {
    IndicatorShape shape;

    NatSet set(std::uint64_t n) const {
        switch (shape) {
            case IndicatorShape::PREFIX: return shape_at(SetShape::FIRST, n);
            case IndicatorShape::COSINGLETON: return shape_at(SetShape::ALL_BUT, n);
            case IndicatorShape::SINGLETON: return shape_at(SetShape::ONLY, n);
            case IndicatorShape::TAIL: return shape_at(SetShape::FROM, n);
        }
        return {};
    }
    /// Pointwise limit, as the set L with f_n → χ_L everywhere.
    NatSet pointwise_limit() const {
        return shape == IndicatorShape::PREFIX || shape == IndicatorShape::COSINGLETON ? NatSet::all()
                                                                                          : NatSet::empty();
    }
};

namespace detail {

// The discrepancy A_n △ L as (shape, m = n + offset), for L ∈ {∅, ℕ}.
struct Discrepancy {
    SetShape shape;
    std::int64_t offset;
};

inline Discrepancy discrepancy(IndicatorShape s, const NatSet& limit) {
    bool one = limit.is_all();
    if (!one && !limit.is_empty()) throw UnsupportedSet("indicator-family limits must be 0 or 1");
    switch (s) {
        case IndicatorShape::PREFIX: return one ? Discrepancy{SetShape::FROM, 1} : Discrepancy{SetShape::FIRST, 0};
        case IndicatorShape::COSINGLETON: return one ? Discrepancy{SetShape::ONLY, 0} : Discrepancy{SetShape::ALL_BUT, 0};
        case IndicatorShape::SINGLETON: return one ? Discrepancy{SetShape::ALL_BUT, 0} : Discrepancy{SetShape::ONLY, 0};
        case IndicatorShape::TAIL: return one ? Discrepancy{SetShape::FIRST, -1} : Discrepancy{SetShape::FROM, 0};
    }
    return {SetShape::ALL, 0};
}

// sup_{m > n >= n0} Σ_{i ∈ A_m △ A_n} 2^{-i}, and whether the sup is attained.
inline std::pair<Rational, bool> pair_dyadic_sup(IndicatorShape s, std::uint64_t n0) {
    Rational p = Rational(Integer(1), Integer(1) << static_cast<unsigned>(n0));
    switch (s) {
        case IndicatorShape::PREFIX: return {p, false};               // {n+1..m}: 2^{-n} − 2^{-m}
        case IndicatorShape::COSINGLETON:
        case IndicatorShape::SINGLETON: return {p * 3 / 2, true};     // {n, m}: max at m = n + 1 = n0 + 1
        case IndicatorShape::TAIL: return {p * 2, false};             // {n..m−1}: 2^{1-n} − 2^{1-m}
    }
    return {0, true};
}

// Value of the family on sets with dyadic mass approaching x (attained or from below).
inline Value finite_set_value(const CountableFamily& fam, const Rational& x, bool attained) {
    switch (fam.id) {
        case FamilyId::COUNTER1: return Value(x);
        case FamilyId::COUNTER2_JUMP: {
            Value nu(Rational(fam.scale * x));
            if (attained) return jump_at_one(nu);
            return nu <= Value(1) ? nu : Value(1) + nu;
        }
        case FamilyId::COUNTER3_THREE_VALUED: return x == 0 ? Value(0) : Value(Rational(1, 2));
        default: throw UnsupportedSet(family_name(fam.id) + " is not defined on subsets of the naturals");
    }
}

// Limit of the family on nonempty finite sets whose dyadic mass tends to 0.
inline Value vanishing_mass_limit(const CountableFamily& fam) {
    return fam.id == FamilyId::COUNTER3_THREE_VALUED ? Value(Rational(1, 2)) : Value(0);
}

inline void require_naturals(const CountableFamily& fam) {
    if (!fam.on_naturals()) throw UnsupportedSet(family_name(fam.id) + " is not defined on subsets of the naturals");
}

}  // namespace detail

struct FamilyInMeasureResult {
    ConvergenceVerdict verdict;
    MeasureTable table;
    Value limit;  // lim_n μ({|f_n − f| > ε}) for ε < 1; 0 for ε >= 1
};

/// |χ_{A_n} − χ_L| is an indicator, so {|f_n − f| > ε} is A_n △ L for ε < 1 and ∅ otherwise.
inline FamilyInMeasureResult converges_in_measure(const CountableFamily& fam, const IndicatorSequence& seq,
                                                  const NatSet& limit,
                                                  const std::vector<Rational>& eps_grid = default_eps_grid(),
                                                  std::size_t horizon = kDefaultHorizon) {
    detail::check_grid(eps_grid, horizon);
    detail::require_naturals(fam);
    auto d = detail::discrepancy(seq.shape, limit);
    FamilyInMeasureResult r{ConvergenceVerdict::FAILS, {eps_grid, {}}, shape_limit(fam, d.shape)};
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        NatSet diff = seq.set(n) ^ limit;
        std::vector<Value> row;
        for (const auto& e : eps_grid) row.push_back(e < 1 ? eval_family(fam, diff) : Value(0));
        r.table.rows.push_back(std::move(row));
    }
    // Convergence quantifies over every ε > 0, so the ε < 1 column decides.
    r.verdict = r.limit.is_zero() ? ConvergenceVerdict::CONVERGES : ConvergenceVerdict::FAILS;
    return r;
}

struct FamilyCauchyResult {
    ConvergenceVerdict verdict;
    std::vector<Value> sup_from;   // sup_{m > n >= n0} μ(A_m △ A_n) for n0 = 1..horizon
    Value limit;                   // lim_{n0→∞} of sup_from
    std::optional<std::uint64_t> n0;  // least n0 with sup_from < δ
};

inline FamilyCauchyResult cauchy_in_measure(const CountableFamily& fam, const IndicatorSequence& seq,
                                            const Rational& delta, std::size_t horizon = kDefaultHorizon) {
    detail::require_naturals(fam);
    if (delta <= 0) throw ValidationError("delta must be positive");
    FamilyCauchyResult r{ConvergenceVerdict::FAILS, {}, detail::vanishing_mass_limit(fam), std::nullopt};
    for (std::uint64_t n0 = 1; n0 <= horizon; ++n0) {
        auto [x, attained] = detail::pair_dyadic_sup(seq.shape, n0);
        Value v = detail::finite_set_value(fam, x, attained);
        if (!r.n0 && v < Value(delta)) r.n0 = n0;
        r.sup_from.push_back(std::move(v));
    }
    // The pair sup tends to the family value on sets of vanishing dyadic mass.
    r.verdict = r.limit.is_zero() ? ConvergenceVerdict::CONVERGES : ConvergenceVerdict::FAILS;
    return r;
}

struct FamilyPointwiseResult {
    ConvergenceVerdict verdict;
    NatSet exceptional;             // a.e.: points where f_n does not tend to f
    Value exceptional_measure;
    std::vector<Value> tail_unions; // a.u.: μ(⋃_{n >= N} A_n △ L) for N = 1..horizon
    Value tail_union_limit;
};

inline FamilyPointwiseResult converges_ae(const CountableFamily& fam, const IndicatorSequence& seq,
                                          const NatSet& limit) {
    detail::require_naturals(fam);
    NatSet bad = seq.pointwise_limit() ^ limit;
    Value m = eval_family(fam, bad);
    return {m.is_zero() ? ConvergenceVerdict::CONVERGES : ConvergenceVerdict::FAILS, bad, m, {}, Value(0)};
}

/// Off E the convergence is uniform iff E contains A_n △ L for all large n, so
/// the admissible E are the supersets of the tail unions U_N = ⋃_{n>=N} A_n △ L.
inline FamilyPointwiseResult converges_au(const CountableFamily& fam, const IndicatorSequence& seq,
                                          const NatSet& limit, std::size_t horizon = kDefaultHorizon) {
    detail::require_naturals(fam);
    auto d = detail::discrepancy(seq.shape, limit);
    SetShape union_shape = d.shape == SetShape::FROM || d.shape == SetShape::ONLY ? SetShape::FROM : SetShape::ALL;
    FamilyPointwiseResult r = converges_ae(fam, seq, limit);
    for (std::uint64_t N = 1; N <= horizon; ++N) {
        std::int64_t m = static_cast<std::int64_t>(N) + (d.shape == SetShape::FROM ? d.offset : 0);
        r.tail_unions.push_back(eval_family(fam, shape_at(union_shape, static_cast<std::uint64_t>(std::max<std::int64_t>(m, 1)))));
    }
    r.tail_union_limit = shape_limit(fam, union_shape);
    r.verdict = r.tail_union_limit.is_zero() ? ConvergenceVerdict::CONVERGES : ConvergenceVerdict::FAILS;
    return r;
}

// ---------------------------------------------------------------------------
// Convergence-theorem instances

enum class IntegralMode { CHOQUET, SHILKRET };

struct IntegralSpec {
    IntegralMode mode = IntegralMode::CHOQUET;
    Rational q = 1;  // Choquet exponent

    Value operator()(const Capacity& mu, const Function& f) const {
        if (mode == IntegralMode::SHILKRET) return shilkret(mu, f);
        return choquet(mu, f.pow(q));
    }
};

struct MonotoneInstance {
    std::vector<Value> values;  // I(μ, f_n) for n = 1..P+1
    Value target;               // I(μ, f)
};

namespace detail {

inline void require_monotone_autocontinuity_below(const Capacity& mu) {
    auto cert = check(mu, PropertyId::MONOTONE_AUTOCONT_BELOW);
    if (!cert.holds())
        throw HypothesisViolated("capacity is not monotone autocontinuous from below: mu(" +
                                 format_subset(cert.witness[1]) + ")=0 but mu(" + format_subset(cert.witness[0]) +
                                 " \\ " + format_subset(cert.witness[1]) + ") < mu(" + format_subset(cert.witness[0]) +
                                 ")");
}

inline void require_nonnegative_terms(const ExplicitSequence& seq, const Function& f) {
    require_nonnegative(f);
    for (const auto* part : {&seq.prefix(), &seq.cycle()})
        for (const auto& g : *part) require_nonnegative(g);
}

}  // namespace detail

/// Monotone nondecreasing a.u. convergence theorem instance: requires
/// f_n <= f_{n+1} <= f outside a null set for every n, and f_n → f a.u.
inline MonotoneInstance monotone_au_convergence_instance(const Capacity& mu, const ExplicitSequence& seq,
                                                         const Function& f, const IntegralSpec& integral) {
    detail::require_same_space(mu, f);
    detail::require_monotone_autocontinuity_below(mu);
    if (!seq.has_tail()) throw UndecidableAtHorizon("monotone convergence needs a declared cycle");
    detail::require_nonnegative_terms(seq, f);
    const std::size_t span = seq.prefix().size() + seq.cycle().size();
    for (std::size_t n = 1; n <= span; ++n) {
        const Function& a = seq.term(n);
        const Function& b = seq.term(n + 1);
        Mask bad = 0;
        for (int x = 0; x < f.size(); ++x)
            if (a[x] > b[x] || b[x] > f[x]) bad |= Mask{1} << x;
        if (!mu(bad).is_zero())
            throw HypothesisViolated("condition f_n <= f_{n+1} <= f fails on a non-null set at n = " +
                                     std::to_string(n));
    }
    if (!converges_au(mu, seq, f).exceptional_measure.is_zero())
        throw HypothesisViolated("sequence does not converge almost uniformly to f");

    MonotoneInstance r{{}, integral(mu, f)};
    for (std::size_t n = 1; n <= seq.prefix().size() + 1; ++n) r.values.push_back(integral(mu, seq.term(n)));
    for (std::size_t i = 1; i < r.values.size(); ++i)
        if (!approx_le(r.values[i - 1], r.values[i]))
            throw InequalityViolated("integrals of a nondecreasing sequence decreased");
    if (!approx_equal(r.values.back(), r.target))
        throw InequalityViolated("terminal integral " + r.values.back().to_string() + " differs from " +
                                 r.target.to_string());
    return r;
}

struct FatouInstance {
    Value lhs;      // I(μ, f)
    Value liminf;   // liminf I(μ, f_n)
    bool holds;     // lhs <= liminf
};

/// Fatou a.u. lemma instance: I(μ, f) <= liminf I(μ, f_n) for f_n → f a.u.
inline FatouInstance fatou_au_instance(const Capacity& mu, const ExplicitSequence& seq, const Function& f,
                                       const IntegralSpec& integral) {
    detail::require_same_space(mu, f);
    detail::require_monotone_autocontinuity_below(mu);
    detail::require_nonnegative_terms(seq, f);
    if (!converges_au(mu, seq, f).exceptional_measure.is_zero())
        throw HypothesisViolated("sequence does not converge almost uniformly to f");
    Value lhs = integral(mu, f);
    Value liminf = integral(mu, seq.cycle().front());
    for (const auto& g : seq.cycle()) liminf = min(liminf, integral(mu, g));
    if (!approx_le(lhs, liminf)) throw InequalityViolated("Fatou inequality failed: " + lhs.to_string() + " > " + liminf.to_string());
    return {lhs, liminf, true};
}

/// When μ is not monotone autocontinuous from below: A, null B with
/// μ(A \ B) < μ(A).  Then f_n = χ_{A∖B} → f = χ_A a.u. and f_n ≤ f, yet
/// I(μ, f_n) = μ(A∖B) stays strictly below I(μ, f) = μ(A), so both the
/// monotone theorem and the Fatou lemma fail.
struct NecessityWitness {
    Mask a;
    Mask b;
    Function fn;
    Function f;
    Value sequence_value;
    Value limit_value;
};

inline std::optional<NecessityWitness> hypothesis_necessity_witness(const Capacity& mu, const IntegralSpec& integral) {
    auto cert = check(mu, PropertyId::MONOTONE_AUTOCONT_BELOW);
    if (cert.holds()) return std::nullopt;
    Mask a = cert.witness[0];
    Mask b = cert.witness[1];
    Function fn = Function::indicator(mu.n(), a & ~b);
    Function f = Function::indicator(mu.n(), a);
    Value lhs = integral(mu, fn);
    Value rhs = integral(mu, f);
    return NecessityWitness{a, b, std::move(fn), std::move(f), std::move(lhs), std::move(rhs)};
}

}  // namespace nadd
