#pragma once

// Closed-form capacities on countable (and one uncountable) space, used as
// exact counterexamples.  Sets are described symbolically; every evaluator is
// exact.
//
// Ground set for the countable families is ℕ = {1, 2, 3, ...}.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nadd/measure.hpp"
#include "nadd/properties.hpp"
#include "nadd/value.hpp"

namespace nadd {

/// An eventually periodic subset of ℕ: a finite part below a start index s,
/// then a pattern of period d repeated from s on.  Finite sets, cofinite sets,
/// tails and arithmetic progressions are all of this form, and the family is
/// closed under complement, union and intersection.  The representation is
/// normalised (least period, least start) so equality is structural.
class NatSet {
public:
    using Index = std::uint64_t;
    static constexpr Index kMaxPeriod = 4096;

    NatSet() = default;

    static NatSet empty() { return {}; }
    static NatSet all() { return tail(1); }
    static NatSet finite(const std::vector<Index>& elems) {
        NatSet s;
        for (Index i : elems) {
            if (i == 0) throw ValidationError("natural numbers start at 1");
            s.start_ = std::max(s.start_, i + 1);
        }
        s.head_.assign(s.start_ - 1, false);
        for (Index i : elems) s.head_[i - 1] = true;
        s.normalise();
        return s;
    }
    /// {k, k+1, ...}
    static NatSet tail(Index k) { return progression(k, 1); }
    /// {a, a+d, a+2d, ...}
    static NatSet progression(Index a, Index d) {
        if (a == 0) throw ValidationError("natural numbers start at 1");
        if (d == 0 || d > kMaxPeriod) throw ValidationError("progression step must lie in [1, 4096]");
        NatSet s;
        s.start_ = a;
        s.head_.assign(a - 1, false);
        s.pattern_.assign(d, false);
        s.pattern_[0] = true;
        s.normalise();
        return s;
    }
    /// ℕ \ E
    static NatSet cofinite(const std::vector<Index>& excluded) { return finite(excluded).complement(); }
    /// {a, ..., b}; empty when b < a.
    static NatSet range(Index a, Index b) {
        std::vector<Index> v;
        for (Index i = std::max<Index>(a, 1); i <= b; ++i) v.push_back(i);
        return finite(v);
    }

    bool contains(Index i) const {
        if (i == 0) return false;
        if (i < start_) return head_[i - 1];
        return pattern_[(i - start_) % pattern_.size()];
    }
    bool is_finite() const { return std::find(pattern_.begin(), pattern_.end(), true) == pattern_.end(); }
    bool is_empty() const { return is_finite() && std::find(head_.begin(), head_.end(), true) == head_.end(); }
    bool is_all() const { return start_ == 1 && pattern_.size() == 1 && pattern_[0]; }

    Index start() const { return start_; }
    Index period() const { return pattern_.size(); }
    /// Members below the periodic part.
    std::vector<Index> head() const {
        std::vector<Index> v;
        for (Index i = 1; i < start_; ++i)
            if (head_[i - 1]) v.push_back(i);
        return v;
    }
    /// Offsets r in [0, period) with s + r + kd in the set.
    std::vector<Index> pattern() const {
        std::vector<Index> v;
        for (Index r = 0; r < pattern_.size(); ++r)
            if (pattern_[r]) v.push_back(r);
        return v;
    }

    NatSet complement() const {
        return combine(*this, *this, [](bool a, bool) { return !a; });
    }
    friend NatSet operator|(const NatSet& a, const NatSet& b) {
        return combine(a, b, [](bool x, bool y) { return x || y; });
    }
    friend NatSet operator&(const NatSet& a, const NatSet& b) {
        return combine(a, b, [](bool x, bool y) { return x && y; });
    }
    friend NatSet operator-(const NatSet& a, const NatSet& b) {
        return combine(a, b, [](bool x, bool y) { return x && !y; });
    }
    friend NatSet operator^(const NatSet& a, const NatSet& b) {
        return combine(a, b, [](bool x, bool y) { return x != y; });
    }
    friend bool operator==(const NatSet&, const NatSet&) = default;

    bool subset_of(const NatSet& other) const { return (*this - other).is_empty(); }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        auto put = [&](Index i) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        };
        for (Index i : head()) put(i);
        if (!is_finite()) {
            // Two periods spell out the pattern.
            for (Index i = start_; i < start_ + 2 * period(); ++i)
                if (contains(i)) put(i);
            s += ",...";
        }
        return s + "}";
    }

private:
    template <typename Op>
    static NatSet combine(const NatSet& a, const NatSet& b, Op op) {
        NatSet s;
        s.start_ = std::max(a.start_, b.start_);
        Index d = std::lcm(a.period(), b.period());
        if (d > kMaxPeriod) throw UnsupportedSet("combined period exceeds 4096");
        s.head_.resize(s.start_ - 1);
        for (Index i = 1; i < s.start_; ++i) s.head_[i - 1] = op(a.contains(i), b.contains(i));
        s.pattern_.resize(d);
        for (Index r = 0; r < d; ++r) s.pattern_[r] = op(a.contains(s.start_ + r), b.contains(s.start_ + r));
        s.normalise();
        return s;
    }

    void normalise() {
        // Least period.
        const Index d = pattern_.size();
        for (Index e = 1; e < d; ++e) {
            if (d % e) continue;
            bool periodic = true;
            for (Index r = e; r < d && periodic; ++r) periodic = pattern_[r] == pattern_[r - e];
            if (periodic) {
                pattern_.resize(e);
                break;
            }
        }
        // Least start: pull head elements that continue the pattern into it.
        while (start_ > 1 && head_[start_ - 2] == pattern_.back()) {
            std::rotate(pattern_.rbegin(), pattern_.rbegin() + 1, pattern_.rend());
            head_.pop_back();
            --start_;
        }
    }

    Index start_ = 1;
    std::vector<bool> head_;                // membership of 1..start-1
    std::vector<bool> pattern_ = {false};   // membership of start + r, r mod period
};

/// An interval of the real line; an unset upper end means +inf.
struct Interval {
    Rational lo;
    std::optional<Rational> hi;
    bool lo_closed = true;
    bool hi_closed = false;

    /// Lebesgue measure of the interval intersected with [a, b] (b unset: +inf).
    Value length_within(const Rational& a, const std::optional<Rational>& b) const {
        Rational left = std::max(lo, a);
        std::optional<Rational> right = hi;
        if (b) right = right ? std::min(*right, *b) : *b;
        if (!right) return Value::infinity();
        return *right > left ? Value(Rational(*right - left)) : Value(0);
    }
    Value length() const {
        if (!hi) return Value::infinity();
        return *hi > lo ? Value(Rational(*hi - lo)) : Value(0);
    }
    std::string to_string() const {
        return std::string(lo_closed ? "[" : "(") + format_rational(lo) + ", " + (hi ? format_rational(*hi) : "inf") +
               (hi && hi_closed ? "]" : ")");
    }
};

using SetDescriptor = std::variant<NatSet, Interval>;

enum class FamilyId { COUNTER1, COUNTER2_JUMP, COUNTER3_THREE_VALUED, WEAK_L1_RECIPROCAL, COUNTER2_LEBESGUE };

inline std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::COUNTER1: return "COUNTER1";
        case FamilyId::COUNTER2_JUMP: return "COUNTER2_JUMP";
        case FamilyId::COUNTER3_THREE_VALUED: return "COUNTER3_THREE_VALUED";
        case FamilyId::WEAK_L1_RECIPROCAL: return "WEAK_L1_RECIPROCAL";
        case FamilyId::COUNTER2_LEBESGUE: return "COUNTER2_LEBESGUE";
    }
    return "?";
}

inline FamilyId parse_family(std::string_view s) {
    for (FamilyId id : {FamilyId::COUNTER1, FamilyId::COUNTER2_JUMP, FamilyId::COUNTER3_THREE_VALUED,
                        FamilyId::WEAK_L1_RECIPROCAL, FamilyId::COUNTER2_LEBESGUE})
        if (family_name(id) == s) return id;
    if (s == "COUNTER2") return FamilyId::COUNTER2_JUMP;
    if (s == "COUNTER3") return FamilyId::COUNTER3_THREE_VALUED;
    throw ParseError("unknown family '" + std::string(s) + "'");
}

/// ν ↦ ν if ν < 1, 1 + ν otherwise.
inline Value jump_at_one(const Value& nu) { return nu < Value(1) ? nu : Value(1) + nu; }

/// Σ_{i ∈ A} 2^{-i}, summing each periodic residue class as a geometric series.
inline Rational dyadic_mass(const NatSet& s) {
    auto inv_pow2 = [](NatSet::Index i) { return Rational(Integer(1), Integer(1) << static_cast<unsigned>(i)); };
    Rational sum = 0;
    for (auto i : s.head()) sum += inv_pow2(i);
    Integer two_d = Integer(1) << static_cast<unsigned>(s.period());
    for (auto r : s.pattern()) sum += inv_pow2(s.start() + r) * Rational(two_d, two_d - 1);
    return sum;
}

/// A catalog capacity.
///   COUNTER1              on ℕ: Σ_{i∈A} 2^{-i}, plus 1 when A is infinite.
///   COUNTER2_JUMP         on ℕ: jump_at_one(ν), ν({i}) = scale·2^{-i}.
///   COUNTER3_THREE_VALUED on ℕ: 0 on ∅, 1 on ℕ, 1/2 otherwise.
///   WEAK_L1_RECIPROCAL    on (0,1]: Lebesgue measure λ.
///   COUNTER2_LEBESGUE     on ℝ: jump_at_one(λ).
struct CountableFamily {
    FamilyId id = FamilyId::COUNTER1;
    Rational scale = 1;  // COUNTER2_JUMP only

    static CountableFamily counter1() { return {FamilyId::COUNTER1, 1}; }
    static CountableFamily counter2(Rational s = 1) {
        if (s <= 0) throw ValidationError("COUNTER2 scale must be positive");
        return {FamilyId::COUNTER2_JUMP, std::move(s)};
    }
    static CountableFamily counter3() { return {FamilyId::COUNTER3_THREE_VALUED, 1}; }
    static CountableFamily weak_l1() { return {FamilyId::WEAK_L1_RECIPROCAL, 1}; }
    static CountableFamily counter2_lebesgue() { return {FamilyId::COUNTER2_LEBESGUE, 1}; }

    bool on_naturals() const {
        return id == FamilyId::COUNTER1 || id == FamilyId::COUNTER2_JUMP || id == FamilyId::COUNTER3_THREE_VALUED;
    }
};

inline Value eval_family(const CountableFamily& fam, const NatSet& s) {
    switch (fam.id) {
        case FamilyId::COUNTER1:
            if (s.is_empty()) return Value(0);
            return Value(Rational(dyadic_mass(s) + (s.is_finite() ? 0 : 1)));
        case FamilyId::COUNTER2_JUMP:
            return jump_at_one(Value(Rational(fam.scale * dyadic_mass(s))));
        case FamilyId::COUNTER3_THREE_VALUED:
            if (s.is_empty()) return Value(0);
            return s.is_all() ? Value(1) : Value(Rational(1, 2));
        default:
            throw UnsupportedSet(family_name(fam.id) + " is not defined on subsets of the naturals");
    }
}

inline Value eval_family(const CountableFamily& fam, const Interval& s) {
    switch (fam.id) {
        case FamilyId::WEAK_L1_RECIPROCAL: return s.length_within(Rational(0), Rational(1));
        case FamilyId::COUNTER2_LEBESGUE: return jump_at_one(s.length());
        default: throw UnsupportedSet(family_name(fam.id) + " is not defined on intervals");
    }
}

inline Value eval_family(const CountableFamily& fam, const SetDescriptor& s) {
    return std::visit([&](const auto& d) { return eval_family(fam, d); }, s);
}

/// (μ ∧ s)(A) = min(μ(A), s) for a catalog capacity.
inline Value eval_family_min(const CountableFamily& fam, const SetDescriptor& set, const Value& s) {
    return min(eval_family(fam, set), s);
}

/// The finite capacity A ↦ μ({e_i : i ∈ A}) induced on the listed naturals
/// e_0, ..., e_{n-1}; element i of the finite space stands for e_i.
inline Capacity restrict_to_finite(const CountableFamily& fam, const std::vector<NatSet::Index>& elements) {
    FiniteSpace space(static_cast<int>(elements.size()));
    std::vector<Value> table(space.subset_count());
    for (Mask a = 0; a < space.subset_count(); ++a) {
        std::vector<NatSet::Index> members;
        for (int i : elements_of(a)) members.push_back(elements[static_cast<std::size_t>(i)]);
        table[a] = eval_family(fam, NatSet::finite(members));
    }
    return build_capacity(space, std::move(table));
}

/// Stated verdicts for a family, with the set sequence that witnesses each failure.
struct FamilyMetadata {
    struct Entry {
        PropertyId property;
        Verdict verdict;
        std::string witness;
    };
    CountableFamily family;
    std::vector<Entry> entries;
};

inline FamilyMetadata family_metadata(const CountableFamily& fam) {
    using P = PropertyId;
    const auto H = Verdict::HOLDS;
    const auto F = Verdict::FAILS;
    switch (fam.id) {
        case FamilyId::COUNTER1:
            return {fam,
                    {{P::SUBADDITIVE, H, ""},
                     {P::WEAK_NULL_ADDITIVE, H, ""},
                     {P::NULL_CONTINUOUS, H, ""},
                     {P::PGP, H, ""},
                     {P::PROPERTY_S, H, ""},
                     {P::CONT_FROM_BELOW, F, "A_n = {1..n}: mu(A_n) -> 1, mu(N) = 2"},
                     {P::ORDER_CONTINUOUS, F, "A_n = {n,n+1,...} decreases to the empty set, mu(A_n) > 1"},
                     {P::PROPERTY_C, F, "E_n = {n}: finite unions from k have sup 2^{1-k}, tail union 1 + 2^{1-k}"},
                     {P::PROPERTY_S1, F, "A_n = {n}: every tail union of a subsequence is infinite, mu > 1"}}};
        case FamilyId::COUNTER2_JUMP:
        case FamilyId::COUNTER2_LEBESGUE:
        case FamilyId::COUNTER3_THREE_VALUED:
            return {fam,
                    {{P::PROPERTY_C, H, ""},
                     {P::PGP, H, ""},
                     {P::NULL_ADDITIVE, H, ""},
                     {P::NULL_CONTINUOUS, H, ""},
                     {P::CONT_FROM_BELOW, F,
                      fam.id == FamilyId::COUNTER3_THREE_VALUED
                          ? "A_n = {1..n} increases to N, mu(A_n) = 1/2, mu(N) = 1"
                          : "chain crossing base measure 1 from below: mu(A_n) -> 1, limit set has mu = 2"}}};
        case FamilyId::WEAK_L1_RECIPROCAL:
            return {fam,
                    {{P::SUBADDITIVE, H, ""},
                     {P::NULL_ADDITIVE, H, ""},
                     {P::CONT_FROM_BELOW, H, ""},
                     {P::CONT_FROM_ABOVE, H, ""}}};
    }
    return {fam, {}};
}

struct PropertyCRow {
    std::uint64_t k;
    std::vector<Value> finite_unions;  // μ({k..k+l}) for l = 0..l_max
    Value finite_union_sup;             // sup over l (a limit, not attained)
    Value tail_union;                   // μ({k, k+1, ...})
};

/// E_n = {n} under COUNTER1: the finite unions from k have supremum 2^{1-k} → 0,
/// while the tail union has measure 1 + 2^{1-k} → 1.
inline std::vector<PropertyCRow> property_c_witness(std::uint64_t k_max, std::uint64_t l_max = 8) {
    if (k_max < 1) throw ValidationError("k_max must be at least 1");
    const auto mu = CountableFamily::counter1();
    std::vector<PropertyCRow> rows;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        PropertyCRow row{k, {}, Value(Rational(Integer(2), Integer(1) << static_cast<unsigned>(k))),
                         eval_family(mu, NatSet::tail(k))};
        for (std::uint64_t l = 0; l <= l_max; ++l) row.finite_unions.push_back(eval_family(mu, NatSet::range(k, k + l)));
        rows.push_back(std::move(row));
    }
    return rows;
}

struct CauchyWitness {
    Value cauchy_term;       // μ({|f_{n+l} − f_n| > ε}) = μ({n+1..n+l})
    Value nonconvergence;    // μ({|f_n − 1| > 1/2}) = μ({n+1, n+2, ...})
    Value nonconvergence_limit;
};

/// f_n = χ_{{1..n}} under COUNTER1: Cauchy in measure but not convergent.
inline CauchyWitness cauchy_not_convergent_witness(std::uint64_t n, std::uint64_t l, const Rational& eps) {
    if (n < 1) throw ValidationError("n must be at least 1");
    if (eps <= 0 || eps >= 1) throw ValidationError("eps must lie in (0, 1)");
    const auto mu = CountableFamily::counter1();
    // |f_{n+l} − f_n| = χ_{{n+1..n+l}} takes values in {0,1}, so the level set above ε < 1 is that block.
    return {eval_family(mu, NatSet::range(n + 1, n + l)), eval_family(mu, NatSet::tail(n + 1)), Value(1)};
}

struct WeakL1Witness {
    Rational r0;
    Value below_one;  // sup over t <= 1 − r0 of t·λ(...) = 1 − r0 (0 when r0 >= 1)
    Value value;      // Sh(λ, (f − r0)^+)
    bool attained;    // the supremum is a maximum only when r0 = 0
};

/// Sh(λ, (1/x − r0)^+) on (0,1].  For t >= 0 the level set is
/// (0, min(1, 1/(t + r0))), so t·λ = t on t <= 1 − r0 and t/(t + r0) beyond,
/// which increases to 1.
inline WeakL1Witness weak_l1_nondensity_witness(const Rational& r0) {
    if (r0 < 0) throw ValidationError("r0 must be nonnegative");
    Value below = r0 < 1 ? Value(Rational(1 - r0)) : Value(0);
    return {r0, below, max(below, Value(1)), r0 == 0};
}

/// Lower bound ‖1/x − h‖_{1,∞} >= 1 for a simple h, via |f − h| >= (f − max|h|)^+.
inline WeakL1Witness weak_l1_distance_lower_bound(const std::vector<Rational>& h_values) {
    Rational r0 = 0;
    for (const auto& v : h_values) r0 = std::max(r0, Rational(mp::abs(v)));
    return weak_l1_nondensity_witness(r0);
}

struct StarStarRefutation {
    Rational delta;
    Rational delta0;      // (1 ∧ δ)/2
    Value sup_piece;      // sup_n μ(E_n)
    Value union_value;    // μ(⋃ E_n)
    std::vector<Value> partial_unions;  // μ(E_1 ∪ ... ∪ E_N)
};

/// Jump capacity over Lebesgue measure: E_n = [(n−1)δ₀, nδ₀) all have μ < δ but
/// their union [0, ∞) has measure ∞.
inline StarStarRefutation star_star_refutation(const Rational& delta, std::uint64_t n_max = 8) {
    if (delta <= 0) throw ValidationError("delta must be positive");
    const auto mu = CountableFamily::counter2_lebesgue();
    Rational d0 = std::min(Rational(1), delta) / 2;
    StarStarRefutation r{delta, d0, Value(0), eval_family(mu, Interval{Rational(0), std::nullopt, true, false}), {}};
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        Interval e{Rational(n - 1) * d0, Rational(n) * d0, true, false};
        r.sup_piece = max(r.sup_piece, eval_family(mu, e));
        r.partial_unions.push_back(eval_family(mu, Interval{Rational(0), Rational(n) * d0, true, false}));
    }
    return r;
}

/// μ(⋃ E_n) <= 2 sup μ(E_n) for COUNTER3 on a finite list of sets.
inline bool counter3_union_bound(const std::vector<NatSet>& sets) {
    const auto mu = CountableFamily::counter3();
    NatSet u;
    Value sup(0);
    for (const auto& s : sets) {
        u = u | s;
        sup = max(sup, eval_family(mu, s));
    }
    return eval_family(mu, u) <= Value(2) * sup;
}

}  // namespace nadd
