#pragma once

// Decision procedures for measure characteristics on a finite power-set σ-field.
//
// Finite-space reductions
// -----------------------
// Every monotone sequence of subsets of a finite set is eventually constant,
// and a sequence of values drawn from the finite range of μ tends to 0 only if
// it is eventually 0.  Consequently:
//
//  * CONT_FROM_BELOW, CONT_FROM_ABOVE, ORDER_CONTINUOUS,
//    STRONGLY_ORDER_CONTINUOUS, COND_ORDER_CONTINUOUS: A_n ↑ A or A_n ↓ A
//    forces A_n = A eventually, so μ(A_n) → μ(A).  Always hold.
//  * NULL_CONTINUOUS: a nondecreasing sequence of null sets has its largest
//    member as union, which is null.  Always holds.
//  * PROPERTY_C, PROPERTY_C0: if sup_l μ(E_k ∪ ... ∪ E_{k+l}) → 0 then the
//    sup is 0 for k >= k0; the union E_k ∪ E_{k+1} ∪ ... is one of these
//    finite unions, hence null.  Always hold.
//  * PROPERTY_S, PROPERTY_S1: if μ(A_n) → 0 then A_n is null for n >= n0 and
//    some null set N recurs infinitely often; the constant subsequence N has
//    null tail unions and null limsup.  Always hold.
//  * PGP and RELAXED_SUBADDITIVE (with unspecified K) are equivalent to
//    WEAK_NULL_ADDITIVE: choose δ below the least positive value of μ, and
//    K* < ∞ unless two disjoint null sets have a non-null union.
//  * AUTOCONT_ABOVE and MONOTONE_AUTOCONT_ABOVE reduce to μ(A ∪ B) = μ(A)
//    for all A and null B (take B_n = B constant), i.e. NULL_ADDITIVE.
//    AUTOCONT_BELOW and MONOTONE_AUTOCONT_BELOW reduce to μ(A \ B) = μ(A)
//    for all A and null B, which is equivalent to null-additivity as well.
//
// The remaining checks (WEAK_NULL_ADDITIVE, NULL_ADDITIVE, SUBADDITIVE,
// RELAXED_SUBADDITIVE(K)) enumerate their quantifier range exhaustively.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nadd/measure.hpp"

namespace nadd {

enum class PropertyId {
    WEAK_NULL_ADDITIVE,
    NULL_ADDITIVE,
    SUBADDITIVE,
    RELAXED_SUBADDITIVE,
    PGP,
    PROPERTY_S,
    PROPERTY_S1,
    PROPERTY_C,
    PROPERTY_C0,
    NULL_CONTINUOUS,
    ORDER_CONTINUOUS,
    STRONGLY_ORDER_CONTINUOUS,
    CONT_FROM_BELOW,
    CONT_FROM_ABOVE,
    COND_ORDER_CONTINUOUS,
    AUTOCONT_ABOVE,
    AUTOCONT_BELOW,
    MONOTONE_AUTOCONT_ABOVE,
    MONOTONE_AUTOCONT_BELOW,
};

inline constexpr PropertyId kAllProperties[] = {
    PropertyId::WEAK_NULL_ADDITIVE,      PropertyId::NULL_ADDITIVE,
    PropertyId::SUBADDITIVE,             PropertyId::RELAXED_SUBADDITIVE,
    PropertyId::PGP,                     PropertyId::PROPERTY_S,
    PropertyId::PROPERTY_S1,             PropertyId::PROPERTY_C,
    PropertyId::PROPERTY_C0,             PropertyId::NULL_CONTINUOUS,
    PropertyId::ORDER_CONTINUOUS,        PropertyId::STRONGLY_ORDER_CONTINUOUS,
    PropertyId::CONT_FROM_BELOW,         PropertyId::CONT_FROM_ABOVE,
    PropertyId::COND_ORDER_CONTINUOUS,   PropertyId::AUTOCONT_ABOVE,
    PropertyId::AUTOCONT_BELOW,          PropertyId::MONOTONE_AUTOCONT_ABOVE,
    PropertyId::MONOTONE_AUTOCONT_BELOW,
};

inline std::string_view property_name(PropertyId id) {
    switch (id) {
        case PropertyId::WEAK_NULL_ADDITIVE: return "WEAK_NULL_ADDITIVE";
        case PropertyId::NULL_ADDITIVE: return "NULL_ADDITIVE";
        case PropertyId::SUBADDITIVE: return "SUBADDITIVE";
        case PropertyId::RELAXED_SUBADDITIVE: return "RELAXED_SUBADDITIVE";
        case PropertyId::PGP: return "PGP";
        case PropertyId::PROPERTY_S: return "PROPERTY_S";
        case PropertyId::PROPERTY_S1: return "PROPERTY_S1";
        case PropertyId::PROPERTY_C: return "PROPERTY_C";
        case PropertyId::PROPERTY_C0: return "PROPERTY_C0";
        case PropertyId::NULL_CONTINUOUS: return "NULL_CONTINUOUS";
        case PropertyId::ORDER_CONTINUOUS: return "ORDER_CONTINUOUS";
        case PropertyId::STRONGLY_ORDER_CONTINUOUS: return "STRONGLY_ORDER_CONTINUOUS";
        case PropertyId::CONT_FROM_BELOW: return "CONT_FROM_BELOW";
        case PropertyId::CONT_FROM_ABOVE: return "CONT_FROM_ABOVE";
        case PropertyId::COND_ORDER_CONTINUOUS: return "COND_ORDER_CONTINUOUS";
        case PropertyId::AUTOCONT_ABOVE: return "AUTOCONT_ABOVE";
        case PropertyId::AUTOCONT_BELOW: return "AUTOCONT_BELOW";
        case PropertyId::MONOTONE_AUTOCONT_ABOVE: return "MONOTONE_AUTOCONT_ABOVE";
        case PropertyId::MONOTONE_AUTOCONT_BELOW: return "MONOTONE_AUTOCONT_BELOW";
    }
    return "?";
}

/// A property together with its parameter (only RELAXED_SUBADDITIVE takes one:
/// a fixed constant K, or none meaning "for some K >= 1").
struct PropertyQuery {
    PropertyId id;
    std::optional<Rational> constant;

    PropertyQuery(PropertyId id) : id(id) {}  // NOLINT(google-explicit-constructor)
    PropertyQuery(PropertyId id, Rational k) : id(id), constant(std::move(k)) {}

    std::string to_string() const {
        std::string s(property_name(id));
        if (constant) s += "(" + format_rational(*constant) + ")";
        return s;
    }
    friend bool operator==(const PropertyQuery&, const PropertyQuery&) = default;
};

/// Parses "NULL_ADDITIVE", "RELAXED_SUBADDITIVE" or "RELAXED_SUBADDITIVE(3/2)".
inline PropertyQuery parse_property(std::string_view text) {
    std::string_view s = detail::trim(text);
    std::optional<Rational> k;
    if (auto open = s.find('('); open != std::string_view::npos) {
        if (s.back() != ')') throw ParseError("malformed property '" + std::string(text) + "'");
        k = parse_rational(s.substr(open + 1, s.size() - open - 2));
        s = s.substr(0, open);
    }
    for (PropertyId id : kAllProperties) {
        if (property_name(id) == s) {
            if (k) {
                if (id != PropertyId::RELAXED_SUBADDITIVE)
                    throw ParseError("property " + std::string(s) + " takes no parameter");
                if (*k < 1) throw ParseError("relaxed subadditivity constant must be >= 1");
                return {id, *k};
            }
            return {id};
        }
    }
    throw ParseError("unknown property '" + std::string(text) + "'");
}

enum class Verdict { HOLDS, FAILS };

/// Outcome of a property check.  A FAILS certificate names the sets that
/// violate the defining condition (for sequence-based properties, the
/// constant sequence built from them), so it can be replayed.
struct PropertyCertificate {
    PropertyQuery property;
    Verdict verdict = Verdict::HOLDS;
    std::vector<Mask> witness;
    std::string detail;

    bool holds() const { return verdict == Verdict::HOLDS; }
};

namespace detail {

template <typename Visit>
bool for_each_disjoint_pair(Mask full, Visit&& visit) {
    for (Mask a = 1; a <= full; ++a) {
        Mask rest = full & ~a;
        for (Mask b = rest; b != 0; b = (b - 1) & rest)
            if (!visit(a, b)) return false;
    }
    return true;
}

inline PropertyCertificate fails(PropertyQuery q, std::vector<Mask> w, std::string why) {
    return {std::move(q), Verdict::FAILS, std::move(w), std::move(why)};
}

inline PropertyCertificate holds(PropertyQuery q, std::string range) {
    return {std::move(q), Verdict::HOLDS, {}, std::move(range)};
}

inline std::vector<Mask> null_sets(const Capacity& mu) {
    std::vector<Mask> out;
    for (Mask a = 0; a < mu.subset_count(); ++a)
        if (mu(a).is_zero()) out.push_back(a);
    return out;
}

inline std::optional<std::pair<Mask, Mask>> weak_null_additivity_failure(const Capacity& mu) {
    auto nulls = null_sets(mu);
    for (Mask a : nulls)
        for (Mask b : nulls)
            if (!mu(a | b).is_zero()) return std::pair{a, b};
    return std::nullopt;
}

inline std::optional<std::pair<Mask, Mask>> null_additivity_failure(const Capacity& mu) {
    for (Mask b : null_sets(mu))
        for (Mask a = 0; a < mu.subset_count(); ++a)
            if (!approx_equal(mu(a | b), mu(a))) return std::pair{a, b};
    return std::nullopt;
}

inline std::optional<std::pair<Mask, Mask>> autocontinuity_below_failure(const Capacity& mu) {
    for (Mask b : null_sets(mu))
        for (Mask a = 0; a < mu.subset_count(); ++a)
            if (!approx_equal(mu(a & ~b), mu(a))) return std::pair{a, b};
    return std::nullopt;
}

}  // namespace detail

/// Least K >= 1 with μ(A∪B) <= K(μ(A)+μ(B)) for all disjoint A, B; +inf when
/// two disjoint null sets have a non-null union.
inline Value minimal_relaxed_constant(const Capacity& mu) {
    Value best(1);
    bool infinite = false;
    detail::for_each_disjoint_pair(mu.full(), [&](Mask a, Mask b) {
        Value s = mu(a) + mu(b);
        const Value& u = mu(a | b);
        if (s.is_zero()) {
            if (!u.is_zero()) {
                infinite = true;
                return false;
            }
            return true;
        }
        if (s.is_infinite()) return true;
        best = max(best, u / s);
        return true;
    });
    return infinite ? Value::infinity() : best;
}

inline PropertyCertificate check(const Capacity& mu, const PropertyQuery& q) {
    using detail::fails;
    using detail::holds;
    switch (q.id) {
        case PropertyId::WEAK_NULL_ADDITIVE:
        case PropertyId::PGP:
            if (auto w = detail::weak_null_additivity_failure(mu))
                return fails(q, {w->first, w->second},
                             "mu(A)=mu(B)=0 but mu(A u B)=" + mu(w->first | w->second).to_string());
            return holds(q, "all pairs of null sets");
        case PropertyId::RELAXED_SUBADDITIVE: {
            if (!q.constant) {
                if (auto w = detail::weak_null_additivity_failure(mu)) {
                    Mask b = w->second & ~w->first;
                    return fails(q, {w->first, b}, "disjoint null sets with non-null union: K* = inf");
                }
                return holds(q, "all disjoint pairs (K* = " + minimal_relaxed_constant(mu).to_string() + ")");
            }
            Value k(*q.constant);
            std::optional<PropertyCertificate> bad;
            detail::for_each_disjoint_pair(mu.full(), [&](Mask a, Mask b) {
                if (!approx_le(mu(a | b), k * (mu(a) + mu(b)))) {
                    bad = fails(q, {a, b}, "mu(A u B)=" + mu(a | b).to_string() + " > K(mu(A)+mu(B))");
                    return false;
                }
                return true;
            });
            return bad ? *bad : holds(q, "all disjoint pairs");
        }
        case PropertyId::SUBADDITIVE: {
            std::optional<PropertyCertificate> bad;
            detail::for_each_disjoint_pair(mu.full(), [&](Mask a, Mask b) {
                if (!approx_le(mu(a | b), mu(a) + mu(b))) {
                    bad = fails(q, {a, b},
                                "mu(A u B)=" + mu(a | b).to_string() + " > " + (mu(a) + mu(b)).to_string());
                    return false;
                }
                return true;
            });
            return bad ? *bad : holds(q, "all disjoint pairs");
        }
        case PropertyId::NULL_ADDITIVE:
        case PropertyId::AUTOCONT_ABOVE:
        case PropertyId::MONOTONE_AUTOCONT_ABOVE:
            if (auto w = detail::null_additivity_failure(mu))
                return fails(q, {w->first, w->second},
                             "mu(B)=0 but mu(A u B)=" + mu(w->first | w->second).to_string() +
                                 " != mu(A)=" + mu(w->first).to_string());
            return holds(q, "all A and all null B");
        case PropertyId::AUTOCONT_BELOW:
        case PropertyId::MONOTONE_AUTOCONT_BELOW:
            if (auto w = detail::autocontinuity_below_failure(mu))
                return fails(q, {w->first, w->second},
                             "mu(B)=0 but mu(A \\ B)=" + mu(w->first & ~w->second).to_string() +
                                 " != mu(A)=" + mu(w->first).to_string());
            return holds(q, "all A and all null B");
        case PropertyId::PROPERTY_S:
        case PropertyId::PROPERTY_S1:
        case PropertyId::PROPERTY_C:
        case PropertyId::PROPERTY_C0:
        case PropertyId::NULL_CONTINUOUS:
        case PropertyId::ORDER_CONTINUOUS:
        case PropertyId::STRONGLY_ORDER_CONTINUOUS:
        case PropertyId::CONT_FROM_BELOW:
        case PropertyId::CONT_FROM_ABOVE:
        case PropertyId::COND_ORDER_CONTINUOUS:
            return holds(q, "finite sigma-field: every monotone or vanishing sequence is eventually constant");
    }
    throw std::logic_error("unhandled property");
}

/// Re-evaluates a FAILS witness against the literal defining condition.
/// Returns true when the witness exhibits a genuine violation.
inline bool replay(const Capacity& mu, const PropertyCertificate& cert) {
    if (cert.holds()) return false;
    if (cert.witness.size() != 2) return false;
    Mask a = cert.witness[0];
    Mask b = cert.witness[1];
    if (a >= mu.subset_count() || b >= mu.subset_count()) return false;
    switch (cert.property.id) {
        case PropertyId::WEAK_NULL_ADDITIVE:
        case PropertyId::PGP:
            // PGP: A_n = A, B_n = B gives μ(A_n) ∨ μ(B_n) → 0 while μ(A_n ∪ B_n) stays positive.
            return mu(a).is_zero() && mu(b).is_zero() && !mu(a | b).is_zero();
        case PropertyId::RELAXED_SUBADDITIVE:
            if ((a & b) != 0) return false;
            if (!cert.property.constant) return (mu(a) + mu(b)).is_zero() && !mu(a | b).is_zero();
            return !approx_le(mu(a | b), Value(*cert.property.constant) * (mu(a) + mu(b)));
        case PropertyId::SUBADDITIVE:
            return (a & b) == 0 && !approx_le(mu(a | b), mu(a) + mu(b));
        case PropertyId::NULL_ADDITIVE:
        case PropertyId::AUTOCONT_ABOVE:
        case PropertyId::MONOTONE_AUTOCONT_ABOVE:
            return mu(b).is_zero() && !approx_equal(mu(a | b), mu(a));
        case PropertyId::AUTOCONT_BELOW:
        case PropertyId::MONOTONE_AUTOCONT_BELOW:
            return mu(b).is_zero() && !approx_equal(mu(a & ~b), mu(a));
        default:
            return false;
    }
}

// ---------------------------------------------------------------------------
// Distortions θ∘λ

/// A nondecreasing map θ: [0, inf] → [0, inf] with θ(0) = 0.
struct Distortion {
    std::string name;
    std::function<Value(const Value&)> apply;

    static Distortion identity() {
        return {"identity", [](const Value& t) { return t; }};
    }
    /// t for t < threshold, 1 + t from the threshold on.
    static Distortion jump(Rational threshold = 1) {
        return {"jump", [threshold](const Value& t) { return t < Value(threshold) ? t : Value(1) + t; }};
    }
    /// tan(π t / 2) on [0, 1), +inf from 1 on.
    static Distortion tan_half_pi() {
        return {"tan_half_pi", [](const Value& t) {
                    if (t.is_zero()) return Value(0);
                    if (t >= Value(1)) return Value::infinity();
                    return Value::real(mp::tan(boost::math::constants::half_pi<Real>() * t.to_real()));
                }};
    }
    /// Piecewise-constant table: θ(t) = value at the largest key <= t.
    static Distortion table(std::vector<std::pair<Value, Value>> steps) {
        std::sort(steps.begin(), steps.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return {"table", [steps = std::move(steps)](const Value& t) {
                    Value out(0);
                    for (const auto& [key, v] : steps)
                        if (key <= t) out = v;
                    return out;
                }};
    }
};

/// (θ∘λ)(A) = θ(λ(A)).  θ must vanish at 0 and be nondecreasing on the range of λ.
inline Capacity distorted_capacity(const Capacity& lambda, const Distortion& theta) {
    if (!theta.apply(Value(0)).is_zero()) throw DistortionNotMonotone("distortion must satisfy theta(0) = 0");
    std::vector<Value> range(lambda.table().begin(), lambda.table().end());
    std::sort(range.begin(), range.end());
    range.erase(std::unique(range.begin(), range.end()), range.end());
    for (std::size_t i = 1; i < range.size(); ++i)
        if (!approx_le(theta.apply(range[i - 1]), theta.apply(range[i])))
            throw DistortionNotMonotone("distortion " + theta.name + " decreases between " +
                                        range[i - 1].to_string() + " and " + range[i].to_string());
    std::vector<Value> table;
    table.reserve(lambda.subset_count());
    for (const auto& v : lambda.table()) table.push_back(theta.apply(v));
    return Capacity::build(lambda.space(), std::move(table));
}

// ---------------------------------------------------------------------------
// Implication scanning

/// premise_1 ∧ ... ∧ premise_k ⇒ conclusion
struct Claim {
    std::vector<PropertyQuery> premise;
    PropertyQuery conclusion;

    std::string premise_text() const {
        std::string s;
        for (std::size_t i = 0; i < premise.size(); ++i) {
            if (i) s += "&";
            s += premise[i].to_string();
        }
        return s;
    }
};

inline Claim parse_claim(std::string_view premise, std::string_view conclusion) {
    Claim c{{}, parse_property(conclusion)};
    std::size_t start = 0;
    while (start <= premise.size()) {
        std::size_t amp = premise.find('&', start);
        if (amp == std::string_view::npos) amp = premise.size();
        c.premise.push_back(parse_property(premise.substr(start, amp - start)));
        start = amp + 1;
    }
    return c;
}

/// The implications stated among the measure characteristics, as scan claims.
inline std::vector<Claim> default_claims() {
    using P = PropertyId;
    auto claim = [](std::vector<PropertyQuery> pre, PropertyQuery post) { return Claim{std::move(pre), post}; };
    return {
        claim({P::AUTOCONT_ABOVE}, P::MONOTONE_AUTOCONT_ABOVE),
        claim({P::AUTOCONT_BELOW}, P::MONOTONE_AUTOCONT_BELOW),
        claim({P::MONOTONE_AUTOCONT_ABOVE}, P::NULL_ADDITIVE),
        claim({P::MONOTONE_AUTOCONT_BELOW}, P::NULL_ADDITIVE),
        claim({P::NULL_ADDITIVE}, P::WEAK_NULL_ADDITIVE),
        claim({P::PGP}, P::WEAK_NULL_ADDITIVE),
        claim({P::PROPERTY_S1}, P::PROPERTY_S),
        claim({P::CONT_FROM_BELOW, P::PGP}, P::PROPERTY_S1),
        claim({P::AUTOCONT_ABOVE, P::CONT_FROM_BELOW}, P::AUTOCONT_BELOW),
        claim({P::AUTOCONT_ABOVE, P::CONT_FROM_BELOW}, P::PROPERTY_S),
        claim({P::AUTOCONT_ABOVE, P::CONT_FROM_BELOW}, P::PGP),
        claim({P::CONT_FROM_BELOW}, P::NULL_CONTINUOUS),
        claim({P::PROPERTY_S}, P::NULL_CONTINUOUS),
        claim({P::WEAK_NULL_ADDITIVE, P::STRONGLY_ORDER_CONTINUOUS}, P::NULL_CONTINUOUS),
        claim({P::SUBADDITIVE}, PropertyQuery(P::RELAXED_SUBADDITIVE, Rational(1))),
        claim({P::SUBADDITIVE}, P::WEAK_NULL_ADDITIVE),
        claim({P::RELAXED_SUBADDITIVE}, P::PGP),
        claim({P::CONT_FROM_ABOVE}, P::STRONGLY_ORDER_CONTINUOUS),
        claim({P::STRONGLY_ORDER_CONTINUOUS}, P::ORDER_CONTINUOUS),
        claim({P::ORDER_CONTINUOUS}, P::COND_ORDER_CONTINUOUS),
        claim({P::CONT_FROM_BELOW}, P::PROPERTY_C),
        claim({P::PROPERTY_C}, P::PROPERTY_C0),
        claim({P::PROPERTY_C}, P::NULL_CONTINUOUS),
        claim({P::PROPERTY_C, P::PGP}, P::PROPERTY_S1),
    };
}

struct ClaimResult {
    Claim claim;
    std::vector<Capacity> violations;                // premise holds, conclusion fails
    std::vector<Capacity> converse_counterexamples;  // conclusion holds, premise fails
    std::size_t premise_count = 0;
    std::size_t violation_count = 0;
    std::size_t converse_count = 0;
};

struct ScanReport {
    int n = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<ClaimResult> claims;

    std::size_t total_violations() const {
        std::size_t t = 0;
        for (const auto& c : claims) t += c.violation_count;
        return t;
    }
    std::size_t total_converse_counterexamples() const {
        std::size_t t = 0;
        for (const auto& c : claims) t += c.converse_counterexamples.size();
        return t;
    }
};

/// Values a scan sample draws from before monotone repair.
inline std::vector<Rational> sampling_grid() {
    return {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1), Rational(3, 2), Rational(2)};
}

/// Draws every nonempty subset's value uniformly from the grid, then repairs
/// monotonicity by propagating maxima upward along the subset lattice.
inline Capacity sample_capacity(int n, std::mt19937_64& rng) {
    static const std::vector<Rational> grid = sampling_grid();
    FiniteSpace space(n);
    std::vector<Value> table(space.subset_count());
    for (Mask a = 1; a < space.subset_count(); ++a) table[a] = Value(grid[rng() % grid.size()]);
    for (Mask a = 1; a < space.subset_count(); ++a)
        for (Mask rest = a; rest != 0; rest &= rest - 1) {
            Mask below = a & ~(rest & -rest);
            if (table[a] < table[below]) table[a] = table[below];
        }
    return Capacity::build(space, std::move(table));
}

/// Samples random monotone tables on n points and tests each claim on every
/// sample.  Deterministic for a fixed seed; at most `keep` capacities are
/// stored per list (counts are always complete).
inline ScanReport implication_scan(int n, std::size_t samples, std::uint64_t seed, const std::vector<Claim>& claims,
                                   std::size_t keep = 3) {
    if (n < 1 || n > 6) throw ValidationError("implication scan supports 1 <= n <= 6");
    ScanReport report{n, samples, seed, {}};
    for (const auto& c : claims) report.claims.push_back({c, {}, {}, 0, 0, 0});

    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        Capacity mu = sample_capacity(n, rng);
        std::vector<std::pair<PropertyQuery, bool>> cache;
        auto verdict = [&](const PropertyQuery& q) {
            for (const auto& [key, v] : cache)
                if (key == q) return v;
            bool v = check(mu, q).holds();
            cache.emplace_back(q, v);
            return v;
        };
        for (auto& r : report.claims) {
            bool premise = std::all_of(r.claim.premise.begin(), r.claim.premise.end(), verdict);
            bool conclusion = verdict(r.claim.conclusion);
            if (premise) ++r.premise_count;
            if (premise && !conclusion) {
                ++r.violation_count;
                if (r.violations.size() < keep) r.violations.push_back(mu);
            }
            if (conclusion && !premise) {
                ++r.converse_count;
                bool seen = std::find(r.converse_counterexamples.begin(), r.converse_counterexamples.end(), mu) !=
                            r.converse_counterexamples.end();
                if (!seen && r.converse_counterexamples.size() < keep) r.converse_counterexamples.push_back(mu);
            }
        }
    }
    return report;
}

}  // namespace nadd
