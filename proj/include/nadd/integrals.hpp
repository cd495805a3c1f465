#pragma once

// Choquet and Shilkret integrals of nonnegative simple functions.
//
// Both integrals are functionals of the distribution t ↦ μ({h > t}).  For a
// simple h with distinct positive values c_1 < ... < c_n and upper level sets
// A_k = {h >= c_k} the distribution is a step function, and
//
//   Ch(μ,h) = Σ (c_k − c_{k−1}) μ(A_k),      Sh(μ,h) = max_k c_k μ(A_k).

#include <string>
#include <vector>

#include "nadd/function.hpp"
#include "nadd/measure.hpp"

namespace nadd {

/// h = Σ (c_k − c_{k−1}) χ_{A_k} with 0 = c_0 < c_1 < ... < c_n and A_1 ⊇ ... ⊇ A_n.
struct ComonotoneDecomposition {
    std::vector<Value> thresholds;  // c_1..c_n, strictly increasing, all > 0
    std::vector<Mask> chain;        // A_1..A_n, nonincreasing

    Function reconstruct(int n) const {
        std::vector<Value> v(static_cast<std::size_t>(n));
        Value prev(0);
        for (std::size_t k = 0; k < thresholds.size(); ++k) {
            Value step = thresholds[k] - prev;
            for (int x = 0; x < n; ++x)
                if (chain[k] & (Mask{1} << x)) v[static_cast<std::size_t>(x)] += step;
            prev = thresholds[k];
        }
        return Function(std::move(v));
    }
};

inline void require_nonnegative(const Function& h) {
    for (int x = 0; x < h.size(); ++x)
        if (h[x].sign() < 0)
            throw NegativeValue(x, "integrand is negative at element " + std::to_string(x) + " (" +
                                       h[x].to_string() + ")");
}

inline ComonotoneDecomposition decompose(const Function& h) {
    require_nonnegative(h);
    ComonotoneDecomposition d;
    for (const auto& c : h.distinct_values()) {
        if (c.is_zero()) continue;
        d.thresholds.push_back(c);
        d.chain.push_back(h.at_least(c));
    }
    return d;
}

namespace detail {
inline void require_same_space(const Capacity& mu, const Function& h) {
    if (h.size() != mu.n())
        throw ValidationError("function has " + std::to_string(h.size()) + " values but the ground set has " +
                              std::to_string(mu.n()) + " elements");
}
}  // namespace detail

inline Value choquet(const Capacity& mu, const Function& h) {
    detail::require_same_space(mu, h);
    auto d = decompose(h);
    Value sum(0);
    Value prev(0);
    for (std::size_t k = 0; k < d.thresholds.size(); ++k) {
        sum += (d.thresholds[k] - prev) * mu(d.chain[k]);
        prev = d.thresholds[k];
    }
    return sum;
}

inline Value shilkret(const Capacity& mu, const Function& h) {
    detail::require_same_space(mu, h);
    auto d = decompose(h);
    Value best(0);
    for (std::size_t k = 0; k < d.thresholds.size(); ++k) best = max(best, d.thresholds[k] * mu(d.chain[k]));
    return best;
}

/// Two evaluations of the same quantity and their distance.
struct IdentityCheck {
    Value lhs;
    Value rhs;
    Value gap;
    bool exact() const { return lhs.is_exact() && rhs.is_exact(); }
};

namespace detail {
inline Value gap_between(const Value& a, const Value& b) {
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() && b.is_infinite() ? Value(0) : Value::infinity();
    return abs(a - b);
}
}  // namespace detail

/// Ch(μ, h^p) against the threshold form Σ μ(A_k)(c_k^p − c_{k−1}^p) of ∫ p t^{p−1} μ({h>t}) dt.
inline IdentityCheck choquet_power_identity_check(const Capacity& mu, const Function& h, const Rational& p) {
    detail::require_same_space(mu, h);
    Value lhs = choquet(mu, h.pow(p));
    auto d = decompose(h);
    Value rhs(0);
    Value prev(0);
    for (std::size_t k = 0; k < d.thresholds.size(); ++k) {
        Value cp = pow(d.thresholds[k], p);
        rhs += mu(d.chain[k]) * (cp - prev);
        prev = cp;
    }
    return {lhs, rhs, detail::gap_between(lhs, rhs)};
}

/// Sh(μ, h^p) against Sh(μ^{1/p}, h)^p.
inline IdentityCheck shilkret_power_identity_check(const Capacity& mu, const Function& h, const Rational& p) {
    detail::require_same_space(mu, h);
    Value lhs = shilkret(mu, h.pow(p));
    Value rhs = pow(shilkret(power_capacity(mu, 1 / p), h), p);
    return {lhs, rhs, detail::gap_between(lhs, rhs)};
}

struct RelaxedSubadditivityRecord {
    Value choquet_sum, choquet_f, choquet_g;
    Value shilkret_sum, shilkret_f, shilkret_g;
};

/// Asserts Ch(μ,f+g) <= 2K{Ch(μ,f)+Ch(μ,g)} and the Shilkret twin for a K-relaxed subadditive μ.
inline RelaxedSubadditivityRecord relaxed_subadditivity_check(const Capacity& mu, const Value& K, const Function& f,
                                                              const Function& g) {
    if (K < Value(1)) throw ValidationError("relaxed subadditivity constant must be >= 1");
    RelaxedSubadditivityRecord r{choquet(mu, f + g),  choquet(mu, f),  choquet(mu, g),
                                 shilkret(mu, f + g), shilkret(mu, f), shilkret(mu, g)};
    Value two_k = Value(2) * K;
    if (!approx_le(r.choquet_sum, two_k * (r.choquet_f + r.choquet_g)))
        throw InequalityViolated("Ch(f+g)=" + r.choquet_sum.to_string() + " exceeds 2K(Ch f + Ch g)");
    if (!approx_le(r.shilkret_sum, two_k * (r.shilkret_f + r.shilkret_g)))
        throw InequalityViolated("Sh(f+g)=" + r.shilkret_sum.to_string() + " exceeds 2K(Sh f + Sh g)");
    return r;
}

struct TruncationRow {
    Value level;
    Value choquet;
    Value shilkret;
};

/// Ch(μ, h∧r) and Sh(μ, h∧r) for r running over the distinct positive values of h.
/// The rows are nondecreasing in r and the last one (r = max h) equals the untruncated
/// integrals, so the supremum over r > 0 is attained.
inline std::vector<TruncationRow> upper_marginal_continuity_check(const Capacity& mu, const Function& h) {
    require_nonnegative(h);
    std::vector<TruncationRow> rows;
    for (const auto& r : h.distinct_values()) {
        if (r.is_zero()) continue;
        Function clamped = h.clamp_above(r);
        rows.push_back({r, choquet(mu, clamped), shilkret(mu, clamped)});
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].choquet < rows[i - 1].choquet || rows[i].shilkret < rows[i - 1].shilkret)
            throw InequalityViolated("truncated integrals decreased in the truncation level");
    Value ch = choquet(mu, h);
    Value sh = shilkret(mu, h);
    Value ch_top = rows.empty() ? Value(0) : rows.back().choquet;
    Value sh_top = rows.empty() ? Value(0) : rows.back().shilkret;
    if (ch != ch_top || sh != sh_top)
        throw InequalityViolated("supremum of truncated integrals differs from the integral");
    return rows;
}

}  // namespace nadd
