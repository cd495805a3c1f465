#pragma once

// Capacities (nonadditive measures) on the power set of a finite ground set.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nadd/function.hpp"
#include "nadd/value.hpp"

namespace nadd {

/// Ground set {0, ..., n-1} with its full power set as σ-field.
class FiniteSpace {
public:
    explicit FiniteSpace(int n) : n_(n) {
        if (n < 1 || n > kMaxGroundSet)
            throw ValidationError("ground-set size must lie in [1, " + std::to_string(kMaxGroundSet) +
                                  "], got " + std::to_string(n));
    }
    int n() const { return n_; }
    Mask full() const { return full_mask(n_); }
    std::size_t subset_count() const { return std::size_t{1} << n_; }
    friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

private:
    int n_;
};

/// A grounded, monotone set function stored as a dense table indexed by subset mask.
/// Immutable once built; every instance has passed validation.
class Capacity {
public:
    /// Validates μ(∅) = 0 and μ(A) <= μ(A ∪ {x}) over all covering pairs.
    /// Float-tier entries are compared with kFloatTolerance.
    static Capacity build(FiniteSpace space, std::vector<Value> table) {
        if (table.size() != space.subset_count())
            throw ValidationError("capacity table needs " + std::to_string(space.subset_count()) +
                                  " entries, got " + std::to_string(table.size()));
        if (!table[0].is_zero())
            throw NonzeroEmptySet("capacity must vanish on the empty set, got " + table[0].to_string());
        const int n = space.n();
        for (Mask a = 0; a < space.subset_count(); ++a) {
            for (int x = 0; x < n; ++x) {
                Mask bit = Mask{1} << x;
                if (a & bit) continue;
                if (!approx_le(table[a], table[a | bit]))
                    throw MonotonicityViolation(a, a | bit,
                                                "monotonicity violated: mu(" + format_subset(a) + ")=" +
                                                    table[a].to_string() + " > mu(" + format_subset(a | bit) +
                                                    ")=" + table[a | bit].to_string());
            }
        }
        return Capacity(space, std::move(table));
    }

    FiniteSpace space() const { return space_; }
    int n() const { return space_.n(); }
    Mask full() const { return space_.full(); }
    std::size_t subset_count() const { return table_.size(); }

    const Value& operator()(Mask a) const { return table_[a]; }
    std::span<const Value> table() const { return table_; }

    bool is_exact() const {
        for (const auto& v : table_)
            if (!v.is_exact()) return false;
        return true;
    }

    friend bool operator==(const Capacity& a, const Capacity& b) {
        return a.space_ == b.space_ && a.table_ == b.table_;
    }

private:
    Capacity(FiniteSpace space, std::vector<Value> table) : space_(space), table_(std::move(table)) {}

    FiniteSpace space_;
    std::vector<Value> table_;
};

inline Capacity build_capacity(FiniteSpace space, std::vector<Value> table) {
    return Capacity::build(space, std::move(table));
}

/// Sparse form: every subset must be present, there is no defaulting.
inline Capacity build_capacity(FiniteSpace space, const std::map<Mask, Value>& table) {
    std::vector<Value> dense(space.subset_count());
    std::vector<bool> seen(space.subset_count(), false);
    for (const auto& [mask, value] : table) {
        if (mask >= space.subset_count()) throw ValidationError("subset " + format_subset(mask) + " outside ground set");
        dense[mask] = value;
        seen[mask] = true;
    }
    for (Mask a = 0; a < space.subset_count(); ++a)
        if (!seen[a]) throw ValidationError("capacity table omits subset " + format_subset(a));
    return Capacity::build(space, std::move(dense));
}

/// σ-additive capacity with the given point masses.
inline Capacity additive_capacity(const std::vector<Value>& point_mass) {
    FiniteSpace space(static_cast<int>(point_mass.size()));
    std::vector<Value> table(space.subset_count());
    for (Mask a = 1; a < space.subset_count(); ++a) {
        int low = std::countr_zero(a);
        table[a] = table[a & (a - 1)] + point_mass[static_cast<std::size_t>(low)];
    }
    return Capacity::build(space, std::move(table));
}

/// μ^r(A) = μ(A)^r.  Entries stay exact where the power is rational.
inline Capacity power_capacity(const Capacity& mu, const Rational& r) {
    if (r <= 0) throw ValidationError("power exponent must be positive");
    std::vector<Value> table;
    table.reserve(mu.subset_count());
    for (const auto& v : mu.table()) table.push_back(pow(v, r));
    return Capacity::build(mu.space(), std::move(table));
}

/// (μ ∧ s)(A) = min(μ(A), s).
inline Capacity capacity_min(const Capacity& mu, const Value& s) {
    std::vector<Value> table;
    table.reserve(mu.subset_count());
    for (const auto& v : mu.table()) table.push_back(min(v, s));
    return Capacity::build(mu.space(), std::move(table));
}

}  // namespace nadd
