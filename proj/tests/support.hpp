#pragma once

// Random instance generators and brute-force oracles shared by the tests.
// The oracles deliberately avoid the library's decomposition code paths.

#include <random>
#include <vector>

#include "nadd/nadd.hpp"

namespace testing_support {

using namespace nadd;

inline Rational random_grid_value(std::mt19937_64& rng, int denom = 8, int max_num = 16) {
    return Rational(static_cast<long>(rng() % static_cast<unsigned>(max_num + 1)), denom);
}

/// Random monotone table: random grid values, repaired upward.
inline Capacity random_capacity(int n, std::mt19937_64& rng, int denom = 8, int max_num = 16) {
    FiniteSpace space(n);
    std::vector<Value> t(space.subset_count());
    for (Mask a = 1; a < space.subset_count(); ++a) t[a] = Value(random_grid_value(rng, denom, max_num));
    for (Mask a = 1; a < space.subset_count(); ++a)
        for (int x = 0; x < n; ++x)
            if (a & (Mask{1} << x)) t[a] = max(t[a], t[a & ~(Mask{1} << x)]);
    return build_capacity(space, t);
}

/// Strictly positive on nonempty sets, hence weakly null-additive with K* < inf.
inline Capacity random_positive_capacity(int n, std::mt19937_64& rng) {
    FiniteSpace space(n);
    std::vector<Value> t(space.subset_count());
    for (Mask a = 1; a < space.subset_count(); ++a) t[a] = Value(Rational(1 + static_cast<long>(rng() % 16), 8));
    for (Mask a = 1; a < space.subset_count(); ++a)
        for (int x = 0; x < n; ++x)
            if (a & (Mask{1} << x)) t[a] = max(t[a], t[a & ~(Mask{1} << x)]);
    return build_capacity(space, t);
}

/// μ(A) = ν(A \ Z) for a positive ν and a random null set Z: null-additive.
inline Capacity random_null_additive_capacity(int n, std::mt19937_64& rng) {
    Capacity nu = random_positive_capacity(n, rng);
    Mask z = static_cast<Mask>(rng() & full_mask(n));
    if (z == full_mask(n)) z &= ~Mask{1};
    std::vector<Value> t(nu.subset_count());
    for (Mask a = 0; a < nu.subset_count(); ++a) t[a] = nu(a & ~z);
    return build_capacity(nu.space(), t);
}

inline Function random_function(int n, std::mt19937_64& rng, bool nonnegative = true, int denom = 4, int max_num = 12) {
    std::vector<Value> v;
    for (int i = 0; i < n; ++i) {
        Rational x(static_cast<long>(rng() % static_cast<unsigned>(max_num + 1)), denom);
        if (!nonnegative && rng() % 2) x = -x;
        v.emplace_back(x);
    }
    return Function(v);
}

/// {x : h(x) > t}, computed pointwise.
inline Mask level_set(const Function& h, const Rational& t) {
    Mask m = 0;
    for (int i = 0; i < h.size(); ++i)
        if (h[i] > Value(t)) m |= Mask{1} << i;
    return m;
}

inline std::vector<Rational> sorted_levels(const Function& h) {
    std::vector<Rational> v{0};
    for (int i = 0; i < h.size(); ++i) v.push_back(h[i].rational());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// ∫_0^∞ μ({h > t}) dt, exact for step distributions: the integrand is constant
/// on each open gap between consecutive levels, so sample it at the midpoint.
inline Value choquet_sweep(const Capacity& mu, const Function& h) {
    auto lv = sorted_levels(h);
    Value sum(0);
    for (std::size_t k = 1; k < lv.size(); ++k) {
        Rational mid = (lv[k - 1] + lv[k]) / 2;
        sum += Value(Rational(lv[k] - lv[k - 1])) * mu(level_set(h, mid));
    }
    return sum;
}

/// sup_t t·μ({h > t}); on (c_{k-1}, c_k) the level set is constant, so the
/// sup over that gap is c_k times the midpoint level-set measure.
inline Value shilkret_sweep(const Capacity& mu, const Function& h) {
    auto lv = sorted_levels(h);
    Value best(0);
    for (std::size_t k = 1; k < lv.size(); ++k) {
        Rational mid = (lv[k - 1] + lv[k]) / 2;
        best = max(best, Value(lv[k]) * mu(level_set(h, mid)));
    }
    return best;
}

inline double to_d(const Value& v) { return v.to_double(); }

}  // namespace testing_support
