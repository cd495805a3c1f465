#pragma once

// Prenorms on functions over a finite capacity space, the a.e.-equality
// relation, and the rational-coefficient approximation used for separability.
//
// On a finite space c ↦ μ({|f|>c}) is a right-continuous step function whose
// breakpoints are the distinct values of |f|.  Every infimum over c > 0 below
// is therefore attained at a breakpoint or approached as c ↓ 0.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nadd/integrals.hpp"
#include "nadd/properties.hpp"

namespace nadd {

/// Prenorm values carry their own exactness flag (Value::is_exact()).
using PrenormValue = Value;

/// Increasing, subadditive φ with φ(0) = 0 and φ(t) <= t, extended by φ(∞) = cap.
class PhiFunction {
public:
    enum class Kind { RATIONAL_T_OVER_1PT, ARCTAN, CUSTOM };

    static PhiFunction rational() { return PhiFunction(Kind::RATIONAL_T_OVER_1PT, "t/(1+t)", Value(1), nullptr); }
    static PhiFunction arctan() {
        return PhiFunction(Kind::ARCTAN, "arctan", Value::real(boost::math::constants::half_pi<Real>()), nullptr);
    }
    /// `fn` is evaluated on finite arguments only; `cap` is its value at +inf.
    static PhiFunction custom(std::string name, std::function<Value(const Value&)> fn, Value cap) {
        return PhiFunction(Kind::CUSTOM, std::move(name), std::move(cap), std::move(fn));
    }

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const Value& cap() const { return cap_; }

    Value operator()(const Value& t) const {
        if (t.sign() < 0) throw std::domain_error("phi is defined on [0, inf]");
        if (t.is_infinite()) return cap_;
        if (t.is_zero()) return Value(0);
        switch (kind_) {
            case Kind::RATIONAL_T_OVER_1PT: return t / (Value(1) + t);
            case Kind::ARCTAN: return Value::real(mp::atan(t.to_real()));
            case Kind::CUSTOM: return fn_(t);
        }
        return cap_;
    }

private:
    PhiFunction(Kind k, std::string name, Value cap, std::function<Value(const Value&)> fn)
        : kind_(k), name_(std::move(name)), cap_(std::move(cap)), fn_(std::move(fn)) {}

    Kind kind_;
    std::string name_;
    Value cap_;
    std::function<Value(const Value&)> fn_;
};

/// Exponents of the Lorentz prenorm; q unset means q = ∞ (the weak space).
struct LorentzParams {
    Rational p;
    std::optional<Rational> q;

    LorentzParams(Rational p_, std::optional<Rational> q_) : p(std::move(p_)), q(std::move(q_)) {
        if (p <= 0) throw ValidationError("Lorentz exponent p must be positive");
        if (q && *q <= 0) throw ValidationError("Lorentz exponent q must be positive");
    }
    bool weak() const { return !q.has_value(); }
};

/// ⟨f⟩ = inf_{c>0} φ(c + μ({|f|>c})).
inline PrenormValue l0_prenorm(const Capacity& mu, const Function& f, const PhiFunction& phi = PhiFunction::rational()) {
    detail::require_same_space(mu, f);
    Function a = f.abs();
    Value best = phi(mu(a.greater(Value(0))));
    for (const auto& v : a.distinct_values()) {
        if (v.is_zero()) continue;
        Value candidate = phi(v + mu(a.greater(v)));
        if (candidate < best) best = candidate;
    }
    return best;
}

/// ‖f‖_{p,∞} = Sh(μ^{1/p}, |f|).
inline PrenormValue lorentz_weak_prenorm(const Capacity& mu, const Function& f, const Rational& p) {
    if (p <= 0) throw ValidationError("Lorentz exponent p must be positive");
    return shilkret(power_capacity(mu, 1 / p), f.abs());
}

/// ‖f‖_{p,q} = (p/q)^{1/q} Ch(μ^{q/p}, |f|^q)^{1/q}; q = ∞ gives the weak prenorm.
inline PrenormValue lorentz_pq_prenorm(const Capacity& mu, const Function& f, const LorentzParams& params) {
    if (params.weak()) return lorentz_weak_prenorm(mu, f, params.p);
    const Rational& p = params.p;
    const Rational& q = *params.q;
    Value integral = choquet(power_capacity(mu, q / p), f.abs().pow(q));
    return pow(Value(p / q), 1 / q) * pow(integral, 1 / q);
}

/// ‖f‖_∞ = inf{c > 0 : μ({|f|>c}) = 0}.
inline PrenormValue ess_sup_prenorm(const Capacity& mu, const Function& f) {
    detail::require_same_space(mu, f);
    Function a = f.abs();
    if (mu(a.greater(Value(0))).is_zero()) return Value(0);
    for (const auto& v : a.distinct_values())
        if (mu(a.greater(v)).is_zero()) return v;
    throw NoFiniteBound("no level c with mu({|f|>c}) = 0");
}

/// {x : f(x) ≠ g(x)}
inline Mask disagreement_set(const Function& f, const Function& g) {
    if (f.size() != g.size()) throw ValidationError("functions live on ground sets of different sizes");
    Mask m = 0;
    for (int i = 0; i < f.size(); ++i)
        if (f[i] != g[i]) m |= Mask{1} << i;
    return m;
}

/// f ∼ g: μ({|f−g| > c}) = 0 for every c > 0, i.e. μ({f ≠ g}) = 0 on a finite space.
inline bool equivalent(const Capacity& mu, const Function& f, const Function& g) {
    detail::require_same_space(mu, f);
    return mu(disagreement_set(f, g)).is_zero();
}

/// The three functions exhibiting non-transitivity of ∼ for null A, B with μ(A ∪ B) > 0.
inline std::vector<Function> transitivity_witness(int n, Mask a, Mask b) {
    return {Function::indicator(n, a), Function::zero(n), Function::indicator(n, b & ~a, Value(-1))};
}

/// Partitions `fns` into ∼-classes, returned as lists of input indices ordered
/// by first occurrence.  Requires μ weakly null-additive, which makes ∼ transitive.
inline std::vector<std::vector<std::size_t>> quotient_classes(const Capacity& mu, const std::vector<Function>& fns) {
    auto cert = check(mu, PropertyId::WEAK_NULL_ADDITIVE);
    if (!cert.holds())
        throw NotTransitive(cert.witness[0], cert.witness[1],
                            "capacity is not weakly null-additive: " + format_subset(cert.witness[0]) + " and " +
                                format_subset(cert.witness[1]) + " are null but their union is not");
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        bool placed = false;
        for (auto& cls : classes) {
            if (equivalent(mu, fns[cls.front()], fns[i])) {
                cls.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }
    return classes;
}

/// ψ = Σ r_k χ_{D_k} together with its distance to the target.
struct LorentzApproximation {
    std::vector<Rational> coefficients;  // r_k
    std::vector<Mask> sets;              // D_k, drawn from the basis
    Function psi;
    PrenormValue distance;  // ‖f − ψ‖_{p,q}
};

namespace detail {

// Smallest-denominator dyadic m/2^j within `tol` of x.
inline Rational dyadic_within(const Value& x, const Real& tol) {
    if (x.is_rational()) return x.rational();
    Real xr = x.to_real();
    for (unsigned j = 0; j < 4096; ++j) {
        Real scale = mp::ldexp(Real(1), static_cast<int>(j));
        Real m = mp::round(xr * scale);
        if (mp::abs(xr - m / scale) < tol)
            return Rational(m.convert_to<Integer>(), Integer(1) << j);
    }
    throw InequalityViolated("could not rationalize coefficient " + x.to_string());
}

inline Real to_real_checked(const Value& v) {
    if (v.is_infinite()) throw HypothesisViolated("infinite constant in approximation bound");
    return v.to_real();
}

}  // namespace detail

/// Approximates f in ‖·‖_{p,q} (q finite) by a rational combination of basis
/// indicators, in three steps:
///   1. ξ = Σ c_k χ_{A_k} over the distinct nonzero values c_k of f;
///   2. r_k rational with |c_k − r_k| < ε'/(3L^{n+3}(1 + Σ ν(A_k)^{1/q}));
///   3. D_k from the basis minimising ν(A_k △ D_k), which must stay below
///      (ε'/(3L^{n+3}(1 + Σ|r_k|)))^q,
/// where ν = μ^{q/p}, ε' = ε/(p/q)^{1/q}, K is the least relaxed-subadditivity
/// constant of ν and L = 2^{1+2/q}K^{1/q}.
inline LorentzApproximation approximate_lorentz(const Capacity& mu, const Function& f, const Value& eps,
                                                const LorentzParams& params, const std::vector<Mask>& basis) {
    detail::require_same_space(mu, f);
    if (params.weak()) throw ValidationError("approximation needs a finite exponent q");
    if (eps.sign() <= 0 || eps.is_infinite()) throw ValidationError("eps must be a positive real");
    const Rational& p = params.p;
    const Rational& q = *params.q;
    const int n_space = mu.n();
    for (Mask d : basis)
        if (d > mu.full()) throw ValidationError("basis set " + format_subset(d) + " outside ground set");

    Capacity nu = power_capacity(mu, q / p);
    Value K = minimal_relaxed_constant(nu);
    if (K.is_infinite())
        throw HypothesisViolated("capacity is not relaxed subadditive: disjoint null sets have a non-null union");

    // Step 1: ξ = f.
    std::vector<Value> c;
    std::vector<Mask> A;
    for (const auto& v : f.distinct_values()) {
        if (v.is_zero()) continue;
        c.push_back(v);
        A.push_back(f.at_least(v) & ~f.greater(v));
    }
    const std::size_t n = c.size();

    const Real qr = to_real(q);
    const Real L = mp::pow(Real(2), 1 + 2 / qr) * mp::pow(detail::to_real_checked(K), 1 / qr);
    const Real eps_prime = eps.to_real() / mp::pow(to_real(p / q), 1 / qr);
    const Real denom = 3 * mp::pow(L, static_cast<int>(n) + 3);

    // Step 2: rational coefficients.
    Real mass_sum = 1;
    for (Mask a : A) mass_sum += detail::to_real_checked(pow(nu(a), 1 / q));
    const Real coefficient_bound = eps_prime / (denom * mass_sum);
    std::vector<Rational> r;
    for (const auto& ck : c) r.push_back(detail::dyadic_within(ck, coefficient_bound));

    // Step 3: basis sets.
    Real coefficient_sum = 1;
    for (const auto& rk : r) coefficient_sum += to_real(Rational(mp::abs(rk)));
    const Real set_bound = mp::pow(eps_prime / (denom * coefficient_sum), qr);
    std::vector<Mask> D;
    for (Mask a : A) {
        std::optional<Mask> chosen;
        Value chosen_gap;
        for (Mask d : basis) {
            Value gap = nu(a ^ d);
            if (!chosen || gap < chosen_gap) {
                chosen = d;
                chosen_gap = gap;
            }
        }
        if (!chosen || !(chosen_gap.is_zero() || (chosen_gap.is_finite() && chosen_gap.to_real() < set_bound)))
            throw BasisInsufficient("no basis set approximates " + format_subset(a) + " within the required bound");
        D.push_back(*chosen);
    }

    std::vector<Value> psi_values(static_cast<std::size_t>(n_space));
    for (std::size_t k = 0; k < n; ++k)
        for (int x = 0; x < n_space; ++x)
            if (D[k] & (Mask{1} << x)) psi_values[static_cast<std::size_t>(x)] += Value(r[k]);
    Function psi(std::move(psi_values));
    PrenormValue distance = lorentz_pq_prenorm(mu, f - psi, params);
    if (!approx_lt(distance, eps))
        throw InequalityViolated("approximation distance " + distance.to_string() + " is not below eps");
    return {std::move(r), std::move(D), std::move(psi), std::move(distance)};
}

}  // namespace nadd
