#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nadd/value.hpp"

namespace nadd {

/// A subset of a finite ground set {0, ..., n-1}, bit i set when element i belongs to it.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 24;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    for (int i = 0; m != 0; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

/// "{0,2}" style rendering used in messages and reports.
inline std::string format_subset(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

/// A real-valued function on a finite ground set.  Finite spaces make every
/// function simple, so the level sets {f > t} are plain masks.
class Function {
public:
    Function() = default;
    explicit Function(std::vector<Value> values) : values_(std::move(values)) {
        for (const auto& v : values_)
            if (v.is_infinite()) throw ValidationError("function values must be finite");
    }

    static Function zero(int n) { return Function(std::vector<Value>(static_cast<std::size_t>(n))); }

    /// c·χ_A on {0..n-1}.
    static Function indicator(int n, Mask set, const Value& c = Value(1)) {
        std::vector<Value> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            if (set & (Mask{1} << i)) v[static_cast<std::size_t>(i)] = c;
        return Function(std::move(v));
    }

    /// Comma-separated rationals ordered by element index, e.g. "2,1,-1/2".
    static Function parse(std::string_view literal) {
        std::vector<Value> v;
        std::size_t start = 0;
        while (start <= literal.size()) {
            std::size_t comma = literal.find(',', start);
            if (comma == std::string_view::npos) comma = literal.size();
            v.emplace_back(parse_rational(literal.substr(start, comma - start)));
            start = comma + 1;
        }
        return Function(std::move(v));
    }

    int size() const { return static_cast<int>(values_.size()); }
    const Value& operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    std::span<const Value> values() const { return values_; }

    bool is_exact() const {
        return std::all_of(values_.begin(), values_.end(), [](const Value& v) { return v.is_exact(); });
    }
    bool is_nonnegative() const {
        return std::all_of(values_.begin(), values_.end(), [](const Value& v) { return v.sign() >= 0; });
    }

    /// {x : f(x) > t}
    Mask greater(const Value& t) const {
        Mask m = 0;
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (values_[i] > t) m |= Mask{1} << i;
        return m;
    }
    /// {x : f(x) >= t}
    Mask at_least(const Value& t) const {
        Mask m = 0;
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (values_[i] >= t) m |= Mask{1} << i;
        return m;
    }
    Mask nonzero_set() const {
        Mask m = 0;
        for (std::size_t i = 0; i < values_.size(); ++i)
            if (!values_[i].is_zero()) m |= Mask{1} << i;
        return m;
    }

    /// Sorted distinct values.
    std::vector<Value> distinct_values() const {
        std::vector<Value> v = values_;
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    Value max_value() const {
        Value m = values_.empty() ? Value(0) : values_.front();
        for (const auto& v : values_) m = max(m, v);
        return m;
    }

    template <typename F>
    Function map(F&& fn) const {
        std::vector<Value> out;
        out.reserve(values_.size());
        for (const auto& v : values_) out.push_back(fn(v));
        return Function(std::move(out));
    }

    Function abs() const {
        return map([](const Value& v) { return nadd::abs(v); });
    }
    /// Pointwise f^p, for f >= 0.
    Function pow(const Rational& p) const {
        return map([&](const Value& v) { return nadd::pow(v, p); });
    }
    /// f ∧ r
    Function clamp_above(const Value& r) const {
        return map([&](const Value& v) { return min(v, r); });
    }
    /// (f - r)^+
    Function positive_part_minus(const Value& r) const {
        return map([&](const Value& v) { return v > r ? v - r : Value(0); });
    }
    Function scaled(const Value& c) const {
        return map([&](const Value& v) { return c * v; });
    }

    friend Function operator+(const Function& a, const Function& b) { return a.zip(b, std::plus<>{}); }
    friend Function operator-(const Function& a, const Function& b) { return a.zip(b, std::minus<>{}); }
    friend Function operator-(const Function& a) { return a.scaled(Value(-1)); }
    friend bool operator==(const Function& a, const Function& b) { return a.values_ == b.values_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) s += ",";
            s += values_[i].to_string();
        }
        return s;
    }

private:
    template <typename Op>
    Function zip(const Function& b, Op op) const {
        if (b.size() != size()) throw ValidationError("functions live on ground sets of different sizes");
        std::vector<Value> out;
        out.reserve(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(op(values_[i], b.values_[i]));
        return Function(std::move(out));
    }

    std::vector<Value> values_;
};

/// f <= g pointwise.
inline bool pointwise_le(const Function& f, const Function& g) {
    for (int i = 0; i < f.size(); ++i)
        if (f[i] > g[i]) return false;
    return true;
}

}  // namespace nadd
