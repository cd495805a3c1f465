#pragma once

// Two-tier extended real arithmetic.
//
// Tier 1 is exact: arbitrary-precision rationals plus +inf.  Tier 2 is a
// 96-bit-mantissa binary float used only when an irrational power enters
// (μ^{q/p}, 1/q-th roots, arctan).  A Value remembers which tier it is on, and
// any operation touching a tier-2 operand produces a tier-2 result.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <ostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include "nadd/errors.hpp"

namespace nadd {

namespace mp = boost::multiprecision;

using Integer = mp::cpp_int;
using Rational = mp::cpp_rational;
using Real = mp::number<mp::cpp_bin_float<96, mp::digit_base_2>, mp::et_off>;

/// Comparison tolerance applied whenever one side of a comparison is on the float tier.
inline constexpr double kFloatTolerance = 1e-12;

inline Real to_real(const Rational& q) {
    return Real(mp::numerator(q)) / Real(mp::denominator(q));
}

inline std::string format_rational(const Rational& q) {
    if (mp::denominator(q) == 1) return mp::numerator(q).str();
    return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
    return s;
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("malformed number '" + std::string(whole) + "'");
    Integer v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("malformed number '" + std::string(whole) + "'");
        v = v * 10 + (c - '0');
    }
    return negative ? Integer(-v) : v;
}

// floor(x^(1/k)) for x >= 0 by bisection on the bit length.
inline Integer integer_root(const Integer& x, unsigned k) {
    if (x < 2 || k == 1) return x;
    std::size_t bits = mp::msb(x) + 1;
    Integer lo = 0;
    Integer hi = Integer(1) << (bits / k + 1);
    while (lo < hi) {
        Integer mid = (lo + hi + 1) >> 1;
        if (mp::pow(mid, k) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace detail

/// Parses "a", "-a", "a/b" or a finite decimal such as "0.25" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty()) throw ParseError("empty rational literal");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer num = detail::parse_integer(s.substr(0, slash), text);
        Integer den = detail::parse_integer(s.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string digits(s.substr(0, dot));
        std::string_view frac = s.substr(dot + 1);
        if (frac.empty() || frac.front() == '-' || frac.front() == '+')
            throw ParseError("malformed number '" + std::string(text) + "'");
        digits += frac;
        if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
        Integer num = detail::parse_integer(digits, text);
        return Rational(num, mp::pow(Integer(10), static_cast<unsigned>(frac.size())));
    }
    return Rational(detail::parse_integer(s, text));
}

/// Exact value of base^r when it is rational, for base >= 0 and r > 0.
inline std::optional<Rational> exact_power(const Rational& base, const Rational& r) {
    if (base == 0) return Rational(0);
    if (base < 0 || r <= 0) return std::nullopt;
    const Integer& rn = mp::numerator(r);
    const Integer& rd = mp::denominator(r);
    if (rn > 4096 || rd > 4096) return std::nullopt;
    unsigned a = rn.convert_to<unsigned>();
    unsigned b = rd.convert_to<unsigned>();
    Integer num = mp::pow(mp::numerator(base), a);
    Integer den = mp::pow(mp::denominator(base), a);
    Integer num_root = detail::integer_root(num, b);
    if (mp::pow(num_root, b) != num) return std::nullopt;
    Integer den_root = detail::integer_root(den, b);
    if (mp::pow(den_root, b) != den) return std::nullopt;
    return Rational(num_root, den_root);
}

/// An element of the extended real line restricted to (-inf, +inf]: an exact
/// rational, a tier-2 float, or +inf.  Measure values and integrals are the
/// nonnegative part of this domain.
class Value {
public:
    Value() : rep_(Rational(0)) {}
    Value(const Rational& q) : rep_(q) {}  // NOLINT(google-explicit-constructor)
    template <typename I>
        requires std::is_integral_v<I>
    Value(I i) : rep_(Rational(i)) {}  // NOLINT(google-explicit-constructor)

    static Value real(const Real& r) {
        Value v;
        if (mp::isinf(r)) {
            if (r < 0) throw std::domain_error("negative infinity is outside the value domain");
            v.rep_ = Infinity{};
        } else {
            v.rep_ = r;
        }
        return v;
    }
    static Value infinity() {
        Value v;
        v.rep_ = Infinity{};
        return v;
    }

    /// Parses a rational literal or "inf".
    static Value parse(std::string_view text) {
        std::string_view s = detail::trim(text);
        if (s == "inf" || s == "+inf" || s == "infinity" || s == "Infinity") return infinity();
        return Value(parse_rational(s));
    }

    bool is_infinite() const { return std::holds_alternative<Infinity>(rep_); }
    bool is_finite() const { return !is_infinite(); }
    /// True on tier 1 (rational or +inf).
    bool is_exact() const { return !std::holds_alternative<Real>(rep_); }
    bool is_rational() const { return std::holds_alternative<Rational>(rep_); }

    const Rational& rational() const {
        if (auto* q = std::get_if<Rational>(&rep_)) return *q;
        throw std::logic_error("value " + to_string() + " is not an exact rational");
    }

    Real to_real() const {
        if (auto* q = std::get_if<Rational>(&rep_)) return nadd::to_real(*q);
        if (auto* r = std::get_if<Real>(&rep_)) return *r;
        return std::numeric_limits<Real>::infinity();
    }
    double to_double() const {
        if (is_infinite()) return std::numeric_limits<double>::infinity();
        return to_real().convert_to<double>();
    }

    int sign() const {
        if (is_infinite()) return 1;
        if (auto* q = std::get_if<Rational>(&rep_)) return q->sign();
        return std::get<Real>(rep_).sign();
    }
    bool is_zero() const { return sign() == 0; }

    /// Exact values print as "a/b" (or "a"), +inf as "inf", floats with 17 significant digits.
    std::string to_string() const {
        if (is_infinite()) return "inf";
        if (auto* q = std::get_if<Rational>(&rep_)) return format_rational(*q);
        std::ostringstream os;
        os << std::setprecision(17) << std::get<Real>(rep_).convert_to<double>();
        return os.str();
    }

    friend Value operator+(const Value& a, const Value& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        if (a.is_rational() && b.is_rational()) return Value(a.rational() + b.rational());
        return real(a.to_real() + b.to_real());
    }
    friend Value operator-(const Value& a) {
        if (a.is_infinite()) throw std::domain_error("negation of +inf");
        if (a.is_rational()) return Value(Rational(-a.rational()));
        return real(-a.to_real());
    }
    friend Value operator-(const Value& a, const Value& b) {
        if (b.is_infinite()) throw std::domain_error("subtraction of +inf");
        if (a.is_infinite()) return infinity();
        if (a.is_rational() && b.is_rational()) return Value(a.rational() - b.rational());
        return real(a.to_real() - b.to_real());
    }
    // (+inf)·0 = 0.
    friend Value operator*(const Value& a, const Value& b) {
        if (a.is_zero() || b.is_zero()) return Value(0);
        if (a.is_infinite() || b.is_infinite()) {
            if (a.sign() < 0 || b.sign() < 0) throw std::domain_error("negative multiple of +inf");
            return infinity();
        }
        if (a.is_rational() && b.is_rational()) return Value(a.rational() * b.rational());
        return real(a.to_real() * b.to_real());
    }
    friend Value operator/(const Value& a, const Value& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        if (b.is_infinite()) {
            if (a.is_infinite()) throw std::domain_error("inf/inf");
            return Value(0);
        }
        if (a.is_infinite()) {
            if (b.sign() < 0) throw std::domain_error("negative divisor of +inf");
            return infinity();
        }
        if (a.is_rational() && b.is_rational()) return Value(a.rational() / b.rational());
        return real(a.to_real() / b.to_real());
    }
    Value& operator+=(const Value& o) { return *this = *this + o; }
    Value& operator-=(const Value& o) { return *this = *this - o; }
    Value& operator*=(const Value& o) { return *this = *this * o; }

    /// Strict comparison: floats compare as floats, no tolerance.
    friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
        }
        if (a.is_rational() && b.is_rational()) {
            int c = a.rational().compare(b.rational());
            return c <=> 0;
        }
        Real x = a.to_real();
        Real y = b.to_real();
        if (x < y) return std::strong_ordering::less;
        if (y < x) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }

private:
    struct Infinity {};
    std::variant<Rational, Real, Infinity> rep_;
};

/// Measure and integral values: the nonnegative part of Value.
using ExtendedNonneg = Value;

inline Value abs(const Value& v) { return v.sign() < 0 ? -v : v; }
inline const Value& min(const Value& a, const Value& b) { return b < a ? b : a; }
inline const Value& max(const Value& a, const Value& b) { return a < b ? b : a; }

/// v^r for v >= 0 and r > 0; stays exact when the result is rational.
inline Value pow(const Value& v, const Rational& r) {
    if (r <= 0) throw std::domain_error("power exponent must be positive");
    if (v.sign() < 0) throw std::domain_error("power of a negative value");
    if (v.is_zero()) return Value(0);
    if (v.is_infinite()) return Value::infinity();
    if (r == 1) return v;
    if (v.is_rational()) {
        if (auto exact = exact_power(v.rational(), r)) return Value(*exact);
    }
    Real base = v.to_real();
    if (r == Rational(1, 2)) return Value::real(mp::sqrt(base));
    return Value::real(mp::pow(base, nadd::to_real(r)));
}

/// a == b on the exact tier; |a-b| <= tol·max(1,|a|,|b|) otherwise.
inline bool approx_equal(const Value& a, const Value& b, double tol = kFloatTolerance) {
    if (a.is_exact() && b.is_exact()) return a == b;
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
    Real x = a.to_real();
    Real y = b.to_real();
    Real scale = std::max({Real(1), Real(mp::abs(x)), Real(mp::abs(y))});
    return mp::abs(x - y) <= Real(tol) * scale;
}

/// a <= b, with the float-tier tolerance when either side is inexact.
inline bool approx_le(const Value& a, const Value& b, double tol = kFloatTolerance) {
    if (a.is_exact() && b.is_exact()) return a <= b;
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    Real x = a.to_real();
    Real y = b.to_real();
    Real scale = std::max({Real(1), Real(mp::abs(x)), Real(mp::abs(y))});
    return x <= y + Real(tol) * scale;
}

inline bool approx_lt(const Value& a, const Value& b, double tol = kFloatTolerance) {
    return !approx_le(b, a, tol);
}

inline std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.to_string(); }

}  // namespace nadd
