#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "problocal/errors.hpp"

namespace problocal {

/// Exact rational on 64-bit numerator/denominator, always normalized
/// (gcd 1, denominator positive). Intermediate products go through
/// __int128 and overflow is checked; desk-scale weights and gains stay
/// far below the limit.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw InputError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw InputError("rational overflow");
        return static_cast<std::int64_t>(v);
    }

    static Rational make(__int128 n, __int128 d) {
        __int128 g = gcd128(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num = checked(n);
        r.den = checked(d);
        r.normalize();
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den,
                    static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw InputError("rational division by zero");
        return make(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    bool positive() const { return num > 0; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    /// Parses "p/q", a decimal integer, or a decimal fraction like "0.25".
    static Rational parse(const std::string& s) {
        if (s.empty()) throw InputError("empty rational literal");
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
            if (tail.empty() || tail.size() > 18) throw InputError("bad rational literal: " + s);
            std::int64_t den = 1;
            for (std::size_t i = 0; i < tail.size(); ++i) den = checked(static_cast<__int128>(den) * 10);
            std::int64_t whole = head.empty() ? 0 : parse_int(head);
            bool neg = !head.empty() && head[0] == '-';
            std::int64_t frac = parse_int(tail);
            __int128 num = static_cast<__int128>(whole) * den + (neg ? -frac : frac);
            return make(num, den);
        }
        return Rational(parse_int(s));
    }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static std::int64_t parse_int(const std::string& s) {
        if (s.empty()) throw InputError("bad integer literal");
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw InputError("bad integer literal: " + s);
        }
        if (pos != s.size()) throw InputError("bad integer literal: " + s);
        return v;
    }
};

/// Ceiling of log2 of a positive rational, exact (integer result may be
/// negative). Smallest g with r <= 2^g.
inline std::int64_t ceil_log2(const Rational& r) {
    if (!r.positive()) throw InputError("ceil_log2 of non-positive rational");
    std::int64_t g = 0;
    // Grow or shrink g until 2^(g-1) < r <= 2^g, comparing by cross-multiplication.
    auto le_pow2 = [&](std::int64_t e) {
        // r <= 2^e ?
        if (e >= 0) {
            if (e >= 63) return true; // desk-scale gains never reach 2^63
            return static_cast<__int128>(r.num) <= (static_cast<__int128>(r.den) << e);
        }
        std::int64_t k = -e;
        if (k >= 63) return false;
        return (static_cast<__int128>(r.num) << k) <= static_cast<__int128>(r.den);
    };
    while (!le_pow2(g)) ++g;
    while (g > INT64_MIN + 1 && le_pow2(g - 1)) --g;
    return g;
}

} // namespace problocal
