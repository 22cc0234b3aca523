#pragma once

// Exact arithmetic kernel shared by every module: arbitrary-precision
// integers and rationals, error taxonomy, and small parsing/printing helpers.
// All identity checks in this library are exact unless a function explicitly
// takes or returns double.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tandem {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violated (negative factorial, composite modulus, ...).
struct domain_error : error {
    using error::error;
};

// A factor that must be nonzero vanished: division by zero, a falling/rising
// power with a zero factor in the denominator, or a gamma argument at a pole.
struct pole_error : error {
    using error::error;
};

// A configured resource cap was exceeded (table size, series order, ...).
struct cap_error : error {
    using error::error;
};

// A summation support was missing, underivable, or provably too small.
struct support_error : error {
    using error::error;
};

struct unbound_variable : error {
    using error::error;
};

inline Int ipow(Int base, std::uint64_t e) {
    Int r = 1;
    while (e != 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Exact rational power with the 0^0 = 1 convention; 0 to a negative power
// is a pole.
inline Rat rpow(const Rat& base, std::int64_t e) {
    if (base == 0) {
        if (e == 0) return 1;
        if (e < 0) throw pole_error("rpow: zero base with negative exponent");
        return 0;
    }
    const std::uint64_t m = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                                  : static_cast<std::uint64_t>(e);
    Int num = ipow(boost::multiprecision::numerator(base), m);
    Int den = ipow(boost::multiprecision::denominator(base), m);
    return e < 0 ? Rat(den, num) : Rat(num, den);
}

inline bool is_integer(const Rat& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw domain_error("expected an integer value");
    return boost::multiprecision::numerator(q);
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline std::string str(const Int& n) { return n.str(); }

// Canonical rational rendering: "p/q", or just "p" when q == 1.
inline std::string str(const Rat& q) {
    const Int& den = boost::multiprecision::denominator(q);
    std::string s = boost::multiprecision::numerator(q).str();
    if (den != 1) {
        s += '/';
        s += den.str();
    }
    return s;
}

// 17 significant digits: round-trip-exact for double.
inline std::string str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Accepts "p", "p/q", and plain decimals like "-3.25" (parsed exactly).
inline Rat parse_rat(std::string_view text) {
    auto fail = [&] { throw domain_error("cannot parse rational: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string num(text.substr(0, slash));
        std::string den(text.substr(slash + 1));
        if (num.empty() || den.empty()) fail();
        try {
            return Rat(Int(num), Int(den));
        } catch (const std::exception&) {
            fail();
        }
    }
    std::string_view digits = text;
    bool neg = false;
    if (digits.front() == '+' || digits.front() == '-') {
        neg = digits.front() == '-';
        digits.remove_prefix(1);
    }
    auto dot = digits.find('.');
    std::string whole(dot == std::string_view::npos ? digits : digits.substr(0, dot));
    std::string frac(dot == std::string_view::npos ? std::string_view{} : digits.substr(dot + 1));
    if (whole.empty() && frac.empty()) fail();
    for (char c : whole)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail();
    Int num = whole.empty() ? Int(0) : Int(whole);
    Int scale = 1;
    for (char c : frac) {
        num = num * 10 + (c - '0');
        scale *= 10;
    }
    Rat q(num, scale);
    return neg ? -q : q;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Deterministic, platform-independent generator for seeded randomized checks.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    // uniform in [lo, hi], inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

// Cap override hook: every tunable limit lives in the TANDEM_* namespace.
inline long long env_cap(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    long long parsed = std::strtoll(v, &end, 10);
    if (end == v || *end != '\0' || parsed <= 0) return fallback;
    return parsed;
}

}  // namespace tandem
