#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gal2 {

namespace detail {

using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit add overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit sub overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit mul overflow");
    return r;
}

inline int128 abs128(int128 a) { return a < 0 ? -a : a; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

}  // namespace detail

// Exact rational number over 128-bit integers, always stored reduced with a
// positive denominator. Arithmetic that would overflow 128 bits throws
// std::overflow_error instead of wrapping, so exact-mode computations fail
// loudly rather than silently corrupting.
class Rational {
  public:
    using Int = detail::int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long num, long long den) : num_(num), den_(den) { reduce(); }

    static Rational from_int128(Int num, Int den) {
        Rational r;
        r.num_ = num;
        r.den_ = den;
        r.reduce();
        return r;
    }

    // Exact conversion: every finite double is a dyadic rational.
    static Rational from_double(double x) {
        if (!std::isfinite(x)) throw std::domain_error("rational: non-finite double");
        if (x == 0.0) return Rational();
        int exp = 0;
        double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
        // 53 doublings make the mantissa integral.
        auto mant = static_cast<long long>(std::ldexp(m, 53));
        exp -= 53;
        Int num = mant;
        Int den = 1;
        if (exp >= 0) {
            if (exp > 126) throw std::overflow_error("rational: double exponent too large");
            num = detail::checked_mul(num, Int(1) << exp);
        } else {
            if (-exp > 126) throw std::overflow_error("rational: double exponent too small");
            den = Int(1) << (-exp);
        }
        return from_int128(num, den);
    }

    // Accepts "p", "p/q", optional leading '-'.
    static Rational from_string(std::string_view s);

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        std::string out = detail::int128_to_string(num_);
        if (den_ != 1) {
            out += '/';
            out += detail::int128_to_string(den_);
        }
        return out;
    }

    Rational operator-() const { return from_raw(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // a/b + c/d = (ad + cb) / bd, reduced via g = gcd(b, d) first.
        Int g = detail::gcd128(a.den_, b.den_);
        Int bd = a.den_ / g;
        Int num = detail::checked_add(detail::checked_mul(a.num_, b.den_ / g),
                                      detail::checked_mul(b.num_, bd));
        Int den = detail::checked_mul(bd, b.den_);
        return from_int128(num, den);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        Int g1 = detail::gcd128(a.num_, b.den_);
        Int g2 = detail::gcd128(b.num_, a.den_);
        Int num = detail::checked_mul(a.num_ / g1, b.num_ / g2);
        Int den = detail::checked_mul(a.den_ / g2, b.den_ / g1);
        return from_raw(num, den);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational: division by zero");
        Int g1 = detail::gcd128(a.num_, b.num_);
        Int g2 = detail::gcd128(b.den_, a.den_);
        Int num = detail::checked_mul(a.num_ / g1, b.den_ / g2);
        Int den = detail::checked_mul(a.den_ / g2, b.num_ / g1);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return from_raw(num, den);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b) {
        return detail::checked_mul(a.num_, b.den_) < detail::checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  private:
    // Caller guarantees gcd(num, den) == 1 and den > 0.
    static Rational from_raw(Int num, Int den) {
        Rational r;
        r.num_ = num;
        r.den_ = den;
        return r;
    }

    void reduce() {
        if (den_ == 0) throw std::domain_error("rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = detail::gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

inline Rational abs(const Rational& r) {
    return r.num() < 0 ? -r : r;
}

inline Rational Rational::from_string(std::string_view s) {
    auto parse_int = [](std::string_view t) -> Int {
        if (t.empty()) throw std::invalid_argument("rational: empty integer");
        bool neg = false;
        std::size_t i = 0;
        if (t[0] == '-' || t[0] == '+') {
            neg = t[0] == '-';
            i = 1;
        }
        if (i == t.size()) throw std::invalid_argument("rational: sign without digits");
        Int v = 0;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("rational: bad digit");
            v = detail::checked_add(detail::checked_mul(v, 10), t[i] - '0');
        }
        return neg ? -v : v;
    };
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return from_int128(parse_int(s), 1);
    return from_int128(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace gal2
