#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "gal2/errors.hpp"
#include "gal2/scalar.hpp"

namespace gal2 {

// Commutative associative algebra with unit and two nilpotent generators
// i1, i2:
//
//   i1^2 = i2^2 = 0,   i1*i2 = i2*i1 != 0.
//
// Every element is a0 + a1*i1 + a2*i2 + a3*i1i2 with real coefficients.
// An element is invertible exactly when its scalar part a0 is nonzero; the
// scalar part of a product is the product of scalar parts.
template <Scalar S>
struct D2 {
    S a0{};  // coefficient of 1
    S a1{};  // coefficient of i1
    S a2{};  // coefficient of i2
    S a3{};  // coefficient of i1*i2

    D2() = default;
    D2(S s) : a0(std::move(s)) {}  // NOLINT: scalars embed implicitly
    D2(S c0, S c1, S c2, S c3)
        : a0(std::move(c0)), a1(std::move(c1)), a2(std::move(c2)), a3(std::move(c3)) {}

    static D2 zero() { return {}; }
    static D2 one() { return D2(scalar_traits<S>::from_int(1)); }
    static D2 iota1() {
        return {S{}, scalar_traits<S>::from_int(1), S{}, S{}};
    }
    static D2 iota2() {
        return {S{}, S{}, scalar_traits<S>::from_int(1), S{}};
    }
    static D2 iota12() {
        return {S{}, S{}, S{}, scalar_traits<S>::from_int(1)};
    }

    friend D2 operator+(const D2& a, const D2& b) {
        return {a.a0 + b.a0, a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
    }

    friend D2 operator-(const D2& a, const D2& b) {
        return {a.a0 - b.a0, a.a1 - b.a1, a.a2 - b.a2, a.a3 - b.a3};
    }

    D2 operator-() const { return {-a0, -a1, -a2, -a3}; }

    // Nilpotency kills every coefficient of i1^2, i2^2 and higher products.
    friend D2 operator*(const D2& a, const D2& b) {
        return {a.a0 * b.a0,
                a.a0 * b.a1 + a.a1 * b.a0,
                a.a0 * b.a2 + a.a2 * b.a0,
                a.a0 * b.a3 + a.a1 * b.a2 + a.a2 * b.a1 + a.a3 * b.a0};
    }

    friend D2 operator*(const S& s, const D2& a) { return {s * a.a0, s * a.a1, s * a.a2, s * a.a3}; }
    friend D2 operator*(const D2& a, const S& s) { return s * a; }

    D2& operator+=(const D2& o) { return *this = *this + o; }
    D2& operator-=(const D2& o) { return *this = *this - o; }
    D2& operator*=(const D2& o) { return *this = *this * o; }

    friend bool operator==(const D2& a, const D2& b) {
        return a.a0 == b.a0 && a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3;
    }
    friend bool operator!=(const D2& a, const D2& b) { return !(a == b); }
};

template <Scalar S>
const S& re(const D2<S>& a) {
    return a.a0;
}

template <Scalar S>
bool approx_equal(const D2<S>& a, const D2<S>& b, double tol) {
    using T = scalar_traits<S>;
    return T::approx_equal(a.a0, b.a0, tol) && T::approx_equal(a.a1, b.a1, tol) &&
           T::approx_equal(a.a2, b.a2, tol) && T::approx_equal(a.a3, b.a3, tol);
}

template <Scalar S>
bool is_invertible(const D2<S>& a) {
    return scalar_traits<S>::is_invertible(a.a0);
}

// a^-1 = (1/a0^2) * [a0 - a1*i1 - a2*i2 + (2*a1*a2/a0 - a3)*i1i2].
template <Scalar S>
D2<S> inverse(const D2<S>& a) {
    if (!is_invertible(a)) throw NonInvertibleError("element has zero scalar part");
    const S inv0 = scalar_traits<S>::from_int(1) / a.a0;
    const S inv0_sq = inv0 * inv0;
    const S two = scalar_traits<S>::from_int(2);
    return {inv0, -a.a1 * inv0_sq, -a.a2 * inv0_sq,
            (two * a.a1 * a.a2 * inv0 - a.a3) * inv0_sq};
}

template <Scalar S>
D2<S> operator/(const D2<S>& a, const D2<S>& b) {
    return a * inverse(b);
}

// Conjugation by the second generator: flips the sign of every i2-bearing
// coefficient. Multiplicative: conj(a*b) = conj(a)*conj(b).
template <Scalar S>
D2<S> iota2_conj(const D2<S>& a) {
    return {a.a0, a.a1, -a.a2, -a.a3};
}

// The value, first and second derivative of a scalar function at one point;
// enough data to evaluate the function on any element whose scalar part is
// that point, since the nilpotent part truncates the Taylor series.
template <Scalar S>
struct Jet2 {
    S f0{};
    S f1{};
    S f2{};
};

// f(a) = f(a0) + f'(a0)*(a - a0) + f''(a0)*a1*a2*i1i2.
// Precondition: jet holds the derivatives of f at a.a0.
template <Scalar S>
D2<S> eval(const Jet2<S>& jet, const D2<S>& a) {
    return {jet.f0, jet.f1 * a.a1, jet.f1 * a.a2, jet.f1 * a.a3 + jet.f2 * a.a1 * a.a2};
}

// exp(a) = e^{a0} * (1 + a1*i1 + a2*i2 + (a3 + a1*a2)*i1i2).
// In exact mode this is defined only for nilpotent arguments (a0 = 0);
// scalar_traits<Rational>::exp throws otherwise.
template <Scalar S>
D2<S> exp(const D2<S>& a) {
    const S e = scalar_traits<S>::exp(a.a0);
    return {e, e * a.a1, e * a.a2, e * (a.a3 + a.a1 * a.a2)};
}

inline Jet2<double> exp_jet(double x) {
    const double e = std::exp(x);
    return {e, e, e};
}

inline Jet2<double> sin_jet(double x) { return {std::sin(x), std::cos(x), -std::sin(x)}; }

inline Jet2<double> cos_jet(double x) { return {std::cos(x), -std::sin(x), -std::cos(x)}; }

inline Jet2<double> log_jet(double x) {
    if (x <= 0.0) throw std::domain_error("log jet requires positive scalar part");
    return {std::log(x), 1.0 / x, -1.0 / (x * x)};
}

inline Jet2<double> pow_jet(double x, double p) {
    return {std::pow(x, p), p * std::pow(x, p - 1.0), p * (p - 1.0) * std::pow(x, p - 2.0)};
}

template <Scalar S>
Jet2<S> identity_jet(const S& x) {
    return {x, scalar_traits<S>::from_int(1), S{}};
}

// Subalgebra with a single nilpotent generator: a0 + a1*i, i^2 = 0.
// Embeds into D2 along the first generator.
template <Scalar S>
struct DualNumber {
    S a0{};
    S a1{};

    DualNumber() = default;
    DualNumber(S c0) : a0(std::move(c0)) {}  // NOLINT
    DualNumber(S c0, S c1) : a0(std::move(c0)), a1(std::move(c1)) {}

    D2<S> embed() const { return {a0, a1, S{}, S{}}; }

    friend DualNumber operator+(const DualNumber& a, const DualNumber& b) {
        return {a.a0 + b.a0, a.a1 + b.a1};
    }
    friend DualNumber operator-(const DualNumber& a, const DualNumber& b) {
        return {a.a0 - b.a0, a.a1 - b.a1};
    }
    DualNumber operator-() const { return {-a0, -a1}; }
    friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
        return {a.a0 * b.a0, a.a0 * b.a1 + a.a1 * b.a0};
    }
    friend bool operator==(const DualNumber& a, const DualNumber& b) {
        return a.a0 == b.a0 && a.a1 == b.a1;
    }
    friend bool operator!=(const DualNumber& a, const DualNumber& b) { return !(a == b); }
};

template <Scalar S>
DualNumber<S> inverse(const DualNumber<S>& a) {
    if (!scalar_traits<S>::is_invertible(a.a0)) {
        throw NonInvertibleError("dual number has zero scalar part");
    }
    const S inv0 = scalar_traits<S>::from_int(1) / a.a0;
    return {inv0, -a.a1 * inv0 * inv0};
}

// --- text form -------------------------------------------------------------
//
// "a0 + a1*i1 + a2*i2 + a3*i1i2", zero terms omitted; the zero element
// prints as "0".

template <Scalar S>
std::string to_text(const D2<S>& a) {
    using T = scalar_traits<S>;
    struct Term {
        const S* coeff;
        const char* basis;
    };
    const Term terms[] = {{&a.a0, ""}, {&a.a1, "i1"}, {&a.a2, "i2"}, {&a.a3, "i1i2"}};
    std::string out;
    for (const Term& t : terms) {
        if (T::is_zero(*t.coeff)) continue;
        const bool neg = *t.coeff < S{};
        const S mag = T::abs(*t.coeff);
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        out += T::to_string(mag);
        if (t.basis[0] != '\0') {
            out += '*';
            out += t.basis;
        }
    }
    if (out.empty()) out = "0";
    return out;
}

namespace detail {

template <Scalar S>
S scalar_from_text(std::string_view s) {
    if constexpr (scalar_traits<S>::is_exact) {
        return Rational::from_string(s);
    } else {
        std::size_t used = 0;
        const double v = std::stod(std::string(s), &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters in number");
        return v;
    }
}

}  // namespace detail

template <Scalar S>
D2<S> d2_from_text(std::string_view text) {
    D2<S> out;
    std::size_t i = 0;
    const auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_ws();
    if (i == text.size()) throw std::invalid_argument("empty element text");
    bool first = true;
    while (i < text.size()) {
        S sign = scalar_traits<S>::from_int(1);
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = scalar_traits<S>::from_int(-1);
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        first = false;
        // Number part (may be absent for bare "i1" etc.).
        std::size_t begin = i;
        while (i < text.size() && text[i] != '*' && text[i] != '+' && text[i] != '-' &&
               text[i] != ' ' && text[i] != 'i') {
            ++i;
        }
        // Scientific-notation exponents carry their own sign.
        if constexpr (!scalar_traits<S>::is_exact) {
            if (i > begin && i < text.size() && (text[i] == '+' || text[i] == '-') &&
                (text[i - 1] == 'e' || text[i - 1] == 'E')) {
                ++i;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            }
        }
        S coeff = i > begin ? detail::scalar_from_text<S>(text.substr(begin, i - begin))
                            : scalar_traits<S>::from_int(1);
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        // Basis part.
        std::size_t bbegin = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '+' && text[i] != '-') ++i;
        std::string_view basis = text.substr(bbegin, i - bbegin);
        coeff = sign * coeff;
        if (basis.empty()) {
            if (bbegin == begin) throw std::invalid_argument("empty term");
            out.a0 += coeff;
        } else if (basis == "i1") {
            out.a1 += coeff;
        } else if (basis == "i2") {
            out.a2 += coeff;
        } else if (basis == "i1i2" || basis == "i1*i2") {
            out.a3 += coeff;
        } else {
            throw std::invalid_argument("unknown basis element '" + std::string(basis) + "'");
        }
        skip_ws();
    }
    return out;
}

template <Scalar S>
std::ostream& operator<<(std::ostream& os, const D2<S>& a) {
    return os << to_text(a);
}

}  // namespace gal2
