#pragma once

#include <cmath>
#include <concepts>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "gal2/rational.hpp"

namespace gal2 {

// Absolute threshold below which a float-mode scalar part is treated as
// non-invertible. Inversion formulas divide by the scalar part squared, so
// near-zero scalar parts amplify error quadratically.
inline constexpr double kInverseEps = 1e-12;

// Componentwise tolerance for float-mode structural predicates (group
// membership, representation validation, action agreement).
inline constexpr double kPredicateTol = 1e-9;

// Threshold deciding the x1 == x2 branch of the Galilean distance in float
// mode.
inline constexpr double kDistanceEps = 1e-12;

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;

    static double from_int(long long v) { return static_cast<double>(v); }
    static double abs(double x) { return std::fabs(x); }
    static bool is_zero(double x) { return x == 0.0; }
    static bool is_invertible(double x) { return std::fabs(x) > kInverseEps; }
    static bool approx_equal(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
    static double exp(double x) { return std::exp(x); }
    static double to_double(double x) { return x; }

    static std::string to_string(double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;

    static Rational from_int(long long v) { return Rational(v); }
    static Rational abs(const Rational& x) { return gal2::abs(x); }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool is_invertible(const Rational& x) { return !x.is_zero(); }
    static bool approx_equal(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }

    // Only the nilpotent case has an exact value; e^q is irrational for
    // rational q != 0.
    static Rational exp(const Rational& x) {
        if (!x.is_zero()) throw std::domain_error("exact exp defined only at zero scalar part");
        return Rational(1);
    }

    static double to_double(const Rational& x) { return x.to_double(); }
    static std::string to_string(const Rational& x) { return x.to_string(); }
};

template <typename S>
concept Scalar = requires(const S& a, const S& b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    scalar_traits<S>::from_int(0);
};

template <Scalar S>
S half(const S& x) {
    return x / scalar_traits<S>::from_int(2);
}

template <Scalar S>
S quarter(const S& x) {
    return x / scalar_traits<S>::from_int(4);
}

}  // namespace gal2
