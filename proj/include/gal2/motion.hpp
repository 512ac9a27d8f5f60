#pragma once

#include "gal2/scalar.hpp"

namespace gal2 {

// Canonical parameters of a motion of the Galilean plane: translations a, b
// along the two axes and the shear ("rotation") parameter theta. Acts on
// points as (x, y) -> (x + a, y + theta*x + b).
template <Scalar S>
struct GalileanMotion {
    S a{};
    S b{};
    S theta{};

    static GalileanMotion identity() { return {}; }

    friend bool operator==(const GalileanMotion& m1, const GalileanMotion& m2) {
        return m1.a == m2.a && m1.b == m2.b && m1.theta == m2.theta;
    }
    friend bool operator!=(const GalileanMotion& m1, const GalileanMotion& m2) {
        return !(m1 == m2);
    }
};

// Group law in canonical parameters, read off from the product of the
// lower-triangular 3x3 matrices of the standard representation.
template <Scalar S>
GalileanMotion<S> compose(const GalileanMotion<S>& m1, const GalileanMotion<S>& m2) {
    return {m1.a + m2.a, m1.b + m2.b + m1.theta * m2.a, m1.theta + m2.theta};
}

template <Scalar S>
GalileanMotion<S> inverse(const GalileanMotion<S>& m) {
    return {-m.a, m.theta * m.a - m.b, -m.theta};
}

template <Scalar S>
bool approx_equal(const GalileanMotion<S>& m1, const GalileanMotion<S>& m2, double tol) {
    using T = scalar_traits<S>;
    return T::approx_equal(m1.a, m2.a, tol) && T::approx_equal(m1.b, m2.b, tol) &&
           T::approx_equal(m1.theta, m2.theta, tol);
}

// Half-angle parameters (phi, beta, gamma) used by the 2x2 unitary-style and
// Grassmann representations. The dictionary to canonical parameters is
//
//   phi = theta/2,  beta = a/2,  gamma = b/2 - a*theta/4
//
// and back: theta = 2*phi, a = 2*beta, b = 2*gamma + 2*beta*phi.
template <Scalar S>
struct SuParams {
    S phi{};
    S beta{};
    S gamma{};
};

template <Scalar S>
SuParams<S> su_params(const GalileanMotion<S>& m) {
    return {half(m.theta), half(m.a), half(m.b) - quarter(m.a * m.theta)};
}

template <Scalar S>
GalileanMotion<S> motion_from_su_params(const SuParams<S>& p) {
    const S two = scalar_traits<S>::from_int(2);
    return {two * p.beta, two * p.gamma + two * p.beta * p.phi, two * p.phi};
}

}  // namespace gal2
