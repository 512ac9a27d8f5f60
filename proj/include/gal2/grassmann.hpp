#pragma once

#include <array>

#include "gal2/errors.hpp"
#include "gal2/motion.hpp"
#include "gal2/scalar.hpp"

namespace gal2 {

// Exterior algebra on two generators:
//
//   e1^2 = e2^2 = 0,   e1*e2 = -e2*e1.
//
// Coefficients are stored in basis order (1, e1, e2, e1e2). The elements
// with unit scalar part form a group under multiplication, isomorphic to
// the Galilean motion group via the half-angle parameters.
template <Scalar S>
struct GrassmannElement {
    S a0{};  // coefficient of 1
    S a1{};  // coefficient of e1
    S a2{};  // coefficient of e2
    S a3{};  // coefficient of e1e2

    GrassmannElement() = default;
    GrassmannElement(S c0, S c1, S c2, S c3)
        : a0(std::move(c0)), a1(std::move(c1)), a2(std::move(c2)), a3(std::move(c3)) {}

    static GrassmannElement one() {
        return {scalar_traits<S>::from_int(1), S{}, S{}, S{}};
    }

    friend GrassmannElement operator+(const GrassmannElement& p, const GrassmannElement& q) {
        return {p.a0 + q.a0, p.a1 + q.a1, p.a2 + q.a2, p.a3 + q.a3};
    }

    friend GrassmannElement operator-(const GrassmannElement& p, const GrassmannElement& q) {
        return {p.a0 - q.a0, p.a1 - q.a1, p.a2 - q.a2, p.a3 - q.a3};
    }

    GrassmannElement operator-() const { return {-a0, -a1, -a2, -a3}; }

    // Anticommutativity shows up only in the e1e2 coefficient.
    friend GrassmannElement operator*(const GrassmannElement& p, const GrassmannElement& q) {
        return {p.a0 * q.a0,
                p.a0 * q.a1 + p.a1 * q.a0,
                p.a0 * q.a2 + p.a2 * q.a0,
                p.a0 * q.a3 + p.a3 * q.a0 + p.a1 * q.a2 - p.a2 * q.a1};
    }

    friend GrassmannElement operator*(const S& s, const GrassmannElement& q) {
        return {s * q.a0, s * q.a1, s * q.a2, s * q.a3};
    }

    friend bool operator==(const GrassmannElement& p, const GrassmannElement& q) {
        return p.a0 == q.a0 && p.a1 == q.a1 && p.a2 == q.a2 && p.a3 == q.a3;
    }
    friend bool operator!=(const GrassmannElement& p, const GrassmannElement& q) {
        return !(p == q);
    }
};

template <Scalar S>
bool approx_equal(const GrassmannElement<S>& p, const GrassmannElement<S>& q, double tol) {
    using T = scalar_traits<S>;
    return T::approx_equal(p.a0, q.a0, tol) && T::approx_equal(p.a1, q.a1, tol) &&
           T::approx_equal(p.a2, q.a2, tol) && T::approx_equal(p.a3, q.a3, tol);
}

// conj(q) flips every non-scalar sign; q * conj(q) = a0^2.
template <Scalar S>
GrassmannElement<S> conj(const GrassmannElement<S>& q) {
    return {q.a0, -q.a1, -q.a2, -q.a3};
}

template <Scalar S>
S norm_sq(const GrassmannElement<S>& q) {
    return q.a0 * q.a0;
}

template <Scalar S>
bool has_unit_scalar_part(const GrassmannElement<S>& q, double tol = kPredicateTol) {
    return scalar_traits<S>::approx_equal(q.a0, scalar_traits<S>::from_int(1), tol);
}

// 1 + phi*e1 + beta*e2 + gamma*e1e2 in the half-angle parameters of the
// motion. Product-preserving: the image of a composition is the product of
// the images.
template <Scalar S>
GrassmannElement<S> motion_to_lambda1(const GalileanMotion<S>& m) {
    const SuParams<S> p = su_params(m);
    return {scalar_traits<S>::from_int(1), p.phi, p.beta, p.gamma};
}

template <Scalar S>
GalileanMotion<S> lambda1_to_motion(const GrassmannElement<S>& q, double tol = kPredicateTol) {
    if (!has_unit_scalar_part(q, tol)) {
        throw NotInLambda1Error("grassmann element does not have unit scalar part");
    }
    return motion_from_su_params<S>({q.a1, q.a2, q.a3});
}

// Images of the motion group's Lie algebra generators under the half-angle
// correspondence: the a-translation, b-translation and rotation directions
// map to e2/2, e1e2/2 and e1/2.
template <Scalar S>
std::array<GrassmannElement<S>, 3> lambda1_lie_generators() {
    const S h = half(scalar_traits<S>::from_int(1));
    return {GrassmannElement<S>{S{}, S{}, h, S{}},
            GrassmannElement<S>{S{}, S{}, S{}, h},
            GrassmannElement<S>{S{}, h, S{}, S{}}};
}

template <Scalar S>
GrassmannElement<S> commutator(const GrassmannElement<S>& p, const GrassmannElement<S>& q) {
    return p * q - q * p;
}

}  // namespace gal2
