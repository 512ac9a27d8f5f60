#pragma once

#include "gal2/scalar.hpp"

namespace gal2 {

// Point of the Galilean plane. The distance is degenerate: |dx| when the
// first coordinates differ, |dy| otherwise.
template <Scalar S>
struct GalileanPoint {
    S x{};
    S y{};

    friend bool operator==(const GalileanPoint& p, const GalileanPoint& q) {
        return p.x == q.x && p.y == q.y;
    }
    friend bool operator!=(const GalileanPoint& p, const GalileanPoint& q) { return !(p == q); }
};

// Point (1, i1*y, i1i2*z) on the x^2 = 1 component of the unit sphere of the
// three-dimensional space over the algebra; the first coordinate is
// implicitly 1.
template <Scalar S>
struct SpherePoint {
    S y{};
    S z{};

    friend bool operator==(const SpherePoint& p, const SpherePoint& q) {
        return p.y == q.y && p.z == q.z;
    }
    friend bool operator!=(const SpherePoint& p, const SpherePoint& q) { return !(p == q); }
};

template <Scalar S>
bool approx_equal(const GalileanPoint<S>& p, const GalileanPoint<S>& q, double tol) {
    using T = scalar_traits<S>;
    return T::approx_equal(p.x, q.x, tol) && T::approx_equal(p.y, q.y, tol);
}

template <Scalar S>
bool approx_equal(const SpherePoint<S>& p, const SpherePoint<S>& q, double tol) {
    using T = scalar_traits<S>;
    return T::approx_equal(p.y, q.y, tol) && T::approx_equal(p.z, q.z, tol);
}

// The x-branch is decided exactly in rational mode and by kDistanceEps in
// float mode; the metric is discontinuous in x, so the branch must be
// deterministic.
template <Scalar S>
S distance(const GalileanPoint<S>& p, const GalileanPoint<S>& q) {
    using T = scalar_traits<S>;
    const S dx = T::abs(p.x - q.x);
    if constexpr (T::is_exact) {
        if (!T::is_zero(dx)) return dx;
    } else {
        if (dx > kDistanceEps) return dx;
    }
    return T::abs(p.y - q.y);
}

}  // namespace gal2
