#pragma once

#include <array>
#include <vector>

#include "gal2/clifford.hpp"
#include "gal2/errors.hpp"
#include "gal2/matrix.hpp"
#include "gal2/motion.hpp"
#include "gal2/point.hpp"
#include "gal2/representations.hpp"
#include "gal2/scalar.hpp"

namespace gal2 {

template <Scalar S>
GalileanPoint<S> act(const GalileanMotion<S>& m, const GalileanPoint<S>& p) {
    return {p.x + m.a, p.y + m.theta * p.x + m.b};
}

// The plane is identified with the x^2 = 1 sphere component by
// (x, y) <-> (y, z); motions act on sphere coordinates by the same map
// (y, z) -> (y + a, z + theta*y + b).
template <Scalar S>
SpherePoint<S> sphere_from_plane(const GalileanPoint<S>& p) {
    return {p.x, p.y};
}

template <Scalar S>
GalileanPoint<S> plane_from_sphere(const SpherePoint<S>& v) {
    return {v.y, v.z};
}

template <Scalar S>
SpherePoint<S> act_sphere(const GalileanMotion<S>& m, const SpherePoint<S>& v) {
    return sphere_from_plane(act(m, plane_from_sphere(v)));
}

// Matrix of the sphere point under the unitary-style representation:
//
//   [ 0                        i1*(y/2 + i2*z/2) ]
//   [ i1*(y/2 - i2*z/2)        1                 ]
//
// The sandwich u * h_v * star(u) is again of this form.
template <Scalar S>
MatD2<S> point_matrix_h(const SpherePoint<S>& v) {
    const S hy = half(v.y);
    const S hz = half(v.z);
    MatD2<S> h(2);
    h(0, 1) = D2<S>(S{}, hy, S{}, hz);
    h(1, 0) = D2<S>(S{}, hy, S{}, -hz);
    h(1, 1) = D2<S>::one();
    return h;
}

// Matrix of the sphere point under the upper-triangular dual representation:
// [[-1, y + i2*z], [0, 1]]. Transported by conjugation w * p_v * w^-1.
template <Scalar S>
MatD2<S> point_matrix_p(const SpherePoint<S>& v) {
    MatD2<S> p(2);
    p(0, 0) = D2<S>(scalar_traits<S>::from_int(-1));
    p(0, 1) = D2<S>(v.y, S{}, v.z, S{});
    p(1, 1) = D2<S>::one();
    return p;
}

// Image of the sphere point (1, i1*y, i1i2*z) under stereographic projection
// from the pole (-1, 0, 0) onto the plane x = 0.
template <Scalar S>
struct ProjectedPoint {
    S y{};
    S z{};

    friend bool operator==(const ProjectedPoint& p, const ProjectedPoint& q) {
        return p.y == q.y && p.z == q.z;
    }
};

template <Scalar S>
bool approx_equal(const ProjectedPoint<S>& p, const ProjectedPoint<S>& q, double tol) {
    using T = scalar_traits<S>;
    return T::approx_equal(p.y, q.y, tol) && T::approx_equal(p.z, q.z, tol);
}

template <Scalar S>
ProjectedPoint<S> stereo_project(const SpherePoint<S>& v) {
    return {half(v.y), half(v.z)};
}

// Homogeneous coordinates (i1*(y1 + i2*z1), y2 + i2*z2) on the projection
// plane; normalizable when y2 is invertible, with normalized form
// y2 = 1, z2 = 0.
template <Scalar S>
struct HomogeneousDualPair {
    S y1{};
    S z1{};
    S y2{};
    S z2{};

    static HomogeneousDualPair from_projected(const ProjectedPoint<S>& p) {
        return {p.y, p.z, scalar_traits<S>::from_int(1), S{}};
    }
};

template <Scalar S>
bool approx_equal(const HomogeneousDualPair<S>& p, const HomogeneousDualPair<S>& q, double tol) {
    using T = scalar_traits<S>;
    return T::approx_equal(p.y1, q.y1, tol) && T::approx_equal(p.z1, q.z1, tol) &&
           T::approx_equal(p.y2, q.y2, tol) && T::approx_equal(p.z2, q.z2, tol);
}

template <Scalar S>
HomogeneousDualPair<S> normalize(const HomogeneousDualPair<S>& xi) {
    using T = scalar_traits<S>;
    if (!T::is_invertible(xi.y2)) {
        throw NonNormalizableError("second homogeneous coordinate has zero scalar part");
    }
    const S inv = T::from_int(1) / xi.y2;
    return {xi.y1 * inv, xi.z1 * inv - xi.y1 * xi.z2 * inv * inv, T::from_int(1), S{}};
}

template <Scalar S>
ProjectedPoint<S> projected_from_homogeneous(const HomogeneousDualPair<S>& xi) {
    const HomogeneousDualPair<S> n = normalize(xi);
    return {n.y1, n.z1};
}

// Fractional-linear action on the projection plane: applies the 2x2
// unitary-style matrix of the motion to the homogeneous column. Commutes
// with projection: moebius after project equals project after the sphere
// action.
template <Scalar S>
HomogeneousDualPair<S> moebius(const GalileanMotion<S>& m, const HomogeneousDualPair<S>& xi) {
    using T = scalar_traits<S>;
    if (!T::is_invertible(xi.y2)) {
        throw NonNormalizableError("homogeneous pair has zero scalar part");
    }
    const MatD2<S> u = to_rep(m, RepId::SuD2).matrix();
    const D2<S> v0(S{}, xi.y1, S{}, xi.z1);  // i1*(y1 + i2*z1)
    const D2<S> v1(xi.y2, S{}, xi.z2, S{});  // y2 + i2*z2
    const D2<S> w0 = u(0, 0) * v0 + u(0, 1) * v1;
    const D2<S> w1 = u(1, 0) * v0 + u(1, 1) * v1;
    return {w0.a1, w0.a3, w1.a0, w1.a2};
}

// xi * star(xi) as a 2x2 matrix; for a normalized pair this reproduces the
// point matrix h_v of the sphere point with projection (y1, z1).
template <Scalar S>
MatD2<S> homogeneous_outer(const HomogeneousDualPair<S>& xi) {
    const std::array<D2<S>, 2> col = {D2<S>(S{}, xi.y1, S{}, xi.z1),
                                      D2<S>(xi.y2, S{}, xi.z2, S{})};
    MatD2<S> r(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = col[i] * iota2_conj(col[j]);
    }
    return r;
}

namespace plane_detail {

template <Scalar S, std::size_t N>
std::array<D2<S>, N> mat_vec(const MatD2<S>& m, const std::array<D2<S>, N>& v) {
    if (m.dim() != N) throw DimensionMismatchError("matrix/vector dimensions differ");
    std::array<D2<S>, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) out[i] += m(i, j) * v[j];
    }
    return out;
}

}  // namespace plane_detail

// Runs the action inside the chosen representation's own carrier (column
// vector, point matrix, or Clifford point element) and extracts the image.
// Agrees with act() for every representation.
template <Scalar S>
GalileanPoint<S> act_via_rep(const GalileanMotion<S>& m, const GalileanPoint<S>& p, RepId rep) {
    using T = scalar_traits<S>;
    const S one = T::from_int(1);
    switch (rep) {
        case RepId::Std3x3: {
            const MatD2<S> g = to_rep(m, rep).matrix();
            const std::array<D2<S>, 3> v = {D2<S>(one), D2<S>(p.x), D2<S>(p.y)};
            const auto w = plane_detail::mat_vec(g, v);
            return {w[1].a0, w[2].a0};
        }
        case RepId::Ortho3x3D2: {
            const MatD2<S> g = to_rep(m, rep).matrix();
            const std::array<D2<S>, 3> v = {D2<S>(one), D2<S>(S{}, p.x, S{}, S{}),
                                            D2<S>(S{}, S{}, S{}, p.y)};
            const auto w = plane_detail::mat_vec(g, v);
            return {w[1].a1, w[2].a3};
        }
        case RepId::SuD2: {
            const MatD2<S> u = to_rep(m, rep).matrix();
            const MatD2<S> h = point_matrix_h(sphere_from_plane(p));
            const MatD2<S> img = u * h * star(u);
            const S two = T::from_int(2);
            return {two * img(0, 1).a1, two * img(0, 1).a3};
        }
        case RepId::UpperDual: {
            const MatD2<S> w = to_rep(m, rep).matrix();
            const MatD2<S> img = w * point_matrix_p(sphere_from_plane(p)) * inverse(w);
            return {img(0, 1).a0, img(0, 1).a2};
        }
        case RepId::ConvenientDual: {
            const MatD2<S> g = to_rep(m, rep).matrix();
            const std::array<D2<S>, 2> v = {D2<S>(p.x, S{}, p.y, S{}), D2<S>(one)};
            const auto w = plane_detail::mat_vec(g, v);
            return {w[0].a0, w[0].a2};
        }
        case RepId::Grassmann: {
            const GrassmannElement<S> q = motion_to_lambda1(m);
            const Cl3Element<S> img = clifford_act(q, point_to_cl3(sphere_from_plane(p)));
            return plane_from_sphere(cl3_to_point(img));
        }
    }
    throw UnsupportedError("unknown representation");
}

// One row of the stereographic-projection figure: a sphere point, its image
// under the motion, and the projections of both.
template <Scalar S>
struct ProjectionFigureRow {
    S y{}, z{};
    S y_image{}, z_image{};
    S proj_y{}, proj_z{};
    S proj_y_image{}, proj_z_image{};
};

template <Scalar S>
std::vector<ProjectionFigureRow<S>> projection_figure(const std::vector<SpherePoint<S>>& points,
                                                      const GalileanMotion<S>& m) {
    std::vector<ProjectionFigureRow<S>> rows;
    rows.reserve(points.size());
    for (const SpherePoint<S>& v : points) {
        const GalileanPoint<S> image = act_via_rep(m, plane_from_sphere(v), RepId::Ortho3x3D2);
        const SpherePoint<S> vi = sphere_from_plane(image);
        const ProjectedPoint<S> pv = stereo_project(v);
        const ProjectedPoint<S> pvi = stereo_project(vi);
        rows.push_back({v.y, v.z, vi.y, vi.z, pv.y, pv.z, pvi.y, pvi.z});
    }
    return rows;
}

}  // namespace gal2
