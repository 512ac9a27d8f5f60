#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <variant>

#include "gal2/errors.hpp"
#include "gal2/grassmann.hpp"
#include "gal2/matrix.hpp"
#include "gal2/motion.hpp"
#include "gal2/scalar.hpp"

namespace gal2 {

// The six exact representations of the Galilean motion group. Every
// conversion goes through the canonical (a, b, theta) parameters, so there
// is a single dictionary per representation instead of one per pair.
//
//   Std3x3          real lower-triangular 3x3 matrices
//   Ortho3x3D2      orthogonal unimodular 3x3 matrices over the algebra
//   SuD2            2x2 unitary-style matrices over the algebra
//   UpperDual       upper-triangular 2x2 matrices with dual-number entries
//   ConvenientDual  2x2 dual-number matrices with unit lower-right entry
//   Grassmann       unit-scalar-part elements of the exterior algebra
//
// The dual-number entries of the 2x2 representations are carried in the
// i2 slot of the algebra, matching the half-angle rotation factors
// e^{i2*theta/2} of the SuD2 form.
enum class RepId {
    Std3x3,
    Ortho3x3D2,
    SuD2,
    UpperDual,
    ConvenientDual,
    Grassmann,
};

inline constexpr std::array<RepId, 6> kAllReps = {
    RepId::Std3x3,        RepId::Ortho3x3D2,     RepId::SuD2,
    RepId::UpperDual,     RepId::ConvenientDual, RepId::Grassmann,
};

inline constexpr const char* rep_name(RepId rep) {
    switch (rep) {
        case RepId::Std3x3: return "std3x3";
        case RepId::Ortho3x3D2: return "ortho3x3_d2";
        case RepId::SuD2: return "su_d2";
        case RepId::UpperDual: return "upper_dual";
        case RepId::ConvenientDual: return "convenient_dual";
        case RepId::Grassmann: return "grassmann";
    }
    return "?";
}

inline std::optional<RepId> rep_from_name(std::string_view name) {
    for (RepId rep : kAllReps) {
        if (name == rep_name(rep)) return rep;
    }
    return std::nullopt;
}

template <Scalar S>
struct RepElement {
    RepId rep{RepId::Std3x3};
    std::variant<MatD2<S>, GrassmannElement<S>> payload;

    bool holds_matrix() const { return std::holds_alternative<MatD2<S>>(payload); }

    const MatD2<S>& matrix() const {
        if (!holds_matrix()) throw MalformedRepElementError("expected a matrix payload");
        return std::get<MatD2<S>>(payload);
    }

    const GrassmannElement<S>& grassmann() const {
        if (holds_matrix()) throw MalformedRepElementError("expected a grassmann payload");
        return std::get<GrassmannElement<S>>(payload);
    }
};

template <Scalar S>
bool approx_equal(const RepElement<S>& x, const RepElement<S>& y, double tol) {
    if (x.rep != y.rep || x.holds_matrix() != y.holds_matrix()) return false;
    if (x.holds_matrix()) return approx_equal(x.matrix(), y.matrix(), tol);
    return approx_equal(x.grassmann(), y.grassmann(), tol);
}

namespace rep_detail {

template <Scalar S>
S one() {
    return scalar_traits<S>::from_int(1);
}

// Scalar entry a0 + i2*a2: the dual-number entries of the 2x2
// representations.
template <Scalar S>
D2<S> dual_entry(const S& real, const S& dual) {
    return D2<S>(real, S{}, dual, S{});
}

template <Scalar S>
MatD2<S> std3x3_matrix(const GalileanMotion<S>& m) {
    MatD2<S> g = MatD2<S>::identity(3);
    g(1, 0) = D2<S>(m.a);
    g(2, 0) = D2<S>(m.b);
    g(2, 1) = D2<S>(m.theta);
    return g;
}

template <Scalar S>
MatD2<S> su_matrix(const GalileanMotion<S>& m) {
    const SuParams<S> p = su_params(m);
    MatD2<S> g(2);
    g(0, 0) = dual_entry(one<S>(), p.phi);                 // e^{i2*phi}
    g(0, 1) = D2<S>(S{}, p.beta, S{}, p.gamma);            // i1*(beta + i2*gamma)
    g(1, 0) = D2<S>(S{}, -p.beta, S{}, p.gamma);           // -i1*(beta - i2*gamma)
    g(1, 1) = dual_entry(one<S>(), -p.phi);                // e^{-i2*phi}
    return g;
}

template <Scalar S>
MatD2<S> upper_dual_matrix(const GalileanMotion<S>& m) {
    const SuParams<S> p = su_params(m);  // (phi, zeta, eta) coincide with (phi, beta, gamma)
    MatD2<S> g(2);
    g(0, 0) = dual_entry(one<S>(), p.phi);
    g(0, 1) = dual_entry(p.beta, p.gamma);
    g(1, 1) = dual_entry(one<S>(), -p.phi);
    return g;
}

template <Scalar S>
MatD2<S> convenient_dual_matrix(const GalileanMotion<S>& m) {
    MatD2<S> g(2);
    g(0, 0) = dual_entry(one<S>(), m.theta);  // e^{i2*theta} = 1 + i2*theta
    g(0, 1) = dual_entry(m.a, m.b);
    g(1, 1) = D2<S>::one();
    return g;
}

}  // namespace rep_detail

// General element of the rotation group of the three-dimensional space over
// the algebra. It has four connected components indexed by the signs
// (sigma1, sigma2); the component sigma1 = sigma2 = +1 is the image of the
// motion group.
template <Scalar S>
MatD2<S> so3_element(const S& a, const S& b, const S& theta, int sigma1, int sigma2) {
    if ((sigma1 != 1 && sigma1 != -1) || (sigma2 != 1 && sigma2 != -1)) {
        throw std::invalid_argument("sigma flags must be +1 or -1");
    }
    const S s1 = scalar_traits<S>::from_int(sigma1);
    const S s2 = scalar_traits<S>::from_int(sigma2);
    MatD2<S> g(3);
    g(0, 0) = D2<S>(s1);
    g(0, 1) = D2<S>(S{}, -(s1 * s2 * a), S{}, S{});
    g(0, 2) = D2<S>(S{}, S{}, S{}, -(s2 * b - a * theta));
    g(1, 0) = D2<S>(S{}, a, S{}, S{});
    g(1, 1) = D2<S>(s2);
    g(1, 2) = D2<S>(S{}, S{}, -(s1 * theta), S{});
    g(2, 0) = D2<S>(S{}, S{}, S{}, b);
    g(2, 1) = D2<S>(S{}, S{}, theta, S{});
    g(2, 2) = D2<S>(s1 * s2);
    return g;
}

template <Scalar S>
RepElement<S> to_rep(const GalileanMotion<S>& m, RepId rep) {
    switch (rep) {
        case RepId::Std3x3:
            return {rep, rep_detail::std3x3_matrix(m)};
        case RepId::Ortho3x3D2:
            return {rep, so3_element(m.a, m.b, m.theta, 1, 1)};
        case RepId::SuD2:
            return {rep, rep_detail::su_matrix(m)};
        case RepId::UpperDual:
            return {rep, rep_detail::upper_dual_matrix(m)};
        case RepId::ConvenientDual:
            return {rep, rep_detail::convenient_dual_matrix(m)};
        case RepId::Grassmann:
            return {rep, motion_to_lambda1(m)};
    }
    throw UnsupportedError("unknown representation");
}

template <Scalar S>
RepElement<S> rep_identity(RepId rep) {
    return to_rep(GalileanMotion<S>::identity(), rep);
}

// Product in the representation's own carrier.
template <Scalar S>
RepElement<S> rep_product(const RepElement<S>& x, const RepElement<S>& y) {
    if (x.rep != y.rep) throw DimensionMismatchError("representation product across different representations");
    if (x.holds_matrix()) return {x.rep, x.matrix() * y.matrix()};
    return {x.rep, x.grassmann() * y.grassmann()};
}

namespace rep_detail {

// Reads candidate canonical parameters off the structural slots of the
// payload. Validation rebuilds the element from these and compares.
template <Scalar S>
std::optional<GalileanMotion<S>> extract_params(const RepElement<S>& e) {
    switch (e.rep) {
        case RepId::Std3x3: {
            if (!e.holds_matrix() || e.matrix().dim() != 3) return std::nullopt;
            const MatD2<S>& g = e.matrix();
            return GalileanMotion<S>{g(1, 0).a0, g(2, 0).a0, g(2, 1).a0};
        }
        case RepId::Ortho3x3D2: {
            if (!e.holds_matrix() || e.matrix().dim() != 3) return std::nullopt;
            const MatD2<S>& g = e.matrix();
            return GalileanMotion<S>{g(1, 0).a1, g(2, 0).a3, g(2, 1).a2};
        }
        case RepId::SuD2: {
            if (!e.holds_matrix() || e.matrix().dim() != 2) return std::nullopt;
            const MatD2<S>& g = e.matrix();
            return motion_from_su_params<S>({g(0, 0).a2, g(0, 1).a1, g(0, 1).a3});
        }
        case RepId::UpperDual: {
            if (!e.holds_matrix() || e.matrix().dim() != 2) return std::nullopt;
            const MatD2<S>& g = e.matrix();
            return motion_from_su_params<S>({g(0, 0).a2, g(0, 1).a0, g(0, 1).a2});
        }
        case RepId::ConvenientDual: {
            if (!e.holds_matrix() || e.matrix().dim() != 2) return std::nullopt;
            const MatD2<S>& g = e.matrix();
            return GalileanMotion<S>{g(0, 1).a0, g(0, 1).a2, g(0, 0).a2};
        }
        case RepId::Grassmann: {
            if (e.holds_matrix()) return std::nullopt;
            const GrassmannElement<S>& q = e.grassmann();
            return motion_from_su_params<S>({q.a1, q.a2, q.a3});
        }
    }
    return std::nullopt;
}

}  // namespace rep_detail

// True iff the payload matches its representation's structural pattern
// (and, for the orthogonal and unitary-style forms, the corresponding group
// membership predicate).
template <Scalar S>
bool validate_rep(const RepElement<S>& e, double tol = kPredicateTol) {
    const auto params = rep_detail::extract_params(e);
    if (!params) return false;
    const RepElement<S> rebuilt = to_rep(*params, e.rep);
    if (!approx_equal(e, rebuilt, tol)) return false;
    if (e.rep == RepId::Ortho3x3D2 && !is_orthogonal_unimodular(e.matrix(), tol)) return false;
    if (e.rep == RepId::SuD2 && !is_special_unitary(e.matrix(), tol)) return false;
    if (e.rep == RepId::Grassmann && !has_unit_scalar_part(e.grassmann(), tol)) return false;
    return true;
}

template <Scalar S>
GalileanMotion<S> from_rep(const RepElement<S>& e, double tol = kPredicateTol) {
    if (!validate_rep(e, tol)) {
        throw MalformedRepElementError("payload does not match the structural pattern of its representation");
    }
    return *rep_detail::extract_params(e);
}

// Lie algebra generators (A1, A2, A3) = (d/da, d/db, d/dtheta at the
// identity) of the matrix representations. They satisfy
//
//   [A1, A2] = 0,   [A2, A3] = 0,   [A3, A1] = A2.
//
// The Grassmann side is handled by lambda1_lie_generators().
template <Scalar S>
std::array<MatD2<S>, 3> generators(RepId rep) {
    const S one = scalar_traits<S>::from_int(1);
    const S h = half(one);
    switch (rep) {
        case RepId::Std3x3: {
            MatD2<S> a1(3), a2(3), a3(3);
            a1(1, 0) = D2<S>(one);
            a2(2, 0) = D2<S>(one);
            a3(2, 1) = D2<S>(one);
            return {a1, a2, a3};
        }
        case RepId::Ortho3x3D2: {
            MatD2<S> a1(3), a2(3), a3(3);
            a1(0, 1) = D2<S>(S{}, -one, S{}, S{});
            a1(1, 0) = D2<S>(S{}, one, S{}, S{});
            a2(0, 2) = D2<S>(S{}, S{}, S{}, -one);
            a2(2, 0) = D2<S>(S{}, S{}, S{}, one);
            a3(1, 2) = D2<S>(S{}, S{}, -one, S{});
            a3(2, 1) = D2<S>(S{}, S{}, one, S{});
            return {a1, a2, a3};
        }
        case RepId::SuD2: {
            MatD2<S> a1(2), a2(2), a3(2);
            a1(0, 1) = D2<S>(S{}, h, S{}, S{});
            a1(1, 0) = D2<S>(S{}, -h, S{}, S{});
            a2(0, 1) = D2<S>(S{}, S{}, S{}, h);
            a2(1, 0) = D2<S>(S{}, S{}, S{}, h);
            a3(0, 0) = D2<S>(S{}, S{}, h, S{});
            a3(1, 1) = D2<S>(S{}, S{}, -h, S{});
            return {a1, a2, a3};
        }
        case RepId::UpperDual: {
            MatD2<S> a1(2), a2(2), a3(2);
            a1(0, 1) = D2<S>(h);
            a2(0, 1) = D2<S>(S{}, S{}, h, S{});
            a3(0, 0) = D2<S>(S{}, S{}, h, S{});
            a3(1, 1) = D2<S>(S{}, S{}, -h, S{});
            return {a1, a2, a3};
        }
        case RepId::ConvenientDual: {
            MatD2<S> a1(2), a2(2), a3(2);
            a1(0, 1) = D2<S>(one);
            a2(0, 1) = D2<S>(S{}, S{}, one, S{});
            a3(0, 0) = D2<S>(S{}, S{}, one, S{});
            return {a1, a2, a3};
        }
        case RepId::Grassmann:
            throw UnsupportedError("grassmann generators live in the exterior algebra");
    }
    throw UnsupportedError("unknown representation");
}

// Splits a motion into its one-parameter factors
// (a-translation, b-translation, rotation); their ordered product equals
// to_rep(m, rep).
template <Scalar S>
std::array<RepElement<S>, 3> factorize(const GalileanMotion<S>& m, RepId rep) {
    if (rep != RepId::Std3x3 && rep != RepId::Ortho3x3D2 && rep != RepId::SuD2) {
        throw UnsupportedError("factorization is provided for the std3x3, ortho3x3_d2 and su_d2 forms");
    }
    return {to_rep(GalileanMotion<S>{m.a, S{}, S{}}, rep),
            to_rep(GalileanMotion<S>{S{}, m.b, S{}}, rep),
            to_rep(GalileanMotion<S>{S{}, S{}, m.theta}, rep)};
}

}  // namespace gal2
