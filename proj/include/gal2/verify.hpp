#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gal2/clifford.hpp"
#include "gal2/grassmann.hpp"
#include "gal2/matrix.hpp"
#include "gal2/motion.hpp"
#include "gal2/pimenov.hpp"
#include "gal2/plane.hpp"
#include "gal2/point.hpp"
#include "gal2/representations.hpp"
#include "gal2/scalar.hpp"

namespace gal2 {

// Deterministic splitmix64 generator. Not relying on <random> distributions
// keeps verification reports bit-reproducible across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Inclusive bounds.
    long long next_int(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    double next_double(double lo, double hi) {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    bool next_bool() { return (next() & 1) != 0; }

  private:
    std::uint64_t state_;
};

// Small random values: fractions with bounded numerators in exact mode so
// that 128-bit intermediates cannot overflow, reals in [-2, 2] otherwise.
template <Scalar S>
S random_scalar(Rng& rng) {
    if constexpr (scalar_traits<S>::is_exact) {
        return Rational(rng.next_int(-9, 9), rng.next_int(1, 4));
    } else {
        return rng.next_double(-2.0, 2.0);
    }
}

template <Scalar S>
S random_scalar_invertible(Rng& rng) {
    if constexpr (scalar_traits<S>::is_exact) {
        return Rational(rng.next_int(0, 1) == 0 ? rng.next_int(1, 9) : rng.next_int(-9, -1),
                        rng.next_int(1, 4));
    } else {
        const double mag = rng.next_double(0.1, 2.0);
        return rng.next_bool() ? mag : -mag;
    }
}

template <Scalar S>
D2<S> random_d2(Rng& rng) {
    return {random_scalar<S>(rng), random_scalar<S>(rng), random_scalar<S>(rng),
            random_scalar<S>(rng)};
}

template <Scalar S>
D2<S> random_d2_invertible(Rng& rng) {
    return {random_scalar_invertible<S>(rng), random_scalar<S>(rng), random_scalar<S>(rng),
            random_scalar<S>(rng)};
}

template <Scalar S>
D2<S> random_d2_nilpotent(Rng& rng) {
    return {S{}, random_scalar<S>(rng), random_scalar<S>(rng), random_scalar<S>(rng)};
}

template <Scalar S>
GalileanMotion<S> random_motion(Rng& rng) {
    return {random_scalar<S>(rng), random_scalar<S>(rng), random_scalar<S>(rng)};
}

template <Scalar S>
GalileanPoint<S> random_point(Rng& rng) {
    return {random_scalar<S>(rng), random_scalar<S>(rng)};
}

template <Scalar S>
SpherePoint<S> random_sphere_point(Rng& rng) {
    return {random_scalar<S>(rng), random_scalar<S>(rng)};
}

template <Scalar S>
GrassmannElement<S> random_grassmann(Rng& rng) {
    return {random_scalar<S>(rng), random_scalar<S>(rng), random_scalar<S>(rng),
            random_scalar<S>(rng)};
}

// Entries are kept integral in exact mode so elimination-based oracles stay
// far from the 128-bit overflow guard.
template <Scalar S>
MatD2<S> random_matrix(Rng& rng, std::size_t n) {
    MatD2<S> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if constexpr (scalar_traits<S>::is_exact) {
                m(i, j) = D2<S>(Rational(rng.next_int(-9, 9)), Rational(rng.next_int(-9, 9)),
                                Rational(rng.next_int(-9, 9)), Rational(rng.next_int(-9, 9)));
            } else {
                m(i, j) = random_d2<S>(rng);
            }
        }
    }
    return m;
}

template <Scalar S>
MatD2<S> random_matrix_invertible_re(Rng& rng, std::size_t n) {
    for (;;) {
        MatD2<S> m = random_matrix<S>(rng, n);
        const S d = m.real_part().det();
        if constexpr (scalar_traits<S>::is_exact) {
            if (!d.is_zero()) return m;
        } else {
            if (scalar_traits<S>::abs(d) > 0.5) return m;
        }
    }
}

template <Scalar S>
MatD2<S> random_matrix_singular_re(Rng& rng, std::size_t n) {
    MatD2<S> m = random_matrix<S>(rng, n);
    // Make the real part of one row a copy of another; the nilpotent parts
    // stay arbitrary.
    const auto src = static_cast<std::size_t>(rng.next_int(0, static_cast<long long>(n) - 1));
    auto dst = static_cast<std::size_t>(rng.next_int(0, static_cast<long long>(n) - 1));
    if (dst == src) dst = (dst + 1) % n;
    for (std::size_t j = 0; j < n; ++j) m(dst, j).a0 = m(src, j).a0;
    return m;
}

// ---------------------------------------------------------------------------
// Property checks. Each returns true when every trial holds at the given
// tolerance; `detail` reports the first failing trial. The same functions
// back the CLI verification command and the acceptance suite.
// ---------------------------------------------------------------------------

namespace props {

template <Scalar S>
bool d2_ring_axioms(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const D2<S> a = random_d2<S>(rng), b = random_d2<S>(rng), c = random_d2<S>(rng);
        const bool ok = approx_equal(a * b, b * a, tol) &&
                        approx_equal((a * b) * c, a * (b * c), tol) &&
                        approx_equal(a * (b + c), a * b + a * c, tol) &&
                        approx_equal((a + b) + c, a + (b + c), tol) &&
                        approx_equal(a + b, b + a, tol) && approx_equal(a + D2<S>(), a, tol);
        if (!ok) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool d2_inverse_identity(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const D2<S> a = random_d2_invertible<S>(rng);
        if (!approx_equal(a * inverse(a), D2<S>::one(), tol) ||
            !approx_equal(inverse(a) * a, D2<S>::one(), tol)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool d2_conj_multiplicative(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const D2<S> a = random_d2<S>(rng), c = random_d2<S>(rng);
        if (!approx_equal(iota2_conj(a * c), iota2_conj(a) * iota2_conj(c), tol) ||
            !approx_equal(iota2_conj(iota2_conj(a)), a, tol)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool d2_re_multiplicative(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const D2<S> a = random_d2<S>(rng), b = random_d2<S>(rng);
        if (!scalar_traits<S>::approx_equal(re(a * b), re(a) * re(b), tol)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool d2_exp_additive(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        D2<S> a, b;
        if constexpr (scalar_traits<S>::is_exact) {
            a = random_d2_nilpotent<S>(rng);
            b = random_d2_nilpotent<S>(rng);
        } else {
            a = random_d2<S>(rng);
            b = random_d2<S>(rng);
        }
        if (!approx_equal(exp(a) * exp(b), exp(a + b), tol)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool d2_exp_matches_jet(Rng& rng, int trials, double tol, std::string& detail) {
    using T = scalar_traits<S>;
    for (int t = 0; t < trials; ++t) {
        D2<S> a;
        if constexpr (T::is_exact) {
            a = random_d2_nilpotent<S>(rng);
        } else {
            a = random_d2<S>(rng);
        }
        const S e = T::exp(a.a0);
        const Jet2<S> jet{e, e, e};
        if (!approx_equal(exp(a), eval(jet, a), tol)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool dual_embedding_agrees(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const DualNumber<S> x{random_scalar<S>(rng), random_scalar<S>(rng)};
        const DualNumber<S> y{random_scalar_invertible<S>(rng), random_scalar<S>(rng)};
        const bool ok = approx_equal((x + y).embed(), x.embed() + y.embed(), tol) &&
                        approx_equal((x * y).embed(), x.embed() * y.embed(), tol) &&
                        approx_equal(inverse(y).embed(), inverse(y.embed()), tol);
        if (!ok) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool mat_closed_form_inverse(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = (t % 2 == 0) ? 2 : 3;
        const MatD2<S> a = random_matrix_invertible_re<S>(rng, n);
        const MatD2<S> inv = inverse(a);
        const MatD2<S> id = MatD2<S>::identity(n);
        if (!approx_equal(a * inv, id, tol) || !approx_equal(inv * a, id, tol)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool mat_det_real_part(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = (t % 2 == 0) ? 2 : 3;
        const MatD2<S> a =
            (t % 4 < 2) ? random_matrix<S>(rng, n) : random_matrix_singular_re<S>(rng, n);
        if (!scalar_traits<S>::approx_equal(re(det(a)), a.real_part().det(), tol)) {
            detail = "trial " + std::to_string(t) + ": Re det != det Re";
            return false;
        }
    }
    return true;
}

// Invertibility coincides with nondegeneracy (invertible determinant). The
// generator only produces matrices that are clearly on one side in float
// mode; near the threshold the two predicates can legitimately disagree by
// rounding.
template <Scalar S>
bool mat_invertible_iff_nondegenerate(Rng& rng, int trials, double /*tol*/, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = (t % 2 == 0) ? 2 : 3;
        MatD2<S> a;
        if constexpr (scalar_traits<S>::is_exact) {
            a = (t % 4 < 2) ? random_matrix<S>(rng, n) : random_matrix_singular_re<S>(rng, n);
        } else {
            a = (t % 4 < 2) ? random_matrix_invertible_re<S>(rng, n)
                            : random_matrix_singular_re<S>(rng, n);
        }
        bool invertible = true;
        try {
            (void)inverse(a);
        } catch (const NonInvertibleError&) {
            invertible = false;
        }
        if (invertible != is_nondegenerate(a)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool mat_star_antiautomorphism(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = (t % 2 == 0) ? 2 : 3;
        const MatD2<S> a = random_matrix<S>(rng, n);
        const MatD2<S> b = random_matrix<S>(rng, n);
        if (!approx_equal(star(a * b), star(b) * star(a), tol) ||
            !approx_equal(star(star(a)), a, tol)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool mat_decompose_roundtrip(Rng& rng, int trials, double /*tol*/, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = (t % 2 == 0) ? 2 : 3;
        const MatD2<S> a = random_matrix<S>(rng, n);
        const auto parts = a.decompose();
        if (!(MatD2<S>::from_parts(parts[0], parts[1], parts[2], parts[3]) == a)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool motion_group_axioms(Rng& rng, int trials, double tol, std::string& detail) {
    const GalileanMotion<S> id = GalileanMotion<S>::identity();
    for (int t = 0; t < trials; ++t) {
        const auto m1 = random_motion<S>(rng), m2 = random_motion<S>(rng),
                   m3 = random_motion<S>(rng);
        const bool ok =
            approx_equal(compose(compose(m1, m2), m3), compose(m1, compose(m2, m3)), tol) &&
            approx_equal(compose(m1, inverse(m1)), id, tol) &&
            approx_equal(compose(inverse(m1), m1), id, tol) &&
            approx_equal(compose(m1, id), m1, tol) && approx_equal(compose(id, m1), m1, tol);
        if (!ok) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool rep_homomorphism(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto m1 = random_motion<S>(rng), m2 = random_motion<S>(rng);
        for (RepId rep : kAllReps) {
            const auto lhs = to_rep(compose(m1, m2), rep);
            const auto rhs = rep_product(to_rep(m1, rep), to_rep(m2, rep));
            if (!approx_equal(lhs, rhs, tol)) {
                detail = "trial " + std::to_string(t) + ", rep " + rep_name(rep);
                return false;
            }
        }
    }
    return true;
}

template <Scalar S>
bool rep_roundtrip(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto m = random_motion<S>(rng);
        for (RepId rep : kAllReps) {
            const auto e = to_rep(m, rep);
            if (!validate_rep(e, tol) || !approx_equal(from_rep(e, tol), m, tol)) {
                detail = "trial " + std::to_string(t) + ", rep " + rep_name(rep);
                return false;
            }
        }
    }
    return true;
}

template <Scalar S>
bool rep_membership(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto m = random_motion<S>(rng);
        if (!is_special_unitary(to_rep(m, RepId::SuD2).matrix(), tol)) {
            detail = "trial " + std::to_string(t) + ": su membership";
            return false;
        }
        if (!is_orthogonal_unimodular(to_rep(m, RepId::Ortho3x3D2).matrix(), tol)) {
            detail = "trial " + std::to_string(t) + ": orthogonal membership";
            return false;
        }
        for (int s1 : {1, -1}) {
            for (int s2 : {1, -1}) {
                if (!is_orthogonal_unimodular(so3_element(m.a, m.b, m.theta, s1, s2), tol)) {
                    detail = "trial " + std::to_string(t) + ": sigma component";
                    return false;
                }
            }
        }
    }
    return true;
}

template <Scalar S>
bool rep_commutation_relations(Rng&, int, double tol, std::string& detail) {
    constexpr RepId matrix_reps[] = {RepId::Std3x3, RepId::Ortho3x3D2, RepId::SuD2,
                                     RepId::UpperDual, RepId::ConvenientDual};
    for (RepId rep : matrix_reps) {
        const auto gen = generators<S>(rep);
        const MatD2<S> zero(gen[0].dim());
        if (!approx_equal(commutator(gen[0], gen[1]), zero, tol) ||
            !approx_equal(commutator(gen[1], gen[2]), zero, tol) ||
            !approx_equal(commutator(gen[2], gen[0]), gen[1], tol)) {
            detail = std::string("rep ") + rep_name(rep);
            return false;
        }
    }
    const auto gq = lambda1_lie_generators<S>();
    const GrassmannElement<S> gzero;
    if (!approx_equal(commutator(gq[0], gq[1]), gzero, tol) ||
        !approx_equal(commutator(gq[1], gq[2]), gzero, tol) ||
        !approx_equal(commutator(gq[2], gq[0]), gq[1], tol)) {
        detail = "grassmann generators";
        return false;
    }
    return true;
}

template <Scalar S>
bool rep_factorization(Rng& rng, int trials, double tol, std::string& detail) {
    constexpr RepId reps[] = {RepId::Std3x3, RepId::Ortho3x3D2, RepId::SuD2};
    for (int t = 0; t < trials; ++t) {
        const auto m = random_motion<S>(rng);
        for (RepId rep : reps) {
            const auto f = factorize(m, rep);
            const auto product = rep_product(rep_product(f[0], f[1]), f[2]);
            if (!approx_equal(product, to_rep(m, rep), tol)) {
                detail = "trial " + std::to_string(t) + ", rep " + rep_name(rep);
                return false;
            }
        }
    }
    return true;
}

template <Scalar S>
bool action_agreement(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto m = random_motion<S>(rng);
        const auto p = random_point<S>(rng);
        const auto direct = act(m, p);
        for (RepId rep : kAllReps) {
            if (!approx_equal(act_via_rep(m, p, rep), direct, tol)) {
                detail = "trial " + std::to_string(t) + ", rep " + rep_name(rep);
                return false;
            }
        }
    }
    return true;
}

template <Scalar S>
bool action_isometry(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto m = random_motion<S>(rng);
        const auto p = random_point<S>(rng);
        auto q = random_point<S>(rng);
        if (t % 2 == 0) q.x = p.x;  // exercise the degenerate branch
        if (!scalar_traits<S>::approx_equal(distance(act(m, p), act(m, q)), distance(p, q), tol)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool action_homomorphism(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto m1 = random_motion<S>(rng), m2 = random_motion<S>(rng);
        const auto p = random_point<S>(rng);
        if (!approx_equal(act(compose(m1, m2), p), act(m1, act(m2, p)), tol)) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

// moebius . project = project . rotate, and the outer product of the
// normalized homogeneous coordinates reproduces the point matrix.
template <Scalar S>
bool moebius_commuting_square(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto m = random_motion<S>(rng);
        const auto v = random_sphere_point<S>(rng);
        const auto xi = HomogeneousDualPair<S>::from_projected(stereo_project(v));
        const auto moved = moebius(m, xi);
        const SpherePoint<S> v_img = act_sphere(m, v);
        if (!approx_equal(projected_from_homogeneous(moved), stereo_project(v_img), tol)) {
            detail = "trial " + std::to_string(t) + ": square does not commute";
            return false;
        }
        if (!approx_equal(homogeneous_outer(xi), point_matrix_h(v), tol) ||
            !approx_equal(homogeneous_outer(normalize(moved)), point_matrix_h(v_img), tol)) {
            detail = "trial " + std::to_string(t) + ": outer product mismatch";
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool grassmann_group_isomorphism(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto m1 = random_motion<S>(rng), m2 = random_motion<S>(rng);
        const auto q1 = motion_to_lambda1(m1), q2 = motion_to_lambda1(m2);
        const bool ok =
            approx_equal(motion_to_lambda1(compose(m1, m2)), q1 * q2, tol) &&
            approx_equal(lambda1_to_motion(q1, tol), m1, tol) &&
            approx_equal(motion_to_lambda1(inverse(m1)), conj(q1), tol) &&
            approx_equal(q1 * conj(q1), GrassmannElement<S>::one(), tol);
        if (!ok) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

template <Scalar S>
bool grassmann_conj_norm(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto q = random_grassmann<S>(rng);
        const auto qq = q * conj(q);
        const bool ok = scalar_traits<S>::approx_equal(qq.a0, norm_sq(q), tol) &&
                        scalar_traits<S>::approx_equal(qq.a1, S{}, tol) &&
                        scalar_traits<S>::approx_equal(qq.a2, S{}, tol) &&
                        scalar_traits<S>::approx_equal(qq.a3, S{}, tol);
        if (!ok) {
            detail = "trial " + std::to_string(t);
            return false;
        }
    }
    return true;
}

// The 2x2 matrix model of the Clifford algebra: e1 -> i2*diag(1,-1),
// e2 -> offdiag(i1, -i1), e3 -> diag(-1, 1). Checks every basis product
// against matrix multiplication.
template <Scalar S>
bool cl3_matches_matrix_model(Rng&, int, double tol, std::string& detail) {
    using E = Cl3Element<S>;
    const S one = scalar_traits<S>::from_int(1);
    MatD2<S> gen[3] = {MatD2<S>(2), MatD2<S>(2), MatD2<S>(2)};
    gen[0](0, 0) = D2<S>(S{}, S{}, one, S{});
    gen[0](1, 1) = D2<S>(S{}, S{}, -one, S{});
    gen[1](0, 1) = D2<S>(S{}, one, S{}, S{});
    gen[1](1, 0) = D2<S>(S{}, -one, S{}, S{});
    gen[2](0, 0) = D2<S>(-one);
    gen[2](1, 1) = D2<S>(one);

    MatD2<S> model[8];
    for (int i = 0; i < 8; ++i) {
        MatD2<S> acc = MatD2<S>::identity(2);
        for (int g = 0; g < 3; ++g) {
            if (cl3_detail::kMaskOfIndex[i] & (1 << g)) acc = acc * gen[g];
        }
        model[i] = acc;
    }

    const auto to_matrix = [&](const E& v) {
        MatD2<S> acc(2);
        for (int i = 0; i < 8; ++i) acc = acc + v.c[i] * model[i];
        return acc;
    };

    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const E product = E::basis(i) * E::basis(j);
            if (!approx_equal(to_matrix(product), model[i] * model[j], tol)) {
                detail = "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                return false;
            }
        }
    }
    return true;
}

// Sandwich in the Clifford carrier agrees with the 2x2 matrix sandwich and
// with the direct action.
template <Scalar S>
bool cl3_sandwich_agreement(Rng& rng, int trials, double tol, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto m = random_motion<S>(rng);
        const auto v = random_sphere_point<S>(rng);
        const auto moved = clifford_act(motion_to_lambda1(m), point_to_cl3(v));
        const SpherePoint<S> expected = act_sphere(m, v);
        if (!approx_equal(cl3_to_point(moved, tol), expected, tol)) {
            detail = "trial " + std::to_string(t) + ": clifford path";
            return false;
        }
        const MatD2<S> u = to_rep(m, RepId::SuD2).matrix();
        const MatD2<S> h_img = u * point_matrix_h(v) * star(u);
        if (!approx_equal(h_img, point_matrix_h(expected), tol)) {
            detail = "trial " + std::to_string(t) + ": matrix sandwich";
            return false;
        }
    }
    return true;
}

}  // namespace props

// ---------------------------------------------------------------------------
// Registry and report.
// ---------------------------------------------------------------------------

struct PropertyResult {
    std::string name;
    int trials = 0;
    bool passed = false;
    std::string detail;  // empty on success
};

struct VerifyReport {
    std::vector<PropertyResult> results;

    bool all_passed() const {
        for (const auto& r : results) {
            if (!r.passed) return false;
        }
        return true;
    }
};

enum class ScalarMode { Float, Rational, Both };

namespace verify_detail {

inline std::uint64_t name_hash(std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

template <Scalar S>
void add_properties(std::vector<PropertyResult>& out, const char* prefix, std::uint64_t seed,
                    int trials) {
    using Check = bool (*)(Rng&, int, double, std::string&);
    struct Entry {
        const char* name;
        Check check;
        double float_tol;
    };
    // Algebra axioms run at 1e-12 in float mode; structural and action
    // properties at 1e-9. Exact mode ignores the tolerance.
    static const Entry entries[] = {
        {"d2.ring_axioms", &props::d2_ring_axioms<S>, 1e-12},
        {"d2.inverse_identity", &props::d2_inverse_identity<S>, 1e-12},
        {"d2.conj_multiplicative", &props::d2_conj_multiplicative<S>, 1e-12},
        {"d2.re_multiplicative", &props::d2_re_multiplicative<S>, 1e-12},
        {"d2.exp_additive", &props::d2_exp_additive<S>, 1e-12},
        {"d2.exp_matches_jet", &props::d2_exp_matches_jet<S>, 1e-12},
        {"d2.dual_embedding", &props::dual_embedding_agrees<S>, 1e-12},
        {"mat.closed_form_inverse", &props::mat_closed_form_inverse<S>, kPredicateTol},
        {"mat.det_real_part", &props::mat_det_real_part<S>, 1e-9},
        {"mat.invertible_iff_nondegenerate", &props::mat_invertible_iff_nondegenerate<S>, 0.0},
        {"mat.star_antiautomorphism", &props::mat_star_antiautomorphism<S>, 1e-12},
        {"mat.decompose_roundtrip", &props::mat_decompose_roundtrip<S>, 0.0},
        {"group.axioms", &props::motion_group_axioms<S>, 1e-12},
        {"rep.homomorphism", &props::rep_homomorphism<S>, kPredicateTol},
        {"rep.roundtrip", &props::rep_roundtrip<S>, kPredicateTol},
        {"rep.membership", &props::rep_membership<S>, kPredicateTol},
        {"rep.commutation_relations", &props::rep_commutation_relations<S>, kPredicateTol},
        {"rep.factorization", &props::rep_factorization<S>, kPredicateTol},
        {"plane.action_agreement", &props::action_agreement<S>, kPredicateTol},
        {"plane.isometry", &props::action_isometry<S>, kPredicateTol},
        {"plane.action_homomorphism", &props::action_homomorphism<S>, kPredicateTol},
        {"plane.moebius_commuting_square", &props::moebius_commuting_square<S>, kPredicateTol},
        {"grassmann.group_isomorphism", &props::grassmann_group_isomorphism<S>, kPredicateTol},
        {"grassmann.conj_norm", &props::grassmann_conj_norm<S>, 1e-12},
        {"cl3.matrix_model", &props::cl3_matches_matrix_model<S>, kPredicateTol},
        {"cl3.sandwich_agreement", &props::cl3_sandwich_agreement<S>, kPredicateTol},
    };
    for (const Entry& e : entries) {
        PropertyResult r;
        r.name = std::string(prefix) + e.name;
        r.trials = trials;
        // Per-property generator: the report does not depend on suite order.
        Rng rng(seed ^ name_hash(r.name));
        std::string detail;
        try {
            r.passed = e.check(rng, trials, e.float_tol, detail);
            r.detail = detail;
        } catch (const std::exception& ex) {
            r.passed = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        out.push_back(std::move(r));
    }
}

}  // namespace verify_detail

inline VerifyReport run_verification(std::uint64_t seed, int trials,
                                     ScalarMode mode = ScalarMode::Both) {
    VerifyReport report;
    if (mode != ScalarMode::Float) {
        verify_detail::add_properties<Rational>(report.results, "rational.", seed, trials);
    }
    if (mode != ScalarMode::Rational) {
        verify_detail::add_properties<double>(report.results, "float.", seed, trials);
    }
    return report;
}

}  // namespace gal2
