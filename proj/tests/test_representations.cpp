#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gal2/representations.hpp"
#include "gal2/verify.hpp"

using gal2::D2;
using gal2::GalileanMotion;
using gal2::MatD2;
using gal2::Rational;
using gal2::RepElement;
using gal2::RepId;
using gal2::Rng;

namespace {
using E = D2<Rational>;
using M = GalileanMotion<Rational>;
}  // namespace

TEST_CASE("representation names round trip") {
    for (RepId rep : gal2::kAllReps) {
        CHECK(gal2::rep_from_name(gal2::rep_name(rep)) == rep);
    }
    CHECK_FALSE(gal2::rep_from_name("so3").has_value());
}

TEST_CASE("standard 3x3 form") {
    const auto e = gal2::to_rep(M{5, 7, 2}, RepId::Std3x3);
    const auto& g = e.matrix();
    CHECK(g(0, 0) == E::one());
    CHECK(g(0, 1) == E::zero());
    CHECK(g(0, 2) == E::zero());
    CHECK(g(1, 0) == E(5));
    CHECK(g(1, 1) == E::one());
    CHECK(g(2, 0) == E(7));
    CHECK(g(2, 1) == E(2));
    CHECK(g(2, 2) == E::one());
    CHECK(gal2::from_rep(e) == M{5, 7, 2});
}

TEST_CASE("orthogonal 3x3 form") {
    const Rational a = 2, b = 3, theta = 5;
    const auto g = gal2::to_rep(M{a, b, theta}, RepId::Ortho3x3D2).matrix();
    CHECK(g(0, 0) == E::one());
    CHECK(g(0, 1) == E(0, -a, 0, 0));
    CHECK(g(0, 2) == E(0, 0, 0, -(b - a * theta)));
    CHECK(g(1, 0) == E(0, a, 0, 0));
    CHECK(g(1, 1) == E::one());
    CHECK(g(1, 2) == E(0, 0, -theta, 0));
    CHECK(g(2, 0) == E(0, 0, 0, b));
    CHECK(g(2, 1) == E(0, 0, theta, 0));
    CHECK(g(2, 2) == E::one());
    CHECK(gal2::is_orthogonal_unimodular(g));
    CHECK(gal2::det(g) == E::one());
}

TEST_CASE("unitary-style 2x2 form and half parameters") {
    // (a, b, theta) = (2, 3, 4) gives (phi, beta, gamma) = (2, 1, -1/2).
    const auto u = gal2::to_rep(M{2, 3, 4}, RepId::SuD2).matrix();
    CHECK(u(0, 0) == E(1, 0, 2, 0));
    CHECK(u(0, 1) == E(0, 1, 0, Rational(-1, 2)));
    CHECK(u(1, 0) == E(0, -1, 0, Rational(-1, 2)));
    CHECK(u(1, 1) == E(1, 0, -2, 0));
    CHECK(gal2::is_special_unitary(u));

    // Element with half parameters (1, 2, 3) is the motion (4, 10, 2).
    MatD2<Rational> v(2);
    v(0, 0) = E(1, 0, 1, 0);
    v(0, 1) = E(0, 2, 0, 3);
    v(1, 0) = E(0, -2, 0, 3);
    v(1, 1) = E(1, 0, -1, 0);
    CHECK(gal2::from_rep(RepElement<Rational>{RepId::SuD2, v}) == M{4, 10, 2});
}

TEST_CASE("upper-triangular dual form") {
    const auto w = gal2::to_rep(M{2, 3, 4}, RepId::UpperDual).matrix();
    CHECK(w(0, 0) == E(1, 0, 2, 0));
    CHECK(w(0, 1) == E(1, 0, Rational(-1, 2), 0));  // (a + i2*b)/2 * e^{-i2*theta/2}
    CHECK(w(1, 0) == E::zero());
    CHECK(w(1, 1) == E(1, 0, -2, 0));
    CHECK(gal2::from_rep(RepElement<Rational>{RepId::UpperDual, w}) == M{2, 3, 4});
}

TEST_CASE("convenient dual form") {
    const auto g = gal2::to_rep(M{5, 7, 2}, RepId::ConvenientDual).matrix();
    CHECK(g(0, 0) == E(1, 0, 2, 0));  // e^{i2*theta} = 1 + 2*i2
    CHECK(g(0, 1) == E(5, 0, 7, 0));
    CHECK(g(1, 0) == E::zero());
    CHECK(g(1, 1) == E::one());
}

TEST_CASE("grassmann form") {
    const auto q = gal2::to_rep(M{4, 10, 2}, RepId::Grassmann).grassmann();
    CHECK(q == gal2::GrassmannElement<Rational>(1, 1, 2, 3));
}

TEST_CASE("identity maps to the identity element") {
    for (RepId rep : gal2::kAllReps) {
        const auto e = gal2::rep_identity<Rational>(rep);
        CHECK(gal2::validate_rep(e));
        CHECK(gal2::from_rep(e) == M::identity());
        if (e.holds_matrix()) {
            CHECK(e.matrix() == MatD2<Rational>::identity(e.matrix().dim()));
        } else {
            CHECK(e.grassmann() == gal2::GrassmannElement<Rational>::one());
        }
    }
}

TEST_CASE("round trip and homomorphism across all representations") {
    Rng rng(101);
    for (int t = 0; t < 200; ++t) {
        const auto m1 = gal2::random_motion<Rational>(rng);
        const auto m2 = gal2::random_motion<Rational>(rng);
        for (RepId rep : gal2::kAllReps) {
            const auto e1 = gal2::to_rep(m1, rep);
            CHECK(gal2::validate_rep(e1));
            CHECK(gal2::from_rep(e1) == m1);
            const auto lhs = gal2::to_rep(gal2::compose(m1, m2), rep);
            const auto rhs = gal2::rep_product(e1, gal2::to_rep(m2, rep));
            CHECK(gal2::approx_equal(lhs, rhs, 0.0));
        }
    }
}

TEST_CASE("validation rejects structural violations") {
    // Upper-right entry of the standard form must be zero.
    auto std_bad = gal2::to_rep(M{1, 2, 3}, RepId::Std3x3);
    std::get<MatD2<Rational>>(std_bad.payload)(0, 2) = E::one();
    CHECK_FALSE(gal2::validate_rep(std_bad));
    CHECK_THROWS_AS(gal2::from_rep(std_bad), gal2::MalformedRepElementError);

    // Nonreal entry in the standard form.
    auto std_nonreal = gal2::to_rep(M{1, 2, 3}, RepId::Std3x3);
    std::get<MatD2<Rational>>(std_nonreal.payload)(1, 0) = E(1, 1, 0, 0);
    CHECK_FALSE(gal2::validate_rep(std_nonreal));

    // Sign flips move the orthogonal element to another connected component.
    const auto flipped = gal2::so3_element<Rational>(1, 2, 3, -1, 1);
    CHECK(gal2::is_orthogonal_unimodular(flipped));
    CHECK_FALSE(gal2::validate_rep(RepElement<Rational>{RepId::Ortho3x3D2, flipped}));

    const auto flipped_both = gal2::so3_element<Rational>(0, 0, 0, -1, -1);
    MatD2<Rational> expected(3);
    expected(0, 0) = E(-1);
    expected(1, 1) = E(-1);
    expected(2, 2) = E::one();
    CHECK(flipped_both == expected);
    CHECK_FALSE(gal2::validate_rep(RepElement<Rational>{RepId::Ortho3x3D2, flipped_both}));

    // Broken symmetry between the off-diagonal unitary-style entries.
    auto su_bad = gal2::to_rep(M{1, 2, 3}, RepId::SuD2);
    std::get<MatD2<Rational>>(su_bad.payload)(1, 0) = E(0, 5, 0, 0);
    CHECK_FALSE(gal2::validate_rep(su_bad));

    // Lower-left entry of the dual forms must vanish.
    auto upper_bad = gal2::to_rep(M{1, 2, 3}, RepId::UpperDual);
    std::get<MatD2<Rational>>(upper_bad.payload)(1, 0) = E(0, 0, 1, 0);
    CHECK_FALSE(gal2::validate_rep(upper_bad));

    // Grassmann elements need unit scalar part.
    RepElement<Rational> q_bad{RepId::Grassmann, gal2::GrassmannElement<Rational>(2, 0, 0, 0)};
    CHECK_FALSE(gal2::validate_rep(q_bad));

    // Dimension mismatches are malformed, not fatal.
    RepElement<Rational> wrong_dim{RepId::SuD2, MatD2<Rational>::identity(3)};
    CHECK_FALSE(gal2::validate_rep(wrong_dim));
    RepElement<Rational> wrong_kind{RepId::Grassmann, MatD2<Rational>::identity(2)};
    CHECK_FALSE(gal2::validate_rep(wrong_kind));
}

TEST_CASE("generator triples satisfy the commutation relations") {
    constexpr RepId matrix_reps[] = {RepId::Std3x3, RepId::Ortho3x3D2, RepId::SuD2,
                                     RepId::UpperDual, RepId::ConvenientDual};
    for (RepId rep : matrix_reps) {
        const auto gen = gal2::generators<Rational>(rep);
        const MatD2<Rational> zero(gen[0].dim());
        CHECK(gal2::commutator(gen[0], gen[1]) == zero);
        CHECK(gal2::commutator(gen[1], gen[2]) == zero);
        CHECK(gal2::commutator(gen[2], gen[0]) == gen[1]);
    }
    CHECK_THROWS_AS(gal2::generators<Rational>(RepId::Grassmann), gal2::UnsupportedError);
}

TEST_CASE("printed generator entries") {
    const auto std_gen = gal2::generators<Rational>(RepId::Std3x3);
    CHECK(std_gen[0](1, 0) == E::one());
    CHECK(std_gen[1](2, 0) == E::one());
    CHECK(std_gen[2](2, 1) == E::one());

    const auto su_gen = gal2::generators<Rational>(RepId::SuD2);
    CHECK(su_gen[2](0, 0) == E(0, 0, Rational(1, 2), 0));
    CHECK(su_gen[2](1, 1) == E(0, 0, Rational(-1, 2), 0));
    CHECK(su_gen[0](0, 1) == E(0, Rational(1, 2), 0, 0));
    CHECK(su_gen[1](0, 1) == E(0, 0, 0, Rational(1, 2)));

    const auto ortho_gen = gal2::generators<Rational>(RepId::Ortho3x3D2);
    CHECK(ortho_gen[1](0, 2) == E(0, 0, 0, -1));
    CHECK(ortho_gen[1](2, 0) == E(0, 0, 0, 1));
}

TEST_CASE("generators exponentiate to the one-parameter subgroups") {
    // exp(t*A) of a nilpotent-entry generator truncates; compare against the
    // one-parameter factor of the factorization.
    const Rational t(7, 3);
    for (RepId rep : {RepId::Ortho3x3D2, RepId::SuD2}) {
        const auto gen = gal2::generators<Rational>(rep);
        const auto factors = gal2::factorize(M{0, 0, t}, rep);
        // A3 generates the rotation subgroup: exp(t*A3) = I + t*A3 + t^2*A3^2/2.
        const auto a3 = gen[2];
        const auto a3t = E(t) * a3;
        const auto sq = E(Rational(1, 2)) * (a3t * a3t);
        const auto series = MatD2<Rational>::identity(a3.dim()) + a3t + sq;
        CHECK(series == factors[2].matrix());
    }
}

TEST_CASE("factorization multiplies back to the element") {
    Rng rng(103);
    for (RepId rep : {RepId::Std3x3, RepId::Ortho3x3D2, RepId::SuD2}) {
        for (int t = 0; t < 100; ++t) {
            const auto m = gal2::random_motion<Rational>(rng);
            const auto f = gal2::factorize(m, rep);
            for (const auto& part : f) CHECK(gal2::validate_rep(part));
            CHECK(gal2::rep_product(gal2::rep_product(f[0], f[1]), f[2]).matrix() ==
                  gal2::to_rep(m, rep).matrix());
        }
    }
    CHECK(gal2::factorize(M{3, 0, 0}, RepId::Std3x3)[1].matrix() == MatD2<Rational>::identity(3));
    CHECK_THROWS_AS(gal2::factorize(M{1, 2, 3}, RepId::Grassmann), gal2::UnsupportedError);
    CHECK_THROWS_AS(gal2::factorize(M{1, 2, 3}, RepId::ConvenientDual), gal2::UnsupportedError);
}

TEST_CASE("sigma flags") {
    CHECK_THROWS_AS(gal2::so3_element<Rational>(1, 2, 3, 0, 1), std::invalid_argument);
    Rng rng(107);
    for (int t = 0; t < 50; ++t) {
        const auto m = gal2::random_motion<Rational>(rng);
        CHECK(gal2::so3_element(m.a, m.b, m.theta, 1, 1) ==
              gal2::to_rep(m, RepId::Ortho3x3D2).matrix());
    }
}

TEST_CASE("rep product requires matching representations") {
    const auto e1 = gal2::to_rep(M{1, 2, 3}, RepId::Std3x3);
    const auto e2 = gal2::to_rep(M{1, 2, 3}, RepId::SuD2);
    CHECK_THROWS_AS(gal2::rep_product(e1, e2), gal2::DimensionMismatchError);
}
