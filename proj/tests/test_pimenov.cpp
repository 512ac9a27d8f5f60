#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gal2/pimenov.hpp"
#include "gal2/rational.hpp"
#include "gal2/verify.hpp"

using gal2::D2;
using gal2::DualNumber;
using gal2::Jet2;
using gal2::Rational;
using gal2::Rng;

namespace {
const double kPi2 = std::acos(0.0);  // pi/2
}

TEST_CASE("addition is componentwise") {
    const D2<Rational> e1 = D2<Rational>::iota1();
    CHECK(D2<Rational>::one() + e1 == D2<Rational>(1, 1, 0, 0));
    const D2<Rational> a(1, 2, 3, 4);
    CHECK(a + D2<Rational>::zero() == a);
    CHECK(a + D2<Rational>(4, 3, 2, 1) == D2<Rational>(5, 5, 5, 5));
}

TEST_CASE("multiplication respects nilpotency") {
    using E = D2<Rational>;
    CHECK(E::iota1() * E::iota1() == E::zero());
    CHECK(E::iota2() * E::iota2() == E::zero());
    CHECK(E::iota1() * E::iota2() == E::iota12());
    CHECK(E::iota2() * E::iota1() == E::iota12());
    CHECK(E::iota12() * E::iota2() == E::zero());
    CHECK((E::one() + E::iota1()) * (E::one() + E::iota2()) == E(1, 1, 1, 1));
}

TEST_CASE("inverse formula") {
    using E = D2<Rational>;
    CHECK(gal2::inverse(E::one()) == E::one());

    const E a(2, 1, 0, 0);
    const E expected(Rational(1, 2), Rational(-1, 4), 0, 0);
    CHECK(gal2::inverse(a) == expected);
    CHECK(a * gal2::inverse(a) == E::one());

    CHECK_THROWS_AS(gal2::inverse(E::iota1()), gal2::NonInvertibleError);

    // Full four-component element, checked through the defining identity.
    const E b(Rational(-3, 2), Rational(7, 3), Rational(1, 5), Rational(-4));
    CHECK(b * gal2::inverse(b) == E::one());
    CHECK(gal2::inverse(b) * b == E::one());
}

TEST_CASE("float-mode inverse threshold") {
    CHECK_THROWS_AS(gal2::inverse(D2<double>(1e-13, 1.0, 1.0, 1.0)), gal2::NonInvertibleError);
    const D2<double> a(0.5, 1.0, -2.0, 3.0);
    CHECK(gal2::approx_equal(a * gal2::inverse(a), D2<double>::one(), 1e-14));
}

TEST_CASE("iota2 conjugation") {
    using E = D2<Rational>;
    CHECK(gal2::iota2_conj(E(1, 1, 1, 1)) == E(1, 1, -1, -1));
    CHECK(gal2::iota2_conj(E(7)) == E(7));
    const E a(3, -2, 5, 1);
    CHECK(gal2::iota2_conj(gal2::iota2_conj(a)) == a);

    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto x = gal2::random_d2<Rational>(rng);
        const auto y = gal2::random_d2<Rational>(rng);
        CHECK(gal2::iota2_conj(x * y) == gal2::iota2_conj(x) * gal2::iota2_conj(y));
    }
}

TEST_CASE("jet evaluation") {
    using E = D2<Rational>;

    // Exponential jet at zero scalar part: f = f' = f'' = 1.
    const Jet2<Rational> ejet{1, 1, 1};
    const E n(0, 2, 3, 5);
    CHECK(gal2::eval(ejet, n) == E(1, 2, 3, 5 + 6));

    // Identity jet leaves the element unchanged.
    const E a(Rational(7, 2), 1, -4, 9);
    CHECK(gal2::eval(gal2::identity_jet(a.a0), a) == a);

    // sin at pi/2: value 1, first derivative 0, second derivative -1.
    const auto sj = gal2::sin_jet(kPi2);
    const D2<double> arg(kPi2, 1.0, 1.0, 0.0);
    const auto r = gal2::eval(sj, arg);
    CHECK(gal2::approx_equal(r, D2<double>(1.0, 0.0, 0.0, -1.0), 1e-15));
}

TEST_CASE("built-in jets carry the right derivatives") {
    const double x = 0.7;
    const auto ej = gal2::exp_jet(x);
    CHECK(ej.f0 == doctest::Approx(std::exp(x)));
    CHECK(ej.f1 == doctest::Approx(std::exp(x)));
    const auto cj = gal2::cos_jet(x);
    CHECK(cj.f1 == doctest::Approx(-std::sin(x)));
    const auto lj = gal2::log_jet(x);
    CHECK(lj.f1 == doctest::Approx(1.0 / x));
    CHECK(lj.f2 == doctest::Approx(-1.0 / (x * x)));
    CHECK_THROWS_AS(gal2::log_jet(-1.0), std::domain_error);
    const auto pj = gal2::pow_jet(x, 3.0);
    CHECK(pj.f1 == doctest::Approx(3.0 * x * x));
    CHECK(pj.f2 == doctest::Approx(6.0 * x));
}

TEST_CASE("exponential") {
    using E = D2<Rational>;
    CHECK(gal2::exp(E::zero()) == E::one());
    CHECK(gal2::exp(E(0, 1, 1, 0)) == E(1, 1, 1, 1));

    // Dual-subalgebra rotation factor: exp(i2*phi) = 1 + phi*i2, a unit.
    const Rational phi(5, 3);
    const E rot = gal2::exp(E(0, 0, phi, 0));
    CHECK(rot == E(1, 0, phi, 0));
    CHECK(rot * gal2::exp(E(0, 0, -phi, 0)) == E::one());

    // e^q is irrational for rational q != 0.
    CHECK_THROWS_AS(gal2::exp(E(1, 0, 0, 0)), std::domain_error);

    // Float mode scales by e^{a0}.
    const D2<double> a(0.3, 1.0, 2.0, -1.0);
    const double e = std::exp(0.3);
    CHECK(gal2::approx_equal(gal2::exp(a), D2<double>(e, e, 2 * e, e * (2.0 - 1.0)), 1e-12));
}

TEST_CASE("exp is additive") {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        const auto a = gal2::random_d2_nilpotent<Rational>(rng);
        const auto b = gal2::random_d2_nilpotent<Rational>(rng);
        CHECK(gal2::exp(a) * gal2::exp(b) == gal2::exp(a + b));
    }
}

TEST_CASE("scalar part is multiplicative") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        const auto a = gal2::random_d2<Rational>(rng);
        const auto b = gal2::random_d2<Rational>(rng);
        CHECK(gal2::re(a * b) == gal2::re(a) * gal2::re(b));
    }
}

TEST_CASE("dual numbers agree with the embedding") {
    const DualNumber<Rational> x(3, 4), y(Rational(1, 2), Rational(-5));
    CHECK((x + y).embed() == x.embed() + y.embed());
    CHECK((x * y).embed() == x.embed() * y.embed());
    CHECK(gal2::inverse(y).embed() == gal2::inverse(y.embed()));
    CHECK_THROWS_AS(gal2::inverse(DualNumber<Rational>(0, 1)), gal2::NonInvertibleError);
}

TEST_CASE("text form") {
    using E = D2<Rational>;
    CHECK(gal2::to_text(E(1, 2, 0, -4)) == "1 + 2*i1 - 4*i1i2");
    CHECK(gal2::to_text(E::zero()) == "0");
    CHECK(gal2::to_text(E(0, 0, Rational(3, 4), 0)) == "3/4*i2");
    CHECK(gal2::to_text(E(-1, 0, 0, 1)) == "-1 + 1*i1i2");

    CHECK(gal2::d2_from_text<Rational>("1 + 2*i1 - 4*i1i2") == E(1, 2, 0, -4));
    CHECK(gal2::d2_from_text<Rational>("0") == E::zero());
    CHECK(gal2::d2_from_text<Rational>("i1") == E::iota1());
    CHECK(gal2::d2_from_text<Rational>("-i2 + 3/4") == E(Rational(3, 4), 0, -1, 0));
    CHECK_THROWS_AS(gal2::d2_from_text<Rational>("2*i3"), std::invalid_argument);
    CHECK_THROWS_AS(gal2::d2_from_text<Rational>(""), std::invalid_argument);

    Rng rng(47);
    for (int t = 0; t < 100; ++t) {
        const auto a = gal2::random_d2<Rational>(rng);
        CHECK(gal2::d2_from_text<Rational>(gal2::to_text(a)) == a);
        const auto f = gal2::random_d2<double>(rng);
        CHECK(gal2::d2_from_text<double>(gal2::to_text(f)) == f);
    }
}
