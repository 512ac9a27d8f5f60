#pragma once

#include <array>
#include <cstddef>

#include "gal2/errors.hpp"
#include "gal2/grassmann.hpp"
#include "gal2/point.hpp"
#include "gal2/scalar.hpp"

namespace gal2 {

namespace cl3_detail {

// Generator relations, chosen to match the 2x2 matrix model over the
// Pimenov algebra (e1 -> i2*diag(1,-1), e2 -> i1*offdiag(1,-1),
// e3 -> diag(-1,1)):
//
//   e1^2 = e2^2 = 0,  e3^2 = 1,
//   e1*e2 = -e2*e1,   e2*e3 = -e3*e2,   e1*e3 = e3*e1.
//
// e1 and e3 commute because their matrix images are both diagonal.
constexpr int kSquareSign[3] = {0, 0, 1};

constexpr int swap_sign(int g, int h) {
    // Sign picked up when generator g moves past a distinct generator h.
    return (g + h == 2) ? 1 : -1;  // the (e1, e3) pair commutes
}

struct Term {
    int sign;   // -1, 0, +1
    int index;  // basis index of the product
};

constexpr int kMaskOfIndex[8] = {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
constexpr int kIndexOfMask[8] = {0, 1, 2, 4, 3, 5, 6, 7};

constexpr Term basis_product(int ia, int ib) {
    int gens[6] = {};
    int count = 0;
    for (int g = 0; g < 3; ++g) {
        if (kMaskOfIndex[ia] & (1 << g)) gens[count++] = g;
    }
    for (int g = 0; g < 3; ++g) {
        if (kMaskOfIndex[ib] & (1 << g)) gens[count++] = g;
    }
    int sign = 1;
    // Bubble sort into canonical ascending order, tracking pair signs.
    for (int pass = 0; pass + 1 < count; ++pass) {
        for (int i = 0; i + 1 < count; ++i) {
            if (gens[i] > gens[i + 1]) {
                sign *= swap_sign(gens[i], gens[i + 1]);
                const int t = gens[i];
                gens[i] = gens[i + 1];
                gens[i + 1] = t;
            }
        }
    }
    // Contract repeated generators.
    int mask = 0;
    for (int i = 0; i < count;) {
        if (i + 1 < count && gens[i] == gens[i + 1]) {
            if (kSquareSign[gens[i]] == 0) return {0, 0};
            sign *= kSquareSign[gens[i]];
            i += 2;
        } else {
            mask |= 1 << gens[i];
            i += 1;
        }
    }
    return {sign, kIndexOfMask[mask]};
}

constexpr std::array<std::array<Term, 8>, 8> make_table() {
    std::array<std::array<Term, 8>, 8> t{};
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) t[i][j] = basis_product(i, j);
    }
    return t;
}

inline constexpr auto kTable = make_table();

}  // namespace cl3_detail

// Eight-dimensional algebra on generators e1, e2, e3 with the relations
// listed in cl3_detail. Basis order: 1, e1, e2, e3, e1e2, e1e3, e2e3,
// e1e2e3.
template <Scalar S>
struct Cl3Element {
    std::array<S, 8> c{};

    static constexpr std::size_t kOne = 0;
    static constexpr std::size_t kE1 = 1;
    static constexpr std::size_t kE2 = 2;
    static constexpr std::size_t kE3 = 3;
    static constexpr std::size_t kE12 = 4;
    static constexpr std::size_t kE13 = 5;
    static constexpr std::size_t kE23 = 6;
    static constexpr std::size_t kE123 = 7;

    static Cl3Element basis(std::size_t index) {
        Cl3Element e;
        e.c[index] = scalar_traits<S>::from_int(1);
        return e;
    }

    static Cl3Element one() { return basis(kOne); }

    friend Cl3Element operator+(const Cl3Element& p, const Cl3Element& q) {
        Cl3Element r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = p.c[i] + q.c[i];
        return r;
    }

    friend Cl3Element operator-(const Cl3Element& p, const Cl3Element& q) {
        Cl3Element r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = p.c[i] - q.c[i];
        return r;
    }

    Cl3Element operator-() const {
        Cl3Element r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = -c[i];
        return r;
    }

    friend Cl3Element operator*(const Cl3Element& p, const Cl3Element& q) {
        Cl3Element r;
        for (std::size_t i = 0; i < 8; ++i) {
            if (scalar_traits<S>::is_zero(p.c[i])) continue;
            for (std::size_t j = 0; j < 8; ++j) {
                const auto term = cl3_detail::kTable[i][j];
                if (term.sign == 0) continue;
                const S prod = p.c[i] * q.c[j];
                r.c[term.index] = term.sign > 0 ? r.c[term.index] + prod : r.c[term.index] - prod;
            }
        }
        return r;
    }

    friend Cl3Element operator*(const S& s, const Cl3Element& q) {
        Cl3Element r;
        for (std::size_t i = 0; i < 8; ++i) r.c[i] = s * q.c[i];
        return r;
    }

    friend bool operator==(const Cl3Element& p, const Cl3Element& q) { return p.c == q.c; }
    friend bool operator!=(const Cl3Element& p, const Cl3Element& q) { return !(p == q); }
};

template <Scalar S>
bool approx_equal(const Cl3Element<S>& p, const Cl3Element<S>& q, double tol) {
    for (std::size_t i = 0; i < 8; ++i) {
        if (!scalar_traits<S>::approx_equal(p.c[i], q.c[i], tol)) return false;
    }
    return true;
}

// The exterior algebra on e1, e2 sits inside Cl3 as the span of
// {1, e1, e2, e1e2}.
template <Scalar S>
Cl3Element<S> embed_grassmann(const GrassmannElement<S>& q) {
    Cl3Element<S> r;
    r.c[Cl3Element<S>::kOne] = q.a0;
    r.c[Cl3Element<S>::kE1] = q.a1;
    r.c[Cl3Element<S>::kE2] = q.a2;
    r.c[Cl3Element<S>::kE12] = q.a3;
    return r;
}

// Point element (1 + y*e2 + z*e1e2) * e3 = e3 + y*e2e3 + z*e1e2e3.
template <Scalar S>
Cl3Element<S> point_to_cl3(const SpherePoint<S>& p) {
    Cl3Element<S> r;
    r.c[Cl3Element<S>::kE3] = scalar_traits<S>::from_int(1);
    r.c[Cl3Element<S>::kE23] = p.y;
    r.c[Cl3Element<S>::kE123] = p.z;
    return r;
}

template <Scalar S>
bool is_point_element(const Cl3Element<S>& v, double tol = kPredicateTol) {
    using T = scalar_traits<S>;
    const S one = T::from_int(1);
    for (std::size_t i = 0; i < 8; ++i) {
        if (i == Cl3Element<S>::kE3) {
            if (!T::approx_equal(v.c[i], one, tol)) return false;
        } else if (i != Cl3Element<S>::kE23 && i != Cl3Element<S>::kE123) {
            if (!T::approx_equal(v.c[i], S{}, tol)) return false;
        }
    }
    return true;
}

template <Scalar S>
SpherePoint<S> cl3_to_point(const Cl3Element<S>& v, double tol = kPredicateTol) {
    if (!is_point_element(v, tol)) {
        throw NotAPointElementError("element is not of the form e3 + y*e2e3 + z*e1e2e3");
    }
    return {v.c[Cl3Element<S>::kE23], v.c[Cl3Element<S>::kE123]};
}

// Sandwich action q * v * conj(q) of a unit-scalar-part Grassmann element on
// a point element; carries the point (y, z) to (y + a, z + theta*y + b) for
// the motion corresponding to q.
template <Scalar S>
Cl3Element<S> clifford_act(const GrassmannElement<S>& q, const Cl3Element<S>& v,
                           double tol = kPredicateTol) {
    if (!has_unit_scalar_part(q, tol)) {
        throw NotInLambda1Error("sandwich requires unit scalar part");
    }
    if (!is_point_element(v, tol)) {
        throw NotAPointElementError("sandwich requires a point element");
    }
    return embed_grassmann(q) * v * embed_grassmann(conj(q));
}

}  // namespace gal2
