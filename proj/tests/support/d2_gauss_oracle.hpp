#pragma once

#include <cstddef>
#include <utility>

#include "gal2/matrix.hpp"

// Test-only inversion oracle: Gauss-Jordan elimination over the algebra,
// pivoting only on entries with invertible scalar part (the algebra has zero
// divisors, so other pivots cannot be divided by). Independent of the
// closed-form inverse it is used to cross-check.
namespace gal2::testsupport {

template <gal2::Scalar S>
gal2::MatD2<S> gauss_inverse(gal2::MatD2<S> m) {
    const std::size_t n = m.dim();
    gal2::MatD2<S> inv = gal2::MatD2<S>::identity(n);
    const auto swap_rows = [&](gal2::MatD2<S>& mat, std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c) std::swap(mat(i, c), mat(j, c));
    };
    for (std::size_t k = 0; k < n; ++k) {
        // Any invertible pivot works in exact mode; float mode takes the
        // largest scalar part for conditioning.
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!gal2::is_invertible(m(i, k))) continue;
            if constexpr (gal2::scalar_traits<S>::is_exact) {
                p = i;
                break;
            } else {
                if (p == n ||
                    gal2::scalar_traits<S>::abs(m(p, k).a0) < gal2::scalar_traits<S>::abs(m(i, k).a0)) {
                    p = i;
                }
            }
        }
        if (p == n) throw gal2::NonInvertibleError("oracle: no invertible pivot");
        if (p != k) {
            swap_rows(m, p, k);
            swap_rows(inv, p, k);
        }
        const gal2::D2<S> pivot_inv = gal2::inverse(m(k, k));
        for (std::size_t c = 0; c < n; ++c) {
            m(k, c) = pivot_inv * m(k, c);
            inv(k, c) = pivot_inv * inv(k, c);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const gal2::D2<S> f = m(i, k);
            for (std::size_t c = 0; c < n; ++c) {
                m(i, c) = m(i, c) - f * m(k, c);
                inv(i, c) = inv(i, c) - f * inv(k, c);
            }
        }
    }
    return inv;
}

}  // namespace gal2::testsupport
