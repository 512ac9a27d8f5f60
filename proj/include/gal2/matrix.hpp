#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "gal2/errors.hpp"
#include "gal2/pimenov.hpp"
#include "gal2/scalar.hpp"

namespace gal2 {

// Dense square matrix over the coefficient field. Used for the four real
// coefficient blocks of a matrix over the Pimenov algebra.
template <Scalar S>
class ScalarMatrix {
  public:
    ScalarMatrix() : n_(0) {}
    explicit ScalarMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static ScalarMatrix identity(std::size_t n) {
        ScalarMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::from_int(1);
        return m;
    }

    std::size_t dim() const { return n_; }

    S& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
        check_same_dim(a, b);
        ScalarMatrix r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
        check_same_dim(a, b);
        ScalarMatrix r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }

    ScalarMatrix operator-() const {
        ScalarMatrix r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
        return r;
    }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        check_same_dim(a, b);
        ScalarMatrix r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            for (std::size_t k = 0; k < a.n_; ++k) {
                const S& aik = a(i, k);
                if (scalar_traits<S>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    // Gaussian elimination with pivoting; exact over rationals, partial
    // pivoting on magnitude over doubles.
    S det() const {
        ScalarMatrix m(*this);
        S det = scalar_traits<S>::from_int(1);
        for (std::size_t k = 0; k < n_; ++k) {
            const std::size_t p = m.select_pivot(k);
            if (p == n_) return S{};
            if (p != k) {
                m.swap_rows(p, k);
                det = -det;
            }
            det = det * m(k, k);
            const S inv = scalar_traits<S>::from_int(1) / m(k, k);
            for (std::size_t i = k + 1; i < n_; ++i) {
                const S f = m(i, k) * inv;
                if (scalar_traits<S>::is_zero(f)) continue;
                for (std::size_t j = k; j < n_; ++j) m(i, j) = m(i, j) - f * m(k, j);
            }
        }
        return det;
    }

    // Gauss-Jordan. Throws NonInvertibleError on a singular matrix.
    ScalarMatrix inverse() const {
        ScalarMatrix m(*this);
        ScalarMatrix inv = identity(n_);
        for (std::size_t k = 0; k < n_; ++k) {
            const std::size_t p = m.select_pivot(k);
            if (p == n_) throw NonInvertibleError("singular real part");
            if (p != k) {
                m.swap_rows(p, k);
                inv.swap_rows(p, k);
            }
            const S pivot_inv = scalar_traits<S>::from_int(1) / m(k, k);
            for (std::size_t j = 0; j < n_; ++j) {
                m(k, j) = m(k, j) * pivot_inv;
                inv(k, j) = inv(k, j) * pivot_inv;
            }
            for (std::size_t i = 0; i < n_; ++i) {
                if (i == k) continue;
                const S f = m(i, k);
                if (scalar_traits<S>::is_zero(f)) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    m(i, j) = m(i, j) - f * m(k, j);
                    inv(i, j) = inv(i, j) - f * inv(k, j);
                }
            }
        }
        return inv;
    }

  private:
    static void check_same_dim(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.n_ != b.n_) throw DimensionMismatchError("scalar matrix dimensions differ");
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    // Returns the row index >= k to pivot on, or n_ if the column is dead.
    std::size_t select_pivot(std::size_t k) const {
        if constexpr (scalar_traits<S>::is_exact) {
            for (std::size_t i = k; i < n_; ++i) {
                if (!scalar_traits<S>::is_zero((*this)(i, k))) return i;
            }
            return n_;
        } else {
            std::size_t best = n_;
            S best_mag{};
            for (std::size_t i = k; i < n_; ++i) {
                const S mag = scalar_traits<S>::abs((*this)(i, k));
                if (best == n_ || best_mag < mag) {
                    best = i;
                    best_mag = mag;
                }
            }
            if (best != n_ && !scalar_traits<S>::is_invertible(best_mag)) return n_;
            return best;
        }
    }

    std::size_t n_;
    std::vector<S> e_;
};

template <Scalar S>
bool approx_equal(const ScalarMatrix<S>& a, const ScalarMatrix<S>& b, double tol) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (!scalar_traits<S>::approx_equal(a(i, j), b(i, j), tol)) return false;
        }
    }
    return true;
}

// Square matrix over the Pimenov algebra. Decomposes uniquely as
// A = A0 + i1*A1 + i2*A2 + i1i2*A3 with real coefficient blocks; the matrix
// is invertible exactly when A0 is.
template <Scalar S>
class MatD2 {
  public:
    MatD2() : n_(0) {}
    explicit MatD2(std::size_t n) : n_(n), e_(n * n) {}

    static MatD2 identity(std::size_t n) {
        MatD2 m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = D2<S>::one();
        return m;
    }

    static MatD2 from_parts(const ScalarMatrix<S>& p0, const ScalarMatrix<S>& p1,
                            const ScalarMatrix<S>& p2, const ScalarMatrix<S>& p3) {
        const std::size_t n = p0.dim();
        if (p1.dim() != n || p2.dim() != n || p3.dim() != n) {
            throw DimensionMismatchError("coefficient blocks have different dimensions");
        }
        MatD2 m(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = D2<S>(p0(i, j), p1(i, j), p2(i, j), p3(i, j));
            }
        }
        return m;
    }

    std::size_t dim() const { return n_; }

    D2<S>& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const D2<S>& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    // Exact coefficient extraction; from_parts(decompose(A)) == A bit for bit.
    std::array<ScalarMatrix<S>, 4> decompose() const {
        std::array<ScalarMatrix<S>, 4> parts{ScalarMatrix<S>(n_), ScalarMatrix<S>(n_),
                                             ScalarMatrix<S>(n_), ScalarMatrix<S>(n_)};
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                const D2<S>& e = (*this)(i, j);
                parts[0](i, j) = e.a0;
                parts[1](i, j) = e.a1;
                parts[2](i, j) = e.a2;
                parts[3](i, j) = e.a3;
            }
        }
        return parts;
    }

    ScalarMatrix<S> real_part() const {
        ScalarMatrix<S> r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) r(i, j) = (*this)(i, j).a0;
        }
        return r;
    }

    MatD2 transpose() const {
        MatD2 r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        }
        return r;
    }

    MatD2 iota2_conj() const {
        MatD2 r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) r(i, j) = gal2::iota2_conj((*this)(i, j));
        }
        return r;
    }

    friend MatD2 operator+(const MatD2& a, const MatD2& b) {
        check_same_dim(a, b);
        MatD2 r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }

    friend MatD2 operator-(const MatD2& a, const MatD2& b) {
        check_same_dim(a, b);
        MatD2 r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }

    MatD2 operator-() const {
        MatD2 r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
        return r;
    }

    friend MatD2 operator*(const MatD2& a, const MatD2& b) {
        check_same_dim(a, b);
        MatD2 r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            for (std::size_t k = 0; k < a.n_; ++k) {
                const D2<S>& aik = a(i, k);
                for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
            }
        }
        return r;
    }

    friend MatD2 operator*(const D2<S>& s, const MatD2& a) {
        MatD2 r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = s * a.e_[i];
        return r;
    }

    friend bool operator==(const MatD2& a, const MatD2& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

  private:
    static void check_same_dim(const MatD2& a, const MatD2& b) {
        if (a.n_ != b.n_) throw DimensionMismatchError("matrix dimensions differ");
    }

    std::size_t n_;
    std::vector<D2<S>> e_;
};

template <Scalar S>
bool approx_equal(const MatD2<S>& a, const MatD2<S>& b, double tol) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (!approx_equal(a(i, j), b(i, j), tol)) return false;
        }
    }
    return true;
}

// Dual conjugation: entrywise i2-conjugation followed by transpose.
// Anti-automorphism: star(A*B) = star(B)*star(A).
template <Scalar S>
MatD2<S> star(const MatD2<S>& a) {
    return a.iota2_conj().transpose();
}

namespace detail {

// Laplace expansion along the first column. Always valid over a commutative
// ring; cost grows factorially, so it is reserved for small or degenerate
// matrices.
template <Scalar S>
D2<S> laplace_det(const MatD2<S>& a) {
    const std::size_t n = a.dim();
    if (n == 0) return D2<S>::one();
    if (n == 1) return a(0, 0);
    if (n == 2) return a(0, 0) * a(1, 1) - a(1, 0) * a(0, 1);
    D2<S> acc;
    for (std::size_t i = 0; i < n; ++i) {
        MatD2<S> minor(n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 1; c < n; ++c) minor(mr, c - 1) = a(r, c);
            ++mr;
        }
        const D2<S> term = a(i, 0) * laplace_det(minor);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Fraction-free elimination. The algebra has zero divisors, so division is
// only performed by pivots with invertible scalar part; when no such pivot
// exists the caller falls back to Laplace expansion.
template <Scalar S>
bool bareiss_det(const MatD2<S>& a, D2<S>& out) {
    const std::size_t n = a.dim();
    MatD2<S> m(a);
    D2<S> prev = D2<S>::one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i) {
            if (is_invertible(m(i, k))) {
                p = i;
                break;
            }
        }
        if (p == n) return false;
        if (p != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(k, c));
            sign = -sign;
        }
        const D2<S> prev_inv = inverse(prev);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) * prev_inv;
            }
            m(i, k) = D2<S>();
        }
        prev = m(k, k);
    }
    out = sign >= 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
    return true;
}

}  // namespace detail

template <Scalar S>
D2<S> det(const MatD2<S>& a) {
    if (a.dim() <= 4) return detail::laplace_det(a);
    D2<S> out;
    if (detail::bareiss_det(a, out)) return out;
    return detail::laplace_det(a);
}

// Closed-form inverse through the real part:
//   A^-1 = B - i1*B*A1*B - i2*B*A2*B + i1i2*(B*A1*B*A2*B + B*A2*B*A1*B - B*A3*B)
// with B = A0^-1. Throws NonInvertibleError when A0 is singular.
template <Scalar S>
MatD2<S> inverse(const MatD2<S>& a) {
    const auto parts = a.decompose();
    const ScalarMatrix<S>& p1 = parts[1];
    const ScalarMatrix<S>& p2 = parts[2];
    const ScalarMatrix<S>& p3 = parts[3];
    const ScalarMatrix<S> b = parts[0].inverse();
    const ScalarMatrix<S> b1 = b * p1 * b;
    const ScalarMatrix<S> b2 = b * p2 * b;
    const ScalarMatrix<S> b3 = b1 * p2 * b + b2 * p1 * b - b * p3 * b;
    return MatD2<S>::from_parts(b, -b1, -b2, b3);
}

template <Scalar S>
bool is_nondegenerate(const MatD2<S>& a) {
    return is_invertible(det(a));
}

// Membership in the unitary-style group over the algebra:
// star(A) = A^-1 and det(A) = 1.
template <Scalar S>
bool is_special_unitary(const MatD2<S>& a, double tol = kPredicateTol) {
    MatD2<S> inv;
    try {
        inv = inverse(a);
    } catch (const NonInvertibleError&) {
        return false;
    }
    return approx_equal(star(a), inv, tol) &&
           approx_equal(det(a), D2<S>::one(), tol);
}

// A^T A = A A^T = I and det(A) = 1, all over the algebra (plain transpose,
// no conjugation).
template <Scalar S>
bool is_orthogonal_unimodular(const MatD2<S>& a, double tol = kPredicateTol) {
    const MatD2<S> at = a.transpose();
    const MatD2<S> id = MatD2<S>::identity(a.dim());
    return approx_equal(at * a, id, tol) && approx_equal(a * at, id, tol) &&
           approx_equal(det(a), D2<S>::one(), tol);
}

template <Scalar S>
MatD2<S> commutator(const MatD2<S>& x, const MatD2<S>& y) {
    return x * y - y * x;
}

}  // namespace gal2
