#ifndef DIVPOLY_MATRIX_HPP
#define DIVPOLY_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "divpoly/errors.hpp"
#include "divpoly/unipoly.hpp"

namespace divpoly {

/// Row-major dense square matrix over an exact ring.
template <class C>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, RingTraits<C>::zero()) {}

    std::size_t dim() const { return dim_; }
    C& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const C& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < dim_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<C> data_;
};

/// Hankel matrix H(i, j) = entry(i + j) for 0 <= i, j < dim.
template <class C, class Entry>
SquareMatrix<C> hankel(std::size_t dim, Entry&& entry) {
    SquareMatrix<C> m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = entry(i + j);
    }
    return m;
}

/// Fraction-free (Bareiss) determinant. Every intermediate stays in the ring:
/// the division by the previous pivot is exact by Sylvester's identity.
/// Dimension 0 gives 1.
template <class C>
C determinant_bareiss(SquareMatrix<C> m) {
    using T = RingTraits<C>;
    const std::size_t n = m.dim();
    if (n == 0) return T::one();
    bool negate = false;
    C prev = T::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (T::is_zero(m(k, k))) {
            std::size_t r = k + 1;
            while (r < n && T::is_zero(m(r, k))) ++r;
            if (r == n) return T::zero();
            m.swap_rows(k, r);
            negate = !negate;
        }
        const C pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                C t = pivot * m(i, j);
                t -= m(i, k) * m(k, j);
                m(i, j) = T::exact_div(t, prev);
            }
            m(i, k) = T::zero();
        }
        prev = pivot;
    }
    C det = m(n - 1, n - 1);
    if (negate) det = -det;
    return det;
}

} // namespace divpoly

#endif // DIVPOLY_MATRIX_HPP
