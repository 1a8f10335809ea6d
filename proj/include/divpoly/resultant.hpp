#ifndef DIVPOLY_RESULTANT_HPP
#define DIVPOLY_RESULTANT_HPP

#include <utility>

#include "divpoly/errors.hpp"
#include "divpoly/unipoly.hpp"

namespace divpoly {

namespace detail {

template <class C>
C ring_pow(C base, std::size_t e) {
    C r = RingTraits<C>::one();
    while (e) {
        if (e & 1U) r *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return r;
}

} // namespace detail

/// Res(a, b) by the subresultant polynomial remainder sequence.
///
/// Works over any integral domain with exact division; no content removal is
/// done, so every division below is exact by the subresultant theorem.
/// Res(a, b) = lc(a)^deg b * prod b(alpha) over the roots alpha of a.
template <class C>
C resultant(UniPoly<C> a, UniPoly<C> b) {
    using T = RingTraits<C>;
    if (a.is_zero() || b.is_zero()) throw InvalidArgument("resultant: zero polynomial");

    C sign = T::one();
    if (*a.degree() < *b.degree()) {
        if ((*a.degree() & 1U) && (*b.degree() & 1U)) sign = -sign;
        std::swap(a, b);
    }
    if (*b.degree() == 0) return sign * detail::ring_pow(b.leading(), *a.degree());

    C g = T::one();
    C h = T::one();
    for (;;) {
        const std::size_t da = *a.degree();
        const std::size_t db = *b.degree();
        const std::size_t delta = da - db;
        if ((da & 1U) && (db & 1U)) sign = -sign;

        UniPoly<C> r = pseudo_remainder(a, b);
        if (r.is_zero()) return T::zero();  // common factor

        // r / (g * h^delta)
        const C divisor = g * detail::ring_pow(h, delta);
        r = map_coeffs(r, [&](const C& c) { return T::exact_div(c, divisor); });
        a = std::move(b);
        b = std::move(r);
        g = a.leading();
        // h <- g^delta / h^(delta - 1)
        if (delta > 0) h = T::exact_div(detail::ring_pow(g, delta), detail::ring_pow(h, delta - 1));
        if (*b.degree() == 0) {
            const std::size_t d = *a.degree();
            // h <- lc(b)^d / h^(d - 1)
            const C last = d == 0 ? T::one()
                                  : T::exact_div(detail::ring_pow(b.leading(), d), detail::ring_pow(h, d - 1));
            return sign * last;
        }
    }
}

/// Discriminant of a monic polynomial of degree d >= 2:
/// (-1)^(d(d-1)/2) * Res(f, f').
template <class C>
C discriminant(const UniPoly<C>& f) {
    if (f.is_zero() || *f.degree() < 2) throw InvalidArgument("discriminant: degree must be at least 2");
    if (!(f.leading() == RingTraits<C>::one())) throw InvalidArgument("discriminant: polynomial must be monic");
    const std::size_t d = *f.degree();
    C r = resultant(f, derivative(f));
    if ((d * (d - 1) / 2) & 1U) r = -r;
    return r;
}

} // namespace divpoly

#endif // DIVPOLY_RESULTANT_HPP
