#ifndef DIVPOLY_UNIPOLY_HPP
#define DIVPOLY_UNIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "divpoly/errors.hpp"
#include "divpoly/prime_field.hpp"
#include "divpoly/scalar.hpp"

namespace divpoly {

/// Degree of a polynomial. The zero polynomial has no degree (std::nullopt);
/// every degree formula in the library has to deal with that case explicitly.
using Degree = std::optional<std::size_t>;

template <class C>
class UniPoly;

/// Coefficient-domain interface: neutral elements, zero test and exact division.
/// exact_div(a, b) requires b | a in the domain; over a field that is every b != 0.
template <class C>
struct RingTraits;

template <>
struct RingTraits<BigRat> {
    static constexpr bool is_field = true;
    static BigRat zero() { return BigRat(0); }
    static BigRat one() { return BigRat(1); }
    static bool is_zero(const BigRat& a) { return sgn(a) == 0; }
    static BigRat exact_div(const BigRat& a, const BigRat& b) {
        if (sgn(b) == 0) throw InvalidArgument("division by zero");
        return a / b;
    }
};

template <>
struct RingTraits<BigInt> {
    static constexpr bool is_field = false;
    static BigInt zero() { return BigInt(0); }
    static BigInt one() { return BigInt(1); }
    static bool is_zero(const BigInt& a) { return sgn(a) == 0; }
    static BigInt exact_div(const BigInt& a, const BigInt& b) {
        if (sgn(b) == 0) throw InvalidArgument("division by zero");
        if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
            throw InvalidArgument("exact_div: integer quotient is not exact");
        }
        BigInt q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

template <>
struct RingTraits<Fp> {
    static constexpr bool is_field = true;
    static Fp zero() { return {0, 0}; }
    static Fp one() { return {1, 0}; }
    static bool is_zero(const Fp& a) { return a.is_zero(); }
    static Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
};

/// Dense univariate polynomial; coefficient k multiplies the k-th power of the
/// variable. The highest stored coefficient is always nonzero.
template <class C>
class UniPoly {
public:
    using Coeff = C;
    using Traits = RingTraits<C>;

    UniPoly() = default;
    explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<C> coeffs) : c_(coeffs) { normalize(); }

    static UniPoly constant(C c) { return UniPoly(std::vector<C>{std::move(c)}); }
    static UniPoly monomial(C c, std::size_t k) {
        std::vector<C> v(k + 1, Traits::zero());
        v[k] = std::move(c);
        return UniPoly(std::move(v));
    }
    static UniPoly variable() { return monomial(Traits::one(), 1); }
    static UniPoly one() { return constant(Traits::one()); }

    bool is_zero() const { return c_.empty(); }
    Degree degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    // Number of stored coefficients: degree + 1, or 0 for the zero polynomial.
    std::size_t size() const { return c_.size(); }

    C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Traits::zero(); }
    const C& leading() const {
        if (c_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
        return c_.back();
    }
    std::span<const C> coeffs() const { return c_; }

    UniPoly& operator+=(const UniPoly& b) {
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), Traits::zero());
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
        normalize();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& b) {
        if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), Traits::zero());
        for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
        normalize();
        return *this;
    }
    UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }
    UniPoly& operator*=(const C& s) {
        if (Traits::is_zero(s)) {
            c_.clear();
            return *this;
        }
        for (auto& a : c_) a *= s;
        normalize();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, Traits::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (Traits::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(UniPoly a, const C& s) { return a *= s; }
    friend UniPoly operator*(const C& s, UniPoly a) { return a *= s; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    // Keep only the terms of degree < n.
    UniPoly truncated(std::size_t n) const {
        if (n >= c_.size()) return *this;
        return UniPoly(std::vector<C>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
    }

private:
    void normalize() {
        while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

template <class D>
UniPoly<D> exact_quotient(const UniPoly<D>& a, const UniPoly<D>& b);

template <class D>
struct RingTraits<UniPoly<D>> {
    static constexpr bool is_field = false;
    static UniPoly<D> zero() { return {}; }
    static UniPoly<D> one() { return UniPoly<D>::one(); }
    static bool is_zero(const UniPoly<D>& a) { return a.is_zero(); }
    static UniPoly<D> exact_div(const UniPoly<D>& a, const UniPoly<D>& b) { return exact_quotient(a, b); }
};

/// Polynomials in z whose coefficients are polynomials in x (z is the outer variable).
template <class C>
using BiPoly = UniPoly<UniPoly<C>>;

template <class C>
UniPoly<C> derivative(const UniPoly<C>& p) {
    if (p.size() <= 1) return {};
    std::vector<C> r;
    r.reserve(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) {
        C kc = RingTraits<C>::zero();
        for (std::size_t i = 0; i < k; ++i) kc += RingTraits<C>::one();
        r.push_back(p.coeffs()[k] * kc);
    }
    return UniPoly<C>(std::move(r));
}

inline UniPoly<BigRat> derivative(const UniPoly<BigRat>& p) {
    if (p.size() <= 1) return {};
    std::vector<BigRat> r;
    r.reserve(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) r.push_back(p.coeffs()[k] * BigRat(static_cast<unsigned long>(k)));
    return UniPoly<BigRat>(std::move(r));
}

/// Horner evaluation.
template <class C>
C evaluate(const UniPoly<C>& p, const C& at) {
    C acc = RingTraits<C>::zero();
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc *= at;
        acc += c[k];
    }
    return acc;
}

template <class C>
UniPoly<C> pow(UniPoly<C> base, unsigned long e) {
    UniPoly<C> result = UniPoly<C>::one();
    while (e) {
        if (e & 1UL) result *= base;
        e >>= 1UL;
        if (e) base *= base;
    }
    return result;
}

/// p(q): substitute the polynomial q for the variable of p.
template <class C>
UniPoly<C> compose(const UniPoly<C>& p, const UniPoly<C>& q) {
    UniPoly<C> acc;
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        acc *= q;
        acc += UniPoly<C>::constant(c[k]);
    }
    return acc;
}

/// Euclidean division a = q*b + r with deg r < deg b. Needs the leading
/// coefficient of b to divide every leading coefficient met along the way,
/// which holds over a field or when b is monic.
template <class C>
std::pair<UniPoly<C>, UniPoly<C>> divrem(const UniPoly<C>& a, const UniPoly<C>& b) {
    using T = RingTraits<C>;
    if (b.is_zero()) throw InvalidArgument("divrem: division by the zero polynomial");
    const std::size_t db = *b.degree();
    std::vector<C> r(a.coeffs().begin(), a.coeffs().end());
    if (r.size() <= db) return {UniPoly<C>{}, a};
    std::vector<C> q(r.size() - db, T::zero());
    const C& lb = b.leading();
    const auto bc = b.coeffs();
    for (std::size_t k = r.size(); k-- > db;) {
        if (T::is_zero(r[k])) continue;
        const std::size_t shift = k - db;
        C t = T::exact_div(r[k], lb);
        for (std::size_t i = 0; i < db; ++i) r[shift + i] -= t * bc[i];
        r[k] = T::zero();
        q[shift] = std::move(t);
    }
    r.resize(db);
    return {UniPoly<C>(std::move(q)), UniPoly<C>(std::move(r))};
}

/// Remainder modulo a monic polynomial.
template <class C>
UniPoly<C> poly_mod(const UniPoly<C>& a, const UniPoly<C>& f) {
    if (f.is_zero()) throw InvalidArgument("poly_mod: zero modulus");
    if (!(f.leading() == RingTraits<C>::one())) throw InvalidArgument("poly_mod: modulus must be monic");
    return divrem(a, f).second;
}

/// a / b where b divides a exactly in the coefficient ring; throws otherwise.
template <class D>
UniPoly<D> exact_quotient(const UniPoly<D>& a, const UniPoly<D>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw InvalidArgument("exact_quotient: nonzero remainder");
    return q;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without any division.
template <class C>
UniPoly<C> pseudo_remainder(const UniPoly<C>& a, const UniPoly<C>& b) {
    using T = RingTraits<C>;
    if (b.is_zero()) throw InvalidArgument("pseudo_remainder: zero divisor");
    if (a.is_zero() || *a.degree() < *b.degree()) return a;
    const std::size_t db = *b.degree();
    const C& lb = b.leading();
    const auto bc = b.coeffs();
    std::vector<C> r(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t k = r.size(); k-- > db;) {
        C t = r[k];
        for (auto& c : r) c *= lb;
        if (!T::is_zero(t)) {
            const std::size_t shift = k - db;
            for (std::size_t i = 0; i < db; ++i) r[shift + i] -= t * bc[i];
        }
        r[k] = T::zero();
        r.pop_back();
    }
    return UniPoly<C>(std::move(r));
}

template <class C, class F>
auto map_coeffs(const UniPoly<C>& p, F&& fn) {
    using R = std::decay_t<decltype(fn(std::declval<const C&>()))>;
    std::vector<R> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(fn(c));
    return UniPoly<R>(std::move(out));
}

/// Embed a polynomial in x as a z-constant bivariate polynomial.
template <class C>
BiPoly<C> lift_constant(const UniPoly<C>& p) {
    return BiPoly<C>::constant(p);
}

/// Value of a bivariate polynomial at z = 0.
template <class C>
UniPoly<C> at_z_zero(const BiPoly<C>& p) {
    return p.coeff(0);
}

} // namespace divpoly

#endif // DIVPOLY_UNIPOLY_HPP
