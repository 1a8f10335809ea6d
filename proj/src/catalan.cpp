#include "divpoly/catalan.hpp"

#include <string>

#include "divpoly/errors.hpp"

namespace divpoly {

namespace {

void require_n(int g, long n) {
    if (g < 1) throw InvalidArgument("genus must be at least 1");
    if (n < g) throw InvalidArgument("n = " + std::to_string(n) + " is below the genus " + std::to_string(g));
}

} // namespace

BigInt CatalanCache::get(std::size_t m) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= m) {
        const auto k = static_cast<unsigned long>(values_.size());
        values_.push_back(BigInt(binomial(2 * k + 1, k) / (2 * k + 1)));
    }
    return values_[m];
}

CatalanCache& CatalanCache::global() {
    static CatalanCache cache;
    return cache;
}

BigInt catalan(long m) {
    if (m < 0) throw InvalidArgument("catalan: negative index " + std::to_string(m));
    return CatalanCache::global().get(static_cast<std::size_t>(m));
}

BigInt catalan_hankel_det(long l, long m) {
    if (l < 0 || m < 0) throw InvalidArgument("catalan_hankel_det: negative argument");
    return determinant_bareiss(
        hankel<BigInt>(static_cast<std::size_t>(m), [&](std::size_t k) { return catalan(l + static_cast<long>(k)); }));
}

BigRat dcv_product(long l, long m) {
    if (l < 1 || m < 1) throw InvalidArgument("dcv_product: l and m must be at least 1");
    BigRat prod = 1;
    for (long i = 1; i <= l - 1; ++i) {
        for (long j = i; j <= l - 1; ++j) prod *= make_rat(BigInt(i + j + 2 * m), BigInt(i + j));
    }
    prod.canonicalize();
    if (!is_integer(prod) || sgn(prod) <= 0) throw InternalError("dcv_product is not a positive integer");
    return prod;
}

long d_of_n(int g, long n) {
    require_n(g, n);
    const long base = (n - g) % 2 == 0 ? g : g + 1;
    return (n * n - base * base) / 4;
}

long hankel_dim(int g, long n) {
    require_n(g, n);
    return (n - g) % 2 == 0 ? (n - g) / 2 : (n - g - 1) / 2;
}

long catalan_offset(int g, long n) {
    require_n(g, n);
    return (n - g) % 2 == 0 ? g : g + 1;
}

BigInt c_of_n(int g, long n) {
    const BigInt det = catalan_hankel_det(catalan_offset(g, n), hankel_dim(g, n));
    // Hankel determinants of shifted Catalan numbers are positive; orientation
    // only matters if this ever fails.
    if (sgn(det) <= 0) throw InternalError("c(n) is not positive");
    return det;
}

bool admissible(int g, long n, unsigned long p) {
    require_n(g, n);
    if (p == 0) return true;
    const auto lp = static_cast<long>(p);
    for (long k = n - g + 1; k <= n + g - 1; ++k) {
        if (k % lp == 0) return false;
    }
    return true;
}

} // namespace divpoly
