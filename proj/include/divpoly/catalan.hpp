#ifndef DIVPOLY_CATALAN_HPP
#define DIVPOLY_CATALAN_HPP

#include <cstddef>
#include <mutex>
#include <vector>

#include "divpoly/matrix.hpp"
#include "divpoly/scalar.hpp"

namespace divpoly {

/// Catalan numbers c_m = binomial(2m+1, m) / (2m+1), grown on demand.
/// Entries are written once; concurrent readers are serialized by a mutex.
class CatalanCache {
public:
    BigInt get(std::size_t m);

    static CatalanCache& global();

private:
    std::mutex mutex_;
    std::vector<BigInt> values_;
};

// Throws InvalidArgument for m < 0.
BigInt catalan(long m);

/// det (c_{l+i+j})_{0 <= i,j < m}, by Bareiss over Z. m = 0 gives 1.
BigInt catalan_hankel_det(long l, long m);

/// prod_{1 <= i <= j <= l-1} (i + j + 2m) / (i + j). Requires l, m >= 1.
/// The value is always a positive integer; an InternalError says otherwise.
BigRat dcv_product(long l, long m);

/// Exponent of f'(alpha) in psi_n(alpha): (n^2 - g^2)/4 or (n^2 - (g+1)^2)/4.
long d_of_n(int g, long n);

/// Hankel dimension of psi_n and of c(n): (n - g)/2 or (n - g - 1)/2.
long hankel_dim(int g, long n);

/// Index of the first Catalan number in the c(n) matrix: g if n = g mod 2, else g + 1.
long catalan_offset(int g, long n);

/// Scalar Hankel determinant c(n) of Catalan numbers; positive.
BigInt c_of_n(int g, long n);

/// True iff p = 0 or p divides none of n-g+1, ..., n+g-1.
bool admissible(int g, long n, unsigned long p);

} // namespace divpoly

#endif // DIVPOLY_CATALAN_HPP
