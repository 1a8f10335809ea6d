#ifndef DIVPOLY_SCALAR_HPP
#define DIVPOLY_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace divpoly {

using BigInt = mpz_class;
using BigRat = mpq_class;  // always canonical: lowest terms, positive denominator

BigRat make_rat(const BigInt& num, const BigInt& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
BigRat parse_rat(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const BigRat& q);
std::string to_string(const BigInt& z);

bool is_integer(const BigRat& q);

// Exponent of p in z; z must be nonzero.
long valuation(const BigInt& z, unsigned long p);
// v_p(num) - v_p(den); q must be nonzero.
long valuation(const BigRat& q, unsigned long p);

// Deterministic trial-division primality test for word-sized input.
bool is_prime(std::uint64_t n);

BigInt binomial(unsigned long n, unsigned long k);
BigRat pow(const BigRat& q, unsigned long e);
BigInt pow(const BigInt& z, unsigned long e);

} // namespace divpoly

#endif // DIVPOLY_SCALAR_HPP
