#ifndef DIVPOLY_DIVISION_POLY_HPP
#define DIVPOLY_DIVISION_POLY_HPP

#include <span>
#include <string>
#include <vector>

#include "divpoly/matrix.hpp"
#include "divpoly/series.hpp"

namespace divpoly {

/// n = g (mod 2) or n = g + 1 (mod 2); selects which Hankel matrix defines psi_n.
enum class Parity { same_as_genus, opposite_to_genus };

/// Relation between psi_n mod f and c(n) f'^d(n) mod f.
enum class Sign { plus, minus, unknown };

std::string_view to_string(Parity p);
std::string_view to_string(Sign s);

enum class DetMethod { bareiss, interpolation };

/// Cantor's n-th division polynomial together with the scalar data attached to it.
struct PsiResult {
    CurveSpec curve;
    long n;
    Parity parity;
    QPoly psi;
    BigRat b_n;  // leading coefficient
    long dim;    // Hankel dimension
    long d_n;
    BigInt c_n;
    Sign sign = Sign::unknown;  // filled in by root_identity
};

Parity parity_of(int g, long n);

/// g(n^2 - g^2)/2 or g(n^2 - (g+1)^2)/2.
long psi_degree(int g, long n);

/// P-index in the top-left corner of the Hankel matrix: g + 1 or g + 2.
long hankel_first_index(int g, long n);

/// The Hankel matrix (P_{first + i + j}); needs table.max_j() >= n - 1.
SquareMatrix<QPoly> psi_hankel_matrix(const PjTable& table, long n);

/// Determinant of a matrix over Q[x] by Bareiss elimination over Z[x]
/// after clearing one common denominator.
QPoly determinant_fraction_free(const SquareMatrix<QPoly>& m);

/// Same determinant by evaluating at deg + 1 integer points, taking integer
/// determinants, and interpolating. deg is bounded by the sum over rows of
/// the largest entry degree.
QPoly determinant_interpolation(const SquareMatrix<QPoly>& m);

/// psi_n from a P_j table (max_j >= n - 1). n = g and n = g + 1 give 1.
PsiResult hankel_psi(const PjTable& table, long n, DetMethod det = DetMethod::bareiss);
/// Convenience overload pulling the table from the shared PjCache.
PsiResult hankel_psi(const CurveSpec& curve, long n, PjMethod pj = PjMethod::closed_form,
                     DetMethod det = DetMethod::bareiss);

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;
    bool ok() const;
};

/// Degree formula, integrality of b(n), and p does not divide b(n) for every
/// listed prime p with p not dividing (n-g+1)...(n+g-1).
ValidationReport validate_psi(const PsiResult& res, std::span<const unsigned long> primes);

/// Coefficient-wise reduction of psi_n to F_p. Needs p prime, p >= 2g + 1,
/// and p-integral coefficients in psi_n and f.
UniPoly<Fp> psi_mod_p(const PsiResult& res, unsigned long p);

/// Reduction of a p-integral rational.
Fp reduce_mod_p(const BigRat& q, unsigned long p);

/// Default cap on n per genus: 30, 20, 14 for g = 1, 2, 3, then 10.
long default_n_cap(int g);

/// Primes below the bound, ascending.
std::vector<unsigned long> primes_below(unsigned long bound);

} // namespace divpoly

#endif // DIVPOLY_DIVISION_POLY_HPP
