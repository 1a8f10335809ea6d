#ifndef DIVPOLY_THEOREM_HPP
#define DIVPOLY_THEOREM_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "divpoly/division_poly.hpp"
#include "divpoly/place.hpp"

namespace divpoly {

// ---------------------------------------------------------------------------
// Exact identities at the roots of f

struct RootIdentity {
    bool pass;
    Sign sign;  // psi_n = sign * c(n) f'^d(n) mod f
    QPoly psi_mod_f;
    QPoly expected_mod_f;  // c(n) f'^d(n) mod f
};

/// Compares psi_n mod f with c(n) f'^d(n) mod f. Both have degree < 2g + 1,
/// so equality mod f is equality of values at every root of f.
RootIdentity root_identity(const PsiResult& res);

/// |Res(f, psi_n)| == |c(n)^(2g+1) * disc(f)^d(n)|, exactly.
bool resultant_identity(const PsiResult& res);

// ---------------------------------------------------------------------------
// Convergence of (1/n^2) log |.| at a place

struct ConvergenceRow {
    long n;
    double value;   // (1/n^2) log |quantity|_v
    double target;  // (1/2) log |disc|_v or (1/2) log |f'(alpha)|_v
    double bound;   // a-priori bound on |value - target|
    // p-adic only: n^2 * value / ln p, an exact integer.
    std::optional<long> log_units;

    double error() const { return std::fabs(value - target); }
};

struct ConvergenceTable {
    Place place;
    std::vector<ConvergenceRow> rows;  // sorted by n
    std::vector<long> skipped;         // n with p | (n-g+1)...(n+g-1)
};

/// value = (1/n^2) log |Res(f, psi_n^2)|_v with the resultant taken directly
/// by subresultant PRS; target = (1/2) log |disc|_v;
/// bound = |1/2 - 2d(n)/n^2| |log disc| + 2(2g+1)/n^2 |log c(n)|.
ConvergenceTable converge_resultant(const CurveSpec& curve, const Place& place, const std::vector<long>& ns,
                                    unsigned jobs = 1);

/// value = (1/n^2) log |psi_n(alpha)^2|_v, target = (1/2) log |f'(alpha)|_v,
/// bound = |1/2 - 2d(n)/n^2| |log f'(alpha)| + 2/n^2 |log c(n)|.
/// Throws InvalidArgument unless alpha is a root of f.
ConvergenceTable converge_at_root(const CurveSpec& curve, const BigRat& alpha, const Place& place,
                                  const std::vector<long>& ns, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Genus-1 comparison with the classical division polynomials

enum class Verdict { match, match_up_to_sign, mismatch };
std::string_view to_string(Verdict v);

struct CrosscheckEntry {
    long n;
    Verdict verdict;
};

struct CrosscheckReport {
    BigRat a, b;
    long n_max;
    std::vector<CrosscheckEntry> entries;
    bool ok() const;
};

/// Classical division polynomials of y^2 = x^3 + Ax + B, y-free parts:
/// psi_n = h_n for odd n and psi_n = y h_n for even n. Index 0..n_max.
std::vector<QPoly> classical_division_polys(const BigRat& a, const BigRat& b, long n_max);

/// Odd n: Cantor psi_n against classical psi_n. Even n: against psi_n / (2y).
CrosscheckReport crosscheck_elliptic(const BigRat& a, const BigRat& b, long n_max, unsigned jobs = 1);

// ---------------------------------------------------------------------------

struct ProductFormula {
    bool pass;
    double sum;  // sum over all places of log |Res(f, psi_n^2)|_v
    std::vector<std::string> primes;
};

/// Sums log |Res(f, psi_n^2)|_v over the archimedean place and every prime
/// dividing the numerator or denominator; passes when |sum| <= 1e-9.
ProductFormula product_formula_check(const CurveSpec& curve, long n);

/// Prime factors of |z| with multiplicity, ascending: trial division below
/// 10^5, then perfect-power detection and Pollard rho on the cofactor.
std::vector<std::pair<BigInt, long>> factor(const BigInt& z);

} // namespace divpoly

#endif // DIVPOLY_THEOREM_HPP
