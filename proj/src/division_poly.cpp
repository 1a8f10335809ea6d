#include "divpoly/division_poly.hpp"

#include <algorithm>

#include "divpoly/catalan.hpp"
#include "divpoly/errors.hpp"
#include "divpoly/io.hpp"

namespace divpoly {

namespace {

using ZPoly = UniPoly<BigInt>;

BigInt common_denominator(const SquareMatrix<QPoly>& m) {
    BigInt l = 1;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            for (const auto& c : m(i, j).coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        }
    }
    return l;
}

SquareMatrix<ZPoly> scaled_to_integers(const SquareMatrix<QPoly>& m, const BigInt& l) {
    SquareMatrix<ZPoly> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out(i, j) = map_coeffs(m(i, j), [&](const BigRat& c) {
                BigRat s = c * l;
                return BigInt(s.get_num());
            });
        }
    }
    return out;
}

QPoly unscale(const ZPoly& p, const BigInt& l, std::size_t dim) {
    const BigInt denom = pow(l, static_cast<unsigned long>(dim));
    return map_coeffs(p, [&](const BigInt& c) { return make_rat(c, denom); });
}

std::string num(long v) { return std::to_string(v); }

} // namespace

std::string_view to_string(Parity p) {
    return p == Parity::same_as_genus ? "n=g mod 2" : "n=g+1 mod 2";
}

std::string_view to_string(Sign s) {
    switch (s) {
    case Sign::plus:
        return "+1";
    case Sign::minus:
        return "-1";
    case Sign::unknown:
        break;
    }
    return "unknown";
}

Parity parity_of(int g, long n) {
    if (n < g) throw InvalidArgument("n = " + num(n) + " is below the genus " + num(g));
    return (n - g) % 2 == 0 ? Parity::same_as_genus : Parity::opposite_to_genus;
}

long psi_degree(int g, long n) {
    const long base = parity_of(g, n) == Parity::same_as_genus ? g : g + 1;
    return g * (n * n - base * base) / 2;
}

long hankel_first_index(int g, long n) { return parity_of(g, n) == Parity::same_as_genus ? g + 1 : g + 2; }

SquareMatrix<QPoly> psi_hankel_matrix(const PjTable& table, long n) {
    const int g = table.curve.genus();
    const long dim = hankel_dim(g, n);
    if (dim > 0 && static_cast<long>(table.max_j()) < n - 1) {
        throw InvalidArgument("P_j table too short: need P_" + num(n - 1));
    }
    const auto first = static_cast<std::size_t>(hankel_first_index(g, n));
    return hankel<QPoly>(static_cast<std::size_t>(dim), [&](std::size_t k) { return table[first + k]; });
}

QPoly determinant_fraction_free(const SquareMatrix<QPoly>& m) {
    if (m.dim() == 0) return QPoly::one();
    const BigInt l = common_denominator(m);
    return unscale(determinant_bareiss(scaled_to_integers(m, l)), l, m.dim());
}

QPoly determinant_interpolation(const SquareMatrix<QPoly>& m) {
    const std::size_t dim = m.dim();
    if (dim == 0) return QPoly::one();
    std::size_t bound = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        std::size_t row = 0;
        bool any = false;
        for (std::size_t j = 0; j < dim; ++j) {
            if (m(i, j).is_zero()) continue;
            row = std::max(row, *m(i, j).degree());
            any = true;
        }
        if (!any) return {};
        bound += row;
    }
    const BigInt l = common_denominator(m);
    const SquareMatrix<ZPoly> zm = scaled_to_integers(m, l);

    // Values at x = 0..bound, then forward differences in place: diff[k] = Delta^k v(0).
    std::vector<BigInt> diff(bound + 1);
    for (std::size_t t = 0; t <= bound; ++t) {
        SquareMatrix<BigInt> at(dim);
        const BigInt point(static_cast<unsigned long>(t));
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) at(i, j) = evaluate(zm(i, j), point);
        }
        diff[t] = determinant_bareiss(std::move(at));
    }
    for (std::size_t k = 1; k <= bound; ++k) {
        for (std::size_t t = bound; t >= k; --t) diff[t] -= diff[t - 1];
    }

    // p(x) = sum_k diff[k] * x(x-1)...(x-k+1) / k!; accumulate bound! * p over Z.
    BigInt bound_fact = 1;
    for (std::size_t k = 2; k <= bound; ++k) bound_fact *= static_cast<unsigned long>(k);
    std::vector<BigInt> acc(bound + 1, BigInt(0));
    std::vector<BigInt> falling{BigInt(1)};  // coefficients of x(x-1)...(x-k+1)
    BigInt k_fact = 1;
    for (std::size_t k = 0; k <= bound; ++k) {
        if (k > 0) {
            k_fact *= static_cast<unsigned long>(k);
            // multiply by (x - (k - 1))
            const BigInt shift(static_cast<unsigned long>(k - 1));
            falling.push_back(BigInt(0));
            for (std::size_t i = falling.size() - 1; i > 0; --i) falling[i] = falling[i - 1] - shift * falling[i];
            falling[0] = -shift * falling[0];
        }
        if (sgn(diff[k]) == 0) continue;
        const BigInt weight = diff[k] * (bound_fact / k_fact);
        for (std::size_t i = 0; i < falling.size(); ++i) acc[i] += weight * falling[i];
    }
    const BigInt denom = bound_fact * pow(l, static_cast<unsigned long>(dim));
    std::vector<BigRat> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& a : acc) coeffs.push_back(make_rat(a, denom));
    return QPoly(std::move(coeffs));
}

PsiResult hankel_psi(const PjTable& table, long n, DetMethod det) {
    const int g = table.curve.genus();
    const Parity parity = parity_of(g, n);
    const auto matrix = psi_hankel_matrix(table, n);
    QPoly psi = det == DetMethod::bareiss ? determinant_fraction_free(matrix) : determinant_interpolation(matrix);
    if (psi.is_zero()) throw InternalError("psi_" + num(n) + " vanished identically");
    BigRat lead = psi.leading();
    return PsiResult{table.curve, n,          parity,     std::move(psi), std::move(lead), static_cast<long>(matrix.dim()),
                     d_of_n(g, n), c_of_n(g, n), Sign::unknown};
}

PsiResult hankel_psi(const CurveSpec& curve, long n, PjMethod pj, DetMethod det) {
    parity_of(curve.genus(), n);
    const auto max_j = static_cast<std::size_t>(std::max(n - 1, 0L));
    return hankel_psi(*PjCache::global().get(curve, max_j, pj), n, det);
}

bool ValidationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

ValidationReport validate_psi(const PsiResult& res, std::span<const unsigned long> primes) {
    const int g = res.curve.genus();
    ValidationReport report;
    const long expected = psi_degree(g, res.n);
    const Degree actual = res.psi.degree();
    report.checks.push_back({"degree", actual.has_value() && static_cast<long>(*actual) == expected,
                             "deg psi_" + num(res.n) + " = " + (actual ? num(static_cast<long>(*actual)) : "-inf") +
                                 ", formula " + num(expected)});
    const bool integral = is_integer(res.b_n);
    report.checks.push_back({"b(n) integer", integral, "b(" + num(res.n) + ") = " + to_string(res.b_n)});
    for (unsigned long p : primes) {
        if (!admissible(g, res.n, p)) continue;
        const bool divides = integral && mpz_divisible_ui_p(res.b_n.get_num_mpz_t(), p);
        report.checks.push_back({"p does not divide b(n), p=" + std::to_string(p), integral && !divides,
                                 divides ? "divisible" : (integral ? "not divisible" : "b(n) not integral")});
    }
    return report;
}

Fp reduce_mod_p(const BigRat& q, unsigned long p) {
    if (mpz_divisible_ui_p(q.get_den_mpz_t(), p)) {
        throw InvalidArgument(to_string(q) + " is not " + std::to_string(p) + "-integral");
    }
    const auto num_mod = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    const auto den_mod = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    return Fp(num_mod, p) / Fp(den_mod, p);
}

UniPoly<Fp> psi_mod_p(const PsiResult& res, unsigned long p) {
    if (!is_prime(p)) throw InvalidArgument("psi_mod_p: " + std::to_string(p) + " is not prime");
    if (p < static_cast<unsigned long>(2 * res.curve.genus() + 1)) {
        throw InvalidArgument("psi_mod_p: need p >= 2g + 1");
    }
    for (const auto& a : res.curve.coeffs()) reduce_mod_p(a, p);
    return map_coeffs(res.psi, [&](const BigRat& c) { return reduce_mod_p(c, p); });
}

long default_n_cap(int g) {
    switch (g) {
    case 1:
        return 30;
    case 2:
        return 20;
    case 3:
        return 14;
    default:
        return 10;
    }
}

std::vector<unsigned long> primes_below(unsigned long bound) {
    std::vector<unsigned long> out;
    for (unsigned long p = 2; p < bound; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

} // namespace divpoly
