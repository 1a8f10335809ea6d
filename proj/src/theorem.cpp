#include "divpoly/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "divpoly/catalan.hpp"
#include "divpoly/errors.hpp"
#include "divpoly/parallel.hpp"
#include "divpoly/resultant.hpp"

namespace divpoly {

namespace {

constexpr double kRealTolerance = 1e-9;

QPoly powmod(const QPoly& base, long e, const QPoly& f) {
    QPoly result = poly_mod(QPoly::one(), f);
    QPoly b = poly_mod(base, f);
    while (e > 0) {
        if (e & 1L) result = poly_mod(result * b, f);
        e >>= 1;
        if (e) b = poly_mod(b * b, f);
    }
    return result;
}

std::vector<long> admissible_only(int g, const Place& place, const std::vector<long>& ns, std::vector<long>& skipped) {
    std::vector<long> keep;
    for (long n : ns) {
        if (place.is_archimedean() || admissible(g, n, place.prime())) {
            keep.push_back(n);
        } else {
            skipped.push_back(n);
        }
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::sort(skipped.begin(), skipped.end());
    return keep;
}

std::optional<long> log_units(const BigRat& q, const Place& place) {
    if (place.is_archimedean()) return std::nullopt;
    return -valuation(q, place.prime());
}

} // namespace

RootIdentity root_identity(const PsiResult& res) {
    const QPoly& f = res.curve.f();
    const QPoly lhs = poly_mod(res.psi, f);
    const QPoly rhs = powmod(res.curve.df(), res.d_n, f) * BigRat(res.c_n);
    Sign sign = Sign::unknown;
    if (lhs == rhs) {
        sign = Sign::plus;
    } else if (lhs == -rhs) {
        sign = Sign::minus;
    }
    return {sign != Sign::unknown, sign, lhs, rhs};
}

bool resultant_identity(const PsiResult& res) {
    const int g = res.curve.genus();
    const BigRat lhs = resultant(res.curve.f(), res.psi);
    const BigRat rhs = pow(BigRat(res.c_n), static_cast<unsigned long>(2 * g + 1)) *
                       pow(res.curve.discriminant(), static_cast<unsigned long>(res.d_n));
    return abs(lhs) == abs(rhs);
}

ConvergenceTable converge_resultant(const CurveSpec& curve, const Place& place, const std::vector<long>& ns,
                                    unsigned jobs) {
    const int g = curve.genus();
    ConvergenceTable table{place, {}, {}};
    const auto keep = admissible_only(g, place, ns, table.skipped);
    const double log_disc = log_abs(curve.discriminant(), place);
    table.rows = parallel_map(keep, jobs, [&](long n) {
        const PsiResult res = hankel_psi(curve, n);
        const BigRat r = resultant(curve.f(), res.psi * res.psi);
        if (sgn(r) == 0) throw InternalError("Res(f, psi_n^2) = 0 for a separable f");
        const double n2 = static_cast<double>(n) * static_cast<double>(n);
        const double log_c = log_abs(BigRat(res.c_n), place);
        ConvergenceRow row{n, log_abs(r, place) / n2, 0.5 * log_disc, 0.0, log_units(r, place)};
        row.bound = std::fabs(0.5 - 2.0 * static_cast<double>(res.d_n) / n2) * std::fabs(log_disc) +
                    2.0 * (2 * g + 1) / n2 * std::fabs(log_c);
        return row;
    });
    return table;
}

ConvergenceTable converge_at_root(const CurveSpec& curve, const BigRat& alpha, const Place& place,
                                  const std::vector<long>& ns, unsigned jobs) {
    if (sgn(evaluate(curve.f(), alpha)) != 0) throw InvalidArgument(to_string(alpha) + " is not a root of f");
    const BigRat slope = evaluate(curve.df(), alpha);
    if (sgn(slope) == 0) throw InvalidArgument("f'(alpha) = 0: f is not separable");
    const int g = curve.genus();
    ConvergenceTable table{place, {}, {}};
    const auto keep = admissible_only(g, place, ns, table.skipped);
    const double log_slope = log_abs(slope, place);
    table.rows = parallel_map(keep, jobs, [&](long n) {
        const PsiResult res = hankel_psi(curve, n);
        const BigRat v = evaluate(res.psi, alpha);
        if (sgn(v) == 0) throw InternalError("psi_n vanishes at a root of f");
        const BigRat v2 = v * v;
        const double n2 = static_cast<double>(n) * static_cast<double>(n);
        ConvergenceRow row{n, log_abs(v2, place) / n2, 0.5 * log_slope, 0.0, log_units(v2, place)};
        row.bound = std::fabs(0.5 - 2.0 * static_cast<double>(res.d_n) / n2) * std::fabs(log_slope) +
                    2.0 / n2 * std::fabs(log_abs(BigRat(res.c_n), place));
        return row;
    });
    return table;
}

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::match:
        return "match";
    case Verdict::match_up_to_sign:
        return "match-up-to-sign";
    case Verdict::mismatch:
        break;
    }
    return "mismatch";
}

bool CrosscheckReport::ok() const {
    return std::none_of(entries.begin(), entries.end(), [](const auto& e) { return e.verdict == Verdict::mismatch; });
}

// psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
// psi_{2m}   = psi_m / (2y) * (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2)
// With psi_k = y h_k for even k and y^2 = f these become recurrences for h:
//   h_{2m+1} = f^2 h_{m+2} h_m^3 - h_{m-1} h_{m+1}^3     (m even)
//   h_{2m+1} = h_{m+2} h_m^3 - f^2 h_{m-1} h_{m+1}^3     (m odd)
//   h_{2m}   = h_m / 2 * (h_{m+2} h_{m-1}^2 - h_{m-2} h_{m+1}^2)
std::vector<QPoly> classical_division_polys(const BigRat& a, const BigRat& b, long n_max) {
    if (sgn(4 * a * a * a + 27 * b * b) == 0) throw InvalidArgument("singular curve: 4A^3 + 27B^2 = 0");
    const QPoly f{b, a, BigRat(0), BigRat(1)};
    const QPoly f2 = f * f;
    std::vector<QPoly> h(static_cast<std::size_t>(std::max(n_max, 4L)) + 1);
    h[0] = {};
    h[1] = QPoly::one();
    h[2] = QPoly{BigRat(2)};
    h[3] = QPoly{BigRat(-a * a), BigRat(12 * b), BigRat(6 * a), BigRat(0), BigRat(3)};
    h[4] = QPoly{BigRat(-8 * b * b - a * a * a), BigRat(-4 * a * b), BigRat(-5 * a * a), BigRat(20 * b), BigRat(5 * a),
                 BigRat(0), BigRat(1)} *
           BigRat(4);
    auto cube = [](const QPoly& p) { return p * p * p; };
    for (long k = 5; k <= n_max; ++k) {
        const auto m = static_cast<std::size_t>(k / 2);
        if (k % 2 == 1) {
            if (m % 2 == 0) {
                h[k] = f2 * h[m + 2] * cube(h[m]) - h[m - 1] * cube(h[m + 1]);
            } else {
                h[k] = h[m + 2] * cube(h[m]) - f2 * h[m - 1] * cube(h[m + 1]);
            }
        } else {
            h[k] = h[m] * BigRat(1, 2) *
                   (h[m + 2] * h[m - 1] * h[m - 1] - h[m - 2] * h[m + 1] * h[m + 1]);
        }
    }
    h.resize(static_cast<std::size_t>(std::max(n_max, 0L)) + 1);
    return h;
}

CrosscheckReport crosscheck_elliptic(const BigRat& a, const BigRat& b, long n_max, unsigned jobs) {
    const auto classical = classical_division_polys(a, b, n_max);
    const CurveSpec curve(1, {BigRat(0), a, b});
    std::vector<long> ns;
    for (long n = 1; n <= n_max; ++n) ns.push_back(n);
    CrosscheckReport report{a, b, n_max, {}};
    report.entries = parallel_map(ns, jobs, [&](long n) {
        const QPoly cantor = hankel_psi(curve, n).psi;
        QPoly reference = classical[static_cast<std::size_t>(n)];
        if (n % 2 == 0) reference = reference * BigRat(1, 2);
        Verdict v = Verdict::mismatch;
        if (cantor == reference) {
            v = Verdict::match;
        } else if (cantor == -reference) {
            v = Verdict::match_up_to_sign;
        }
        return CrosscheckEntry{n, v};
    });
    return report;
}

namespace {

// Brent's variant of Pollard rho; returns a proper divisor of the odd
// composite n, which is not a perfect power.
BigInt rho_divisor(const BigInt& n) {
    for (unsigned long c = 1; c < 64; ++c) {
        BigInt y = 2, x, q = 1, g = 1, ys;
        const auto step = [&](BigInt& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        for (unsigned long r = 1; g == 1; r *= 2) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            for (unsigned long k = 0; k < r && g == 1; k += 128) {
                ys = y;
                for (unsigned long i = 0; i < std::min(128UL, r - k); ++i) {
                    step(y);
                    q = q * abs(BigInt(x - y));
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g == n) {
            // Backtrack one step at a time from the last saved point.
            do {
                step(ys);
                const BigInt diff = abs(BigInt(x - ys));
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
    throw InternalError("factor: Pollard rho found no divisor of " + n.get_str());
}

void factor_into(const BigInt& n, long mult, std::map<BigInt, long>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        out[n] += mult;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
            BigInt root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                factor_into(root, mult * static_cast<long>(k), out);
                return;
            }
        }
    }
    const BigInt d = rho_divisor(n);
    factor_into(d, mult, out);
    factor_into(BigInt(n / d), mult, out);
}

} // namespace

std::vector<std::pair<BigInt, long>> factor(const BigInt& z) {
    if (sgn(z) == 0) throw InvalidArgument("factor: zero");
    BigInt rest = abs(z);
    std::map<BigInt, long> found;
    for (unsigned long p = 2; p < 100000 && rest > 1; p = p == 2 ? 3 : p + 2) {
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        const BigInt prime(p);
        found[prime] = static_cast<long>(mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t()));
    }
    factor_into(rest, 1, found);
    return {found.begin(), found.end()};
}

ProductFormula product_formula_check(const CurveSpec& curve, long n) {
    const PsiResult res = hankel_psi(curve, n);
    const BigRat r = resultant(curve.f(), res.psi * res.psi);
    ProductFormula out{false, log_abs(r, Place::archimedean()), {}};
    std::vector<BigInt> primes;
    for (const BigInt& part : {BigInt(r.get_num()), BigInt(r.get_den())}) {
        for (const auto& [p, e] : factor(part)) primes.push_back(p);
    }
    for (const auto& p : primes) {
        out.primes.push_back(p.get_str());
        if (mpz_cmp_ui(p.get_mpz_t(), 1UL << 31) < 0) {
            out.sum += log_abs(r, Place::p_adic(p.get_ui()));
        } else {
            // Beyond word-sized places: -v_p(r) ln p directly.
            BigInt rest;
            const long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), r.get_num_mpz_t(), p.get_mpz_t())) -
                           static_cast<long>(mpz_remove(rest.get_mpz_t(), r.get_den_mpz_t(), p.get_mpz_t()));
            out.sum -= static_cast<double>(v) * log_abs(p);
        }
    }
    out.pass = std::fabs(out.sum) <= kRealTolerance;
    return out;
}

} // namespace divpoly
