#include "divpoly/series.hpp"

#include <algorithm>

#include "divpoly/catalan.hpp"
#include "divpoly/errors.hpp"
#include "divpoly/io.hpp"

namespace divpoly {

namespace {

BigRat sign_g1(const CurveSpec& curve) { return (curve.genus() + 1) % 2 == 0 ? BigRat(1) : BigRat(-1); }

// 2^e for possibly negative e.
BigRat two_pow(long e) {
    BigRat r = 1;
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
    }
    return r;
}

std::vector<QPoly> powers(const QPoly& p, std::size_t max_e) {
    std::vector<QPoly> out{QPoly::one()};
    for (std::size_t e = 1; e <= max_e; ++e) out.push_back(out.back() * p);
    return out;
}

QBiPoly truncate_z(const QBiPoly& p, std::size_t terms) { return p.truncated(terms); }

// -------------------------------------------------------------------------
// Rational functions num / F^e, kept reduced: F does not divide num unless e = 0.

struct FFrac {
    QPoly num;
    std::size_t e = 0;
};

class FFracRing {
public:
    explicit FFracRing(const QPoly& f) : f_(f), fpow_{QPoly::one()} {}

    FFrac reduce(FFrac a) const {
        if (a.num.is_zero()) return {{}, 0};
        while (a.e > 0) {
            auto [q, r] = divrem(a.num, f_);
            if (!r.is_zero()) break;
            a.num = std::move(q);
            --a.e;
        }
        return a;
    }
    FFrac add(const FFrac& a, const FFrac& b) {
        if (a.num.is_zero()) return b;
        if (b.num.is_zero()) return a;
        const std::size_t e = std::max(a.e, b.e);
        return reduce({a.num * fpow(e - a.e) + b.num * fpow(e - b.e), e});
    }
    FFrac sub(const FFrac& a, const FFrac& b) { return add(a, {-b.num, b.e}); }
    FFrac mul(const FFrac& a, const FFrac& b) const {
        if (a.num.is_zero() || b.num.is_zero()) return {};
        return reduce({a.num * b.num, a.e + b.e});
    }
    FFrac scale(const FFrac& a, const BigRat& s) const { return {a.num * s, a.e}; }

    const QPoly& fpow(std::size_t e) {
        while (fpow_.size() <= e) fpow_.push_back(fpow_.back() * f_);
        return fpow_[e];
    }

private:
    QPoly f_;
    std::vector<QPoly> fpow_;
};

using FSeries = std::vector<FFrac>;  // truncated power series in z

// u / t for t with constant term 1.
FSeries series_div(FFracRing& ring, const FSeries& u, const FSeries& t, std::size_t prec) {
    FSeries q(prec);
    for (std::size_t i = 0; i < prec; ++i) {
        FFrac acc = i < u.size() ? u[i] : FFrac{};
        for (std::size_t l = 1; l <= i && l < t.size(); ++l) acc = ring.sub(acc, ring.mul(t[l], q[i - l]));
        q[i] = acc;
    }
    return q;
}

} // namespace

std::string_view to_string(PjMethod m) {
    switch (m) {
    case PjMethod::closed_form:
        return "closed";
    case PjMethod::newton_sqrt:
        return "newton";
    case PjMethod::rj_recursion:
        return "rj";
    }
    return "?";
}

PjMethod parse_pj_method(std::string_view text) {
    if (text == "closed" || text == "closed-form" || text == "closed_form") return PjMethod::closed_form;
    if (text == "newton" || text == "newton-sqrt" || text == "newton_sqrt") return PjMethod::newton_sqrt;
    if (text == "rj" || text == "rj-recursion" || text == "rj_recursion") return PjMethod::rj_recursion;
    throw InvalidArgument("unknown P_j method '" + std::string(text) + "'");
}

QBiPoly shift_by_z(const QPoly& p) {
    const QBiPoly x_minus_z{QPoly::variable(), QPoly{BigRat(-1)}};
    return compose(map_coeffs(p, [](const BigRat& c) { return QPoly{c}; }), x_minus_z);
}

QBiPoly build_e1(const CurveSpec& curve) {
    const QBiPoly diff = shift_by_z(curve.f()) - lift_constant(curve.f());
    if (!diff.coeff(0).is_zero()) throw InternalError("F(x - z) - F(x) has a nonzero z^0 term");
    std::vector<QPoly> c(diff.coeffs().begin() + 1, diff.coeffs().end());
    return QBiPoly(std::move(c));
}

BigRat binomial_half(std::size_t m) {
    // (1/2)(1/2 - 1)...(1/2 - m + 1) / m!
    BigRat r = 1;
    for (std::size_t i = 0; i < m; ++i) {
        r *= BigRat(1, 2) - BigRat(static_cast<unsigned long>(i));
        r /= BigRat(static_cast<unsigned long>(i + 1));
    }
    return r;
}

// Expanding sqrt(1 + z E1 / y^2) binomially,
//   S = (-1)^(g+1) sum_m C(1/2, m) y^(1-2m) z^m E1^m.
// The z^j coefficient collects the terms z^(j-m) of E1^m, and
// y^(1-2m) = y^(1-2j) * (y^2)^(j-m) = y^(1-2j) F^(j-m). Matching with
// P_j (2y)^(1-2j) gives
//   P_j = (-1)^(g+1) 2^(2j-1) sum_{m=0..j} C(1/2, m) F^(j-m) [z^(j-m)] E1^m.
PjTable pj_closed_form(const CurveSpec& curve, std::size_t max_j) {
    const QBiPoly e1 = build_e1(curve);
    const auto fpow = powers(curve.f(), max_j);
    std::vector<QBiPoly> e1pow{QBiPoly::one()};
    for (std::size_t m = 1; m <= max_j; ++m) e1pow.push_back(truncate_z(e1pow.back() * e1, max_j + 1 - m));
    std::vector<BigRat> half;
    for (std::size_t m = 0; m <= max_j; ++m) half.push_back(binomial_half(m));

    PjTable table{curve, PjMethod::closed_form, {}};
    for (std::size_t j = 0; j <= max_j; ++j) {
        QPoly sum;
        for (std::size_t m = 0; m <= j; ++m) {
            const QPoly& ez = e1pow[m].coeff(j - m);
            if (ez.is_zero()) continue;
            sum += fpow[j - m] * ez * half[m];
        }
        table.entries.push_back(sum * (sign_g1(curve) * two_pow(2 * static_cast<long>(j) - 1)));
    }
    return table;
}

// T = sqrt(U) with U = 1 + z E1(z) / F, by T <- (T + U/T) / 2 starting from T = 1,
// doubling the z-precision each round. Since S = (-1)^(g+1) y T,
//   P_j = (-1)^(g+1) y (2y)^(2j-1) T_j = (-1)^(g+1) 2^(2j-1) F^j T_j,
// which has to come out polynomial.
PjTable pj_newton_sqrt(const CurveSpec& curve, std::size_t max_j) {
    const std::size_t prec = max_j + 1;
    FFracRing ring(curve.f());
    const QBiPoly e1 = build_e1(curve);

    FSeries u(prec);
    u[0] = {QPoly::one(), 0};
    for (std::size_t k = 0; k + 1 < prec && k < e1.size(); ++k) u[k + 1] = ring.reduce({e1.coeff(k), 1});

    FSeries t{{QPoly::one(), 0}};
    std::size_t have = 1;
    while (have < prec) {
        have = std::min(2 * have, prec);
        FSeries q = series_div(ring, u, t, have);
        t.resize(have);
        for (std::size_t i = 0; i < have; ++i) t[i] = ring.scale(ring.add(t[i], q[i]), BigRat(1, 2));
    }

    PjTable table{curve, PjMethod::newton_sqrt, {}};
    for (std::size_t j = 0; j <= max_j; ++j) {
        QPoly value;
        const FFrac& tj = t[j];
        if (!tj.num.is_zero()) {
            if (tj.e > j) throw InternalError("newton_sqrt: F-power denominator of T_j does not cancel");
            value = tj.num * ring.fpow(j - tj.e);
        }
        table.entries.push_back(value * (sign_g1(curve) * two_pow(2 * static_cast<long>(j) - 1)));
    }
    return table;
}

// With S^(j)/j! = R_j / (2S)^(2j-1) and S' = -F'(x - z) / (2S):
//   R_1 = -F'(x - z),
//   R_{j+1} = 2/(j+1) * (2 dR_j/dz F(x - z) + (2j - 1) R_j F'(x - z)).
// Only R_max(x, 0) is needed at the end and each step eats one z-derivative,
// so R_j is kept modulo z^(max_j - j + 1).
std::vector<QBiPoly> rj_sequence(const CurveSpec& curve, std::size_t max_j) {
    std::vector<QBiPoly> out;
    if (max_j == 0) return out;
    const QBiPoly f_shift = shift_by_z(curve.f());
    const QBiPoly df_shift = shift_by_z(curve.df());
    out.push_back(truncate_z(-df_shift, max_j));
    for (std::size_t j = 1; j < max_j; ++j) {
        const QBiPoly& r = out.back();
        const std::size_t keep = max_j - j;  // terms z^0 .. z^(max_j - j - 1)
        QBiPoly next = truncate_z(derivative(r) * f_shift, keep) * QPoly{BigRat(2)};
        next += truncate_z(r * df_shift, keep) * QPoly{BigRat(static_cast<long>(2 * j - 1))};
        out.push_back(next * QPoly{make_rat(BigInt(2), BigInt(static_cast<unsigned long>(j + 1)))});
    }
    return out;
}

PjTable pj_rj_recursion(const CurveSpec& curve, std::size_t max_j) {
    PjTable table{curve, PjMethod::rj_recursion, {QPoly{sign_g1(curve) * BigRat(1, 2)}}};
    for (const auto& r : rj_sequence(curve, max_j)) table.entries.push_back(at_z_zero(r) * sign_g1(curve));
    return table;
}

PjTable compute_pj(const CurveSpec& curve, std::size_t max_j, PjMethod method) {
    switch (method) {
    case PjMethod::closed_form:
        return pj_closed_form(curve, max_j);
    case PjMethod::newton_sqrt:
        return pj_newton_sqrt(curve, max_j);
    case PjMethod::rj_recursion:
        return pj_rj_recursion(curve, max_j);
    }
    throw InvalidArgument("unknown P_j method");
}

std::optional<TableDifference> first_difference(const PjTable& a, const PjTable& b) {
    const std::size_t n = std::min(a.entries.size(), b.entries.size());
    for (std::size_t j = 0; j < n; ++j) {
        const QPoly& p = a.entries[j];
        const QPoly& q = b.entries[j];
        if (p == q) continue;
        const std::size_t len = std::max(p.size(), q.size());
        for (std::size_t k = 0; k < len; ++k) {
            if (p.coeff(k) != q.coeff(k)) return TableDifference{j, k};
        }
    }
    return std::nullopt;
}

QPoly convolution(const PjTable& table, std::size_t j) {
    QPoly sum;
    for (std::size_t a = 0; a <= j; ++a) sum += table[a] * table[j - a];
    return sum;
}

QPoly convolution_target(const CurveSpec& curve, std::size_t j) {
    if (j == 0) return QPoly{BigRat(1, 4)};
    QPoly dj = curve.f();
    BigRat fact = 1;
    for (std::size_t k = 1; k <= j; ++k) {
        dj = derivative(dj);
        fact *= BigRat(static_cast<unsigned long>(k));
    }
    if (dj.is_zero()) return {};
    const BigRat sign = j % 2 == 0 ? BigRat(1) : BigRat(-1);
    return pow(curve.f() * BigRat(4), j - 1) * dj * BigRat(sign / fact);
}

QPoly lemma_value_mod_f(const CurveSpec& curve, std::size_t j) {
    if (j == 0) throw InvalidArgument("lemma_value_mod_f: j must be at least 1");
    QPoly acc = QPoly::one();
    for (std::size_t k = 0; k < j; ++k) acc = poly_mod(acc * curve.df(), curve.f());
    BigRat scale(catalan(static_cast<long>(j) - 1));
    if (curve.genus() % 2 == 1) scale = -scale;
    return acc * scale;
}

std::shared_ptr<const PjTable> PjCache::get(const CurveSpec& curve, std::size_t max_j, PjMethod method) {
    std::string key = std::to_string(curve.genus());
    for (const auto& a : curve.coeffs()) key += "," + divpoly::to_string(a);
    {
        std::lock_guard lock(mutex_);
        auto it = tables_.find({key, method});
        if (it != tables_.end() && it->second->max_j() >= max_j) return it->second;
    }
    auto table = std::make_shared<const PjTable>(compute_pj(curve, max_j, method));
    std::lock_guard lock(mutex_);
    auto& slot = tables_[{key, method}];
    if (!slot || slot->max_j() < table->max_j()) slot = table;
    return slot;
}

PjCache& PjCache::global() {
    static PjCache cache;
    return cache;
}

} // namespace divpoly
