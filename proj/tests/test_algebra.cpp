#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "divpoly/io.hpp"
#include "divpoly/place.hpp"
#include "divpoly/resultant.hpp"
#include "test_support.hpp"

using namespace divpoly;
using divpoly::testing::qpoly;

TEST_CASE("rationals stay canonical") {
    const BigRat q = make_rat(BigInt(6), BigInt(-4));
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(parse_rat(" -6/4 ") == q);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(parse_rat("12")) == "12");
    CHECK_THROWS_AS(parse_rat("1/0"), InvalidArgument);
    CHECK_THROWS_AS(parse_rat("1/-2"), InvalidArgument);
    CHECK_THROWS_AS(parse_rat("abc"), InvalidArgument);
}

TEST_CASE("zero polynomial has no degree") {
    const QPoly zero;
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());
    CHECK(QPoly{0, 0, 0}.is_zero());
    CHECK(QPoly{5}.degree() == std::size_t{0});
    CHECK_THROWS_AS((void)zero.leading(), InvalidArgument);
}

TEST_CASE("poly_arith examples") {
    const QPoly xp1 = qpoly({1, 1}), xm1 = qpoly({-1, 1});
    CHECK(xp1 * xm1 == qpoly({-1, 0, 1}));
    const QPoly p = qpoly({-1, 0, -6, 0, 3});
    CHECK(p + QPoly{} == p);
    CHECK(p * QPoly::one() == p);
    CHECK(p - p == QPoly{});
    CHECK((p * xp1).degree() == std::size_t{5});
    CHECK(to_string(p) == "3x^4 - 6x^2 - 1");
    CHECK(to_string(QPoly{BigRat(-3, 4), BigRat(1, 2)}) == "(1/2)x - 3/4");
}

TEST_CASE("poly_mod examples") {
    const QPoly f = qpoly({0, -1, 0, 1});  // x^3 - x
    CHECK(poly_mod(qpoly({0, 0, 0, 0, 1}), f) == qpoly({0, 0, 1}));
    CHECK(poly_mod(qpoly({-1, 0, -6, 0, 3}), f) == qpoly({-1, 0, -3}));
    CHECK(poly_mod(f, f).is_zero());
    CHECK_THROWS_AS(poly_mod(qpoly({1, 1}), qpoly({0, 2})), InvalidArgument);
    CHECK_THROWS_AS(poly_mod(qpoly({1, 1}), QPoly{}), InvalidArgument);
}

TEST_CASE("exact and pseudo division") {
    const QPoly a = qpoly({-1, 0, 1}), b = qpoly({1, 1});
    CHECK(exact_quotient(a, b) == qpoly({-1, 1}));
    CHECK_THROWS_AS(exact_quotient(a, qpoly({2, 1})), InvalidArgument);

    using ZPoly = UniPoly<BigInt>;
    const ZPoly za{BigInt(1), BigInt(2), BigInt(3)};  // 3x^2 + 2x + 1
    const ZPoly zb{BigInt(1), BigInt(2)};             // 2x + 1
    // 2^2 * (3x^2+2x+1) = (6x + 1)(2x+1) + 3
    CHECK(pseudo_remainder(za, zb) == ZPoly{BigInt(3)});
}

TEST_CASE("resultant examples") {
    const QPoly f = qpoly({0, -1, 0, 1});
    const QPoly psi3 = qpoly({-1, 0, -6, 0, 3});
    CHECK(abs(resultant(f, derivative(f))) == 4);
    CHECK(resultant(f, psi3) == -16);
    CHECK(resultant(f, psi3 * psi3) == 256);
    // Linear first argument: Res(x - c, b) = b(c).
    const QPoly b = qpoly({7, -2, 0, 5});
    CHECK(resultant(qpoly({-3, 1}), b) == evaluate(b, BigRat(3)));
    CHECK_THROWS_AS(resultant(f, QPoly{}), InvalidArgument);
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(qpoly({0, -1, 0, 1})) == 4);
    CHECK(discriminant(qpoly({1, 0, 0, 1})) == -27);
    CHECK(discriminant(qpoly({-1, 0, 1})) == 4);
    CHECK(discriminant(qpoly({0, 0, 1, 1})) == 0);
    CHECK_THROWS_AS(discriminant(qpoly({1, 0, 2})), InvalidArgument);
}

TEST_CASE("resultant matches the root product for rational roots") {
    // f = (x)(x-1)(x+1)(x-2)(x+3)
    const std::vector<long> roots{0, 1, -1, 2, -3};
    QPoly f = QPoly::one();
    for (long r : roots) f *= qpoly({-r, 1});
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<BigRat> c;
        for (int k = 0; k <= trial % 7; ++k) c.emplace_back(coeff(rng));
        const QPoly g(c);
        if (g.is_zero()) continue;
        BigRat product = 1;
        for (long r : roots) product *= evaluate(g, BigRat(r));
        CHECK(resultant(f, g) == product);
    }
}

TEST_CASE("subresultant PRS agrees with the Sylvester determinant") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> degree(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        auto draw = [&] {
            std::vector<BigRat> c;
            const int d = degree(rng);
            for (int k = 0; k < d; ++k) c.emplace_back(coeff(rng));
            c.emplace_back(coeff(rng) == 0 ? 1 : coeff(rng) | 1);
            return QPoly(c);
        };
        const QPoly a = draw(), b = draw();
        CHECK(resultant(a, b) == testing::resultant_sylvester(a, b));
        // Swapping the arguments costs (-1)^(deg a * deg b).
        const BigRat sw = resultant(b, a);
        CHECK(((*a.degree() * *b.degree()) % 2 ? -sw : sw) == resultant(a, b));
    }
}

TEST_CASE("resultant is multiplicative in the second argument") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> degree(1, 6);
    int checked = 0;
    while (checked < 40) {
        auto monic = [&] {
            std::vector<BigRat> c;
            const int d = degree(rng);
            for (int k = 0; k < d; ++k) c.emplace_back(coeff(rng));
            c.emplace_back(1);
            return QPoly(c);
        };
        const QPoly f = monic(), g = monic(), h = monic();
        if (*f.degree() < 2 || discriminant(f) == 0) continue;
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
        ++checked;
    }
}

TEST_CASE("integer-coefficient resultant via the same PRS") {
    using ZPoly = UniPoly<BigInt>;
    const ZPoly f{BigInt(0), BigInt(-1), BigInt(0), BigInt(1)};
    const ZPoly psi{BigInt(-1), BigInt(0), BigInt(-6), BigInt(0), BigInt(3)};
    CHECK(resultant(f, psi) == -16);
}

TEST_CASE("log_abs examples") {
    const double ln2 = std::log(2.0);
    CHECK(log_abs(BigRat(256), Place::archimedean()) == doctest::Approx(8 * ln2).epsilon(1e-14));
    CHECK(log_abs(BigRat(256), Place::p_adic(2)) == doctest::Approx(-8 * ln2).epsilon(1e-14));
    for (const auto& place : {Place::archimedean(), Place::p_adic(2), Place::p_adic(7)}) {
        CHECK(log_abs(BigRat(1), place) == 0.0);
        CHECK_FALSE(std::signbit(log_abs(BigRat(5), place == Place::archimedean() ? Place::p_adic(3) : place)));
        CHECK_THROWS_AS(log_abs(BigRat(0), place), InvalidArgument);
    }
    CHECK(log_abs(make_rat(BigInt(9), BigInt(14)), Place::p_adic(3)) == doctest::Approx(-2 * std::log(3.0)));
}

TEST_CASE("log_abs of huge integers keeps 1e-12 relative accuracy") {
    // 3^5000 has ~7925 bits; ln = 5000 ln 3.
    const BigInt big = pow(BigInt(3), 5000);
    const double expected = 5000 * std::log(3.0);
    CHECK(std::fabs(log_abs(BigRat(big), Place::archimedean()) - expected) / expected < 1e-12);
    const BigRat tiny(BigInt(1), pow(BigInt(10), 400) + 1);
    CHECK(std::fabs(log_abs(tiny, Place::archimedean()) + 400 * std::log(10.0)) < 1e-10);
}

TEST_CASE("place construction") {
    CHECK_THROWS_AS(Place::p_adic(1), InvalidArgument);
    CHECK_THROWS_AS(Place::p_adic(9), InvalidArgument);
    CHECK(Place::parse("p:5") == Place::p_adic(5));
    CHECK(Place::parse("arch").is_archimedean());
    CHECK_THROWS_AS(Place::parse("p:x"), InvalidArgument);
    CHECK(Place::p_adic(13).to_string() == "p:13");
}

namespace {

std::vector<unsigned long> prime_divisors(BigInt n) {
    n = abs(n);
    std::vector<unsigned long> out;
    for (unsigned long p = 2; n > 1; ++p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.push_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
        }
    }
    return out;
}

} // namespace

TEST_CASE("log_abs is additive and satisfies the product formula") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
    const std::vector<Place> places{Place::archimedean(), Place::p_adic(2), Place::p_adic(3), Place::p_adic(5),
                                    Place::p_adic(101)};
    for (int trial = 0; trial < 200; ++trial) {
        long a = num(rng), b = num(rng);
        if (a == 0) a = 17;
        if (b == 0) b = -3;
        const BigRat q = make_rat(BigInt(a), BigInt(den(rng)));
        const BigRat r = make_rat(BigInt(b), BigInt(den(rng)));
        for (const auto& v : places) {
            const double lhs = log_abs(BigRat(q * r), v);
            const double rhs = log_abs(q, v) + log_abs(r, v);
            CHECK(std::fabs(lhs - rhs) < 1e-10);
            if (!v.is_archimedean()) {
                CHECK(valuation(BigRat(q * r), v.prime()) == valuation(q, v.prime()) + valuation(r, v.prime()));
            }
        }
        double total = log_abs(q, Place::archimedean());
        std::vector<unsigned long> primes = prime_divisors(BigInt(q.get_num()));
        for (unsigned long p : prime_divisors(BigInt(q.get_den()))) primes.push_back(p);
        for (unsigned long p : primes) total += log_abs(q, Place::p_adic(p));
        CHECK(std::fabs(total) < 1e-10);
    }
}

TEST_CASE("prime field arithmetic") {
    const Fp a(3, 7), b(5, 7);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK((a / b * b) == a);
    CHECK_THROWS_AS(Fp(0, 7).inverse(), InvalidArgument);
    CHECK_THROWS_AS((void)(Fp(1, 5) + Fp(1, 7)), InvalidArgument);
    const UniPoly<Fp> p{Fp(4, 5), Fp(0, 5), Fp(4, 5), Fp(0, 5), Fp(3, 5)};
    CHECK(to_string(p) == "3x^4 + 4x^2 + 4");
}

TEST_CASE("bivariate polynomials compose and differentiate") {
    // F(x - z) for F = x^3 - x via composition in Q[x][z].
    const QPoly f = qpoly({0, -1, 0, 1});
    const QBiPoly x_minus_z{QPoly::variable(), QPoly{BigRat(-1)}};
    const QBiPoly shifted = compose(map_coeffs(f, [](const BigRat& c) { return QPoly{c}; }), x_minus_z);
    CHECK(shifted.coeff(0) == f);
    CHECK(shifted.coeff(1) == -derivative(f));
    CHECK(shifted.coeff(3) == QPoly{BigRat(-1)});
    CHECK(derivative(shifted).coeff(0) == -derivative(f));
}
