#include "divpoly/scalar.hpp"

#include <cctype>
#include <string>

#include "divpoly/errors.hpp"

namespace divpoly {

BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw InvalidArgument("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

BigRat parse_rat(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InvalidArgument("empty rational literal");

    auto parse_int = [&](std::string_view part, bool allow_sign) {
        std::string s(part);
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
        for (std::size_t k = i; k < s.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
                throw InvalidArgument("malformed rational literal '" + std::string(text) + "'");
            }
        }
        if (s[0] == '+') s.erase(0, 1);
        return BigInt(s, 10);
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRat(parse_int(text, true));
    return make_rat(parse_int(text.substr(0, slash), true), parse_int(text.substr(slash + 1), false));
}

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

long valuation(const BigInt& z, unsigned long p) {
    if (sgn(z) == 0) throw InvalidArgument("valuation of zero");
    if (p < 2) throw InvalidArgument("valuation: p must be a prime");
    BigInt rest;
    const BigInt prime(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t()));
}

long valuation(const BigRat& q, unsigned long p) {
    if (sgn(q) == 0) throw InvalidArgument("valuation of zero");
    return valuation(BigInt(q.get_num()), p) - valuation(BigInt(q.get_den()), p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt pow(const BigInt& z, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

BigRat pow(const BigRat& q, unsigned long e) {
    return BigRat(pow(BigInt(q.get_num()), e), pow(BigInt(q.get_den()), e));
}

} // namespace divpoly
