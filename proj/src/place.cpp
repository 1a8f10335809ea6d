#include "divpoly/place.hpp"

#include <charconv>
#include <cmath>

#include "divpoly/errors.hpp"

namespace divpoly {

Place Place::p_adic(unsigned long p) {
    if (!is_prime(p)) throw InvalidArgument("p-adic place needs a prime, got " + std::to_string(p));
    return Place(Kind::p_adic, p);
}

Place Place::parse(std::string_view text) {
    if (text == "arch" || text == "inf") return archimedean();
    if (text.size() > 2 && text.substr(0, 2) == "p:") {
        unsigned long p = 0;
        const auto digits = text.substr(2);
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size()) return p_adic(p);
    }
    throw InvalidArgument("place must be 'arch' or 'p:<prime>', got '" + std::string(text) + "'");
}

std::string Place::to_string() const {
    return is_archimedean() ? std::string("arch") : "p:" + std::to_string(prime_);
}

double log_abs(const BigInt& z) {
    if (sgn(z) == 0) throw InvalidArgument("log of zero");
    // |z| = m * 2^e with 0.5 <= m < 1 (m truncated to 53 bits).
    long e = 0;
    const double m = std::fabs(mpz_get_d_2exp(&e, z.get_mpz_t()));
    return static_cast<double>(e) * std::log(2.0) + std::log(m);
}

double log_abs(const BigRat& q, const Place& place) {
    if (sgn(q) == 0) throw InvalidArgument("log of zero");
    if (place.is_archimedean()) return log_abs(BigInt(q.get_num())) - log_abs(BigInt(q.get_den()));
    const long v = valuation(q, place.prime());
    if (v == 0) return 0.0;
    return -static_cast<double>(v) * std::log(static_cast<double>(place.prime()));
}

} // namespace divpoly
