#ifndef DIVPOLY_PLACE_HPP
#define DIVPOLY_PLACE_HPP

#include <string>
#include <string_view>

#include "divpoly/scalar.hpp"

namespace divpoly {

/// A place of Q: the real absolute value or a p-adic one.
class Place {
public:
    enum class Kind { archimedean, p_adic };

    static Place archimedean() { return Place(Kind::archimedean, 0); }
    // Throws InvalidArgument unless p is prime.
    static Place p_adic(unsigned long p);
    // "arch" or "p:<prime>".
    static Place parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_archimedean() const { return kind_ == Kind::archimedean; }
    unsigned long prime() const { return prime_; }  // 0 at the archimedean place

    std::string to_string() const;

    friend bool operator==(const Place&, const Place&) = default;

private:
    Place(Kind kind, unsigned long prime) : kind_(kind), prime_(prime) {}

    Kind kind_;
    unsigned long prime_;
};

/// Natural log of |z| for z != 0, via the binary exponent and a double
/// mantissa; relative accuracy about 1e-15 regardless of size.
double log_abs(const BigInt& z);

/// log |q|_v: ln|q| at the archimedean place, -v_p(q) * ln p at a p-adic one.
/// Throws InvalidArgument for q = 0.
double log_abs(const BigRat& q, const Place& place);

} // namespace divpoly

#endif // DIVPOLY_PLACE_HPP
