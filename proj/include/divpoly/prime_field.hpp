#ifndef DIVPOLY_PRIME_FIELD_HPP
#define DIVPOLY_PRIME_FIELD_HPP

#include <cstdint>
#include <ostream>

#include "divpoly/errors.hpp"

namespace divpoly {

/// Element of F_p for a word-sized prime p (p < 2^32 so products fit in 64 bits).
///
/// A modulus of 0 marks a "generic" zero or one, which adopts the modulus of
/// whatever it is combined with. This lets UniPoly<Fp> create its neutral
/// elements without a field context.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus)
        : value_(modulus ? value % modulus : value), modulus_(modulus) {}

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        const auto p = common(a, b);
        return {p ? (a.value_ + b.value_) % p : a.value_ + b.value_, p};
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        const auto p = common(a, b);
        if (p == 0) {
            return {a.value_ - b.value_, 0};
        }
        return {(a.value_ + p - b.value_ % p) % p, p};
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        const auto p = common(a, b);
        return {p ? (a.value_ * b.value_) % p : a.value_ * b.value_, p};
    }
    Fp operator-() const { return Fp(0, modulus_) - *this; }
    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }

    Fp inverse() const {
        if (value_ == 0 || modulus_ == 0) {
            throw InvalidArgument("Fp: inverse of zero or of an element without modulus");
        }
        // Fermat: a^(p-2).
        std::uint64_t result = 1, base = value_, e = modulus_ - 2;
        while (e) {
            if (e & 1U) result = result * base % modulus_;
            base = base * base % modulus_;
            e >>= 1U;
        }
        return {result, modulus_};
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    friend bool operator==(const Fp& a, const Fp& b) { return a.value_ == b.value_; }
    bool is_zero() const { return value_ == 0; }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value_; }

private:
    static std::uint64_t common(const Fp& a, const Fp& b) {
        if (a.modulus_ && b.modulus_ && a.modulus_ != b.modulus_) {
            throw InvalidArgument("Fp: mixing elements of different prime fields");
        }
        return a.modulus_ ? a.modulus_ : b.modulus_;
    }

    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 0;
};

} // namespace divpoly

#endif // DIVPOLY_PRIME_FIELD_HPP
