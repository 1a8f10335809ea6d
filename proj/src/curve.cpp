#include "divpoly/curve.hpp"

#include "divpoly/errors.hpp"
#include "divpoly/io.hpp"
#include "divpoly/resultant.hpp"

namespace divpoly {

namespace {

QPoly monic_from(const std::vector<BigRat>& a) {
    // a_1 multiplies x^(d-1), ..., a_d is the constant term.
    const std::size_t d = a.size();
    std::vector<BigRat> c(d + 1);
    c[d] = 1;
    for (std::size_t i = 0; i < d; ++i) c[d - 1 - i] = a[i];
    return QPoly(std::move(c));
}

} // namespace

CurveSpec::CurveSpec(int genus, std::vector<BigRat> coeffs) : genus_(genus), coeffs_(std::move(coeffs)) {
    if (genus_ < 1) throw InvalidArgument("genus must be at least 1");
    const auto expected = static_cast<std::size_t>(2 * genus_ + 1);
    if (coeffs_.size() != expected) {
        throw InvalidArgument("genus " + std::to_string(genus_) + " needs " + std::to_string(expected) +
                              " coefficients a_1..a_" + std::to_string(expected) + ", got " +
                              std::to_string(coeffs_.size()));
    }
    f_ = monic_from(coeffs_);
    df_ = derivative(f_);
    disc_ = divpoly::discriminant(f_);
    if (sgn(disc_) == 0) throw InvalidArgument("f = " + divpoly::to_string(f_) + " is not separable");
}

CurveSpec CurveSpec::from_poly(const QPoly& f) {
    if (f.is_zero() || *f.degree() < 3 || *f.degree() % 2 == 0) {
        throw InvalidArgument("curve polynomial must have odd degree >= 3");
    }
    if (f.leading() != 1) throw InvalidArgument("curve polynomial must be monic");
    const std::size_t d = *f.degree();
    std::vector<BigRat> a;
    for (std::size_t i = 0; i < d; ++i) a.push_back(f.coeff(d - 1 - i));
    return CurveSpec(static_cast<int>((d - 1) / 2), std::move(a));
}

std::string CurveSpec::to_string() const { return divpoly::to_string(f_); }

} // namespace divpoly
