#ifndef DIVPOLY_CURVE_HPP
#define DIVPOLY_CURVE_HPP

#include <string>
#include <vector>

#include "divpoly/scalar.hpp"
#include "divpoly/unipoly.hpp"

namespace divpoly {

using QPoly = UniPoly<BigRat>;
using QBiPoly = BiPoly<BigRat>;

/// y^2 = f(x) with f = x^(2g+1) + a_1 x^(2g) + ... + a_(2g+1) monic and separable.
class CurveSpec {
public:
    // coeffs = a_1, ..., a_(2g+1), highest power first after the leading 1.
    // Throws InvalidArgument for g < 1, the wrong number of coefficients, or
    // a vanishing discriminant.
    CurveSpec(int genus, std::vector<BigRat> coeffs);

    // Builds the curve from a monic f of odd degree >= 3.
    static CurveSpec from_poly(const QPoly& f);

    int genus() const { return genus_; }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    const QPoly& f() const { return f_; }
    const QPoly& df() const { return df_; }
    const BigRat& discriminant() const { return disc_; }

    // "x^3 - x" style rendering of f.
    std::string to_string() const;

    friend bool operator==(const CurveSpec& a, const CurveSpec& b) {
        return a.genus_ == b.genus_ && a.coeffs_ == b.coeffs_;
    }

private:
    int genus_;
    std::vector<BigRat> coeffs_;
    QPoly f_;
    QPoly df_;
    BigRat disc_;
};

} // namespace divpoly

#endif // DIVPOLY_CURVE_HPP
