#include "divpoly/io.hpp"

#include <sstream>

#include "divpoly/errors.hpp"

namespace divpoly {

namespace {

std::string monomial(std::string_view var, std::size_t k) {
    if (k == 0) return {};
    if (k == 1) return std::string(var);
    return std::string(var) + "^" + std::to_string(k);
}

template <class Coeff, class Abs, class IsNeg, class Fmt>
std::string render(const UniPoly<Coeff>& p, std::string_view var, Abs abs, IsNeg is_neg, Fmt fmt) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    const auto c = p.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (RingTraits<Coeff>::is_zero(c[k])) continue;
        const bool neg = is_neg(c[k]);
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        const std::string mag = fmt(abs(c[k]));
        if (k == 0) {
            out << mag;
        } else {
            if (mag != "1") out << (mag.find('/') != std::string::npos ? "(" + mag + ")" : mag);
            out << monomial(var, k);
        }
    }
    return out.str();
}

} // namespace

std::string to_string(const QPoly& p, std::string_view var) {
    return render(
        p, var, [](const BigRat& q) { return BigRat(abs(q)); }, [](const BigRat& q) { return sgn(q) < 0; },
        [](const BigRat& q) { return to_string(q); });
}

std::string to_string(const UniPoly<Fp>& p, std::string_view var) {
    return render(
        p, var, [](const Fp& a) { return a; }, [](const Fp&) { return false; },
        [](const Fp& a) { return std::to_string(a.value()); });
}

std::vector<std::string> coeff_strings(const QPoly& p) {
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

QPoly poly_from_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<BigRat> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(parse_rat(s));
    return QPoly(std::move(c));
}

std::vector<BigRat> parse_rat_list(std::string_view text) {
    std::vector<BigRat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_rat(text.substr(start, end - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace divpoly
