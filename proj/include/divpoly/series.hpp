#ifndef DIVPOLY_SERIES_HPP
#define DIVPOLY_SERIES_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divpoly/curve.hpp"

namespace divpoly {

/// Coefficient polynomials P_j of the expansion
///
///     S(z) = sum_j P_j(x) (2y)^(1-2j) z^j,    S(z)^2 = F(x - z),  S(0) = (-1)^(g+1) y.
///
/// Three independent algorithms produce the same table:
///  - closed_form:  binomial expansion of sqrt(1 + z E1(z) / y^2)
///  - newton_sqrt:  Newton iteration for the same square root, with
///                  rational-function coefficients whose denominators are powers of F
///  - rj_recursion: the derivative recursion R_{j+1} from R_j, P_j = (-1)^(g+1) R_j(x, 0)
enum class PjMethod { closed_form, newton_sqrt, rj_recursion };

std::string_view to_string(PjMethod m);
// "closed", "newton", "rj" (also the full enumerator names).
PjMethod parse_pj_method(std::string_view text);

struct PjTable {
    CurveSpec curve;
    PjMethod method;
    std::vector<QPoly> entries;  // P_0 .. P_J

    std::size_t max_j() const { return entries.size() - 1; }
    const QPoly& operator[](std::size_t j) const { return entries.at(j); }
};

/// E1(z) = (F(x - z) - F(x)) / z as a polynomial in z over Q[x], z-degree 2g.
QBiPoly build_e1(const CurveSpec& curve);

/// F(x - z) as a polynomial in z over Q[x].
QBiPoly shift_by_z(const QPoly& p);

/// Generalized binomial coefficient binomial(1/2, m), exact.
BigRat binomial_half(std::size_t m);

PjTable pj_closed_form(const CurveSpec& curve, std::size_t max_j);
PjTable pj_newton_sqrt(const CurveSpec& curve, std::size_t max_j);
PjTable pj_rj_recursion(const CurveSpec& curve, std::size_t max_j);
PjTable compute_pj(const CurveSpec& curve, std::size_t max_j, PjMethod method);

/// R_j(x, z) for j = 1..max_j, each truncated to what R_j(x, 0) of later
/// indices needs, i.e. z-degree <= max_j - j.
std::vector<QBiPoly> rj_sequence(const CurveSpec& curve, std::size_t max_j);

struct TableDifference {
    std::size_t j;
    std::size_t coeff;  // exponent of x where the two P_j first differ
};

/// First (j, coefficient) at which the tables disagree over their common range.
std::optional<TableDifference> first_difference(const PjTable& a, const PjTable& b);

/// sum_{a+b=j} P_a P_b, and the value it must equal:
/// 1/4 at j = 0, otherwise (4F)^(j-1) (-1)^j F^(j) / j!.
QPoly convolution(const PjTable& table, std::size_t j);
QPoly convolution_target(const CurveSpec& curve, std::size_t j);

/// (-1)^g c_{j-1} (f')^j mod f, the value P_j takes at every root of f.
QPoly lemma_value_mod_f(const CurveSpec& curve, std::size_t j);

/// Shared P_j tables keyed by (curve, method). A request for a longer table
/// than the cached one recomputes and replaces it.
class PjCache {
public:
    std::shared_ptr<const PjTable> get(const CurveSpec& curve, std::size_t max_j, PjMethod method);

    static PjCache& global();

private:
    std::mutex mutex_;
    std::map<std::pair<std::string, PjMethod>, std::shared_ptr<const PjTable>> tables_;
};

} // namespace divpoly

#endif // DIVPOLY_SERIES_HPP
