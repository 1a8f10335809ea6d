// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "cli.hpp"
#include "divpoly/catalan.hpp"
#include "divpoly/io.hpp"
#include "divpoly/resultant.hpp"
#include "divpoly/theorem.hpp"
#include "test_support.hpp"

using namespace divpoly;
using divpoly::testing::curve;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
};

const std::map<int, std::size_t> kMaxJ{{1, 12}, {2, 8}, {3, 6}};
const std::map<int, long> kMaxN{{1, 24}, {2, 16}, {3, 12}};
const double ln2 = std::log(2.0);

std::vector<CurveSpec> curve_set(int g) {
    auto curves = testing::random_curves(g, 5, 2024U + static_cast<unsigned>(g));
    if (g == 1) {
        curves.push_back(curve(1, {0, -1, 0}));
        curves.push_back(curve(1, {0, 0, 1}));
    } else if (g == 2) {
        curves.push_back(curve(2, {0, 0, 0, -1, 1}));
    }
    return curves;
}

std::size_t total_curves() { return curve_set(1).size() + curve_set(2).size() + curve_set(3).size(); }

// The psi grid is shared by criteria 4 and 5.
const std::vector<PsiResult>& psi_grid() {
    static const std::vector<PsiResult> grid = [] {
        std::vector<PsiResult> out;
        for (int g = 1; g <= 3; ++g) {
            for (const auto& c : curve_set(g)) {
                for (long n = g; n <= kMaxN.at(g); ++n) out.push_back(hankel_psi(c, n));
            }
        }
        return out;
    }();
    return grid;
}

Outcome oracle_equivalence() {
    std::size_t tables = 0;
    for (int g = 1; g <= 3; ++g) {
        for (const auto& c : curve_set(g)) {
            const auto closed = pj_closed_form(c, kMaxJ.at(g));
            for (const auto& other : {pj_newton_sqrt(c, kMaxJ.at(g)), pj_rj_recursion(c, kMaxJ.at(g))}) {
                if (const auto d = first_difference(closed, other)) {
                    return {false, fmt::format("{} vs {} on {}: j={}, x^{}", to_string(closed.method),
                                               to_string(other.method), c.to_string(), d->j, d->coeff)};
                }
            }
            ++tables;
        }
    }
    return {true, fmt::format("closed = newton = rj on {} curves, J = 12/8/6", tables)};
}

Outcome series_identity() {
    std::size_t checked = 0, zero_rows = 0;
    for (int g = 1; g <= 3; ++g) {
        for (const auto& c : curve_set(g)) {
            const auto table = pj_closed_form(c, kMaxJ.at(g));
            for (std::size_t j = 0; j <= kMaxJ.at(g); ++j) {
                const QPoly lhs = convolution(table, j);
                if (lhs != convolution_target(c, j)) {
                    return {false, fmt::format("{} j={}", c.to_string(), j)};
                }
                if (j >= static_cast<std::size_t>(2 * g + 2)) {
                    if (!lhs.is_zero()) return {false, fmt::format("{} j={}: row not zero", c.to_string(), j)};
                    ++zero_rows;
                }
                ++checked;
            }
        }
    }
    return {true, fmt::format("{} convolutions exact, {} of them zero rows j >= 2g+2", checked, zero_rows)};
}

Outcome lemma() {
    std::size_t checked = 0;
    for (int g = 1; g <= 3; ++g) {
        for (const auto& c : curve_set(g)) {
            const auto table = pj_closed_form(c, kMaxJ.at(g));
            for (std::size_t j = 1; j <= kMaxJ.at(g); ++j) {
                // c_{j-1} (f')^j (-1)^g reduced mod f, built here from scratch.
                QPoly expected = pow(c.df(), static_cast<unsigned long>(j)) * BigRat(catalan(static_cast<long>(j) - 1));
                if (g % 2 == 1) expected = -expected;
                if (poly_mod(table[j], c.f()) != poly_mod(expected, c.f())) {
                    return {false, fmt::format("{} j={}", c.to_string(), j)};
                }
                ++checked;
            }
        }
    }
    return {true, fmt::format("P_j mod f = (-1)^g c_(j-1) f'^j mod f for {} (curve, j)", checked)};
}

Outcome structure() {
    const auto primes = primes_below(51);
    std::size_t checks = 0;
    for (const auto& res : psi_grid()) {
        const auto report = validate_psi(res, primes);
        for (const auto& c : report.checks) {
            if (!c.pass) return {false, fmt::format("{} n={}: {} {}", res.curve.to_string(), res.n, c.name, c.detail)};
        }
        checks += report.checks.size();
    }
    return {true, fmt::format("{} psi_n (g=1 n<=24, g=2 n<=16, g=3 n<=12), {} checks incl. p<=50", psi_grid().size(),
                              checks)};
}

Outcome root_and_resultant() {
    for (const auto& res : psi_grid()) {
        if (!root_identity(res).pass) return {false, fmt::format("root identity {} n={}", res.curve.to_string(), res.n)};
        if (!resultant_identity(res)) {
            return {false, fmt::format("resultant identity {} n={}", res.curve.to_string(), res.n)};
        }
    }
    const auto c = curve(1, {0, -1, 0});
    const PsiResult p3 = hankel_psi(c, 3);
    const QPoly anchor = -poly_mod(c.df() * c.df() * BigRat(p3.c_n), c.f());
    if (poly_mod(p3.psi, c.f()) != anchor) return {false, "psi_3 mod f anchor"};
    if (abs(resultant(c.f(), p3.psi * p3.psi)) != 256) return {false, "|Res(f, psi_3^2)| != 256"};
    return {true, fmt::format("{} psi_n exact; anchors psi_3 = -c(3) f'^2 mod f, |Res(f, psi_3^2)| = 256",
                              psi_grid().size())};
}

Outcome dcv() {
    for (long l = 1; l <= 8; ++l) {
        for (long m = 1; m <= 12; ++m) {
            if (BigRat(catalan_hankel_det(l, m)) != dcv_product(l, m)) return {false, fmt::format("l={} m={}", l, m)};
        }
    }
    if (catalan_hankel_det(3, 2) != 14) return {false, "anchor l=3 m=2 != 14"};
    return {true, "96 (l, m) pairs exact, l=3 m=2 gives 14"};
}

std::vector<long> odd_3_to_25() {
    std::vector<long> ns;
    for (long n = 3; n <= 25; n += 2) ns.push_back(n);
    return ns;
}

Outcome archimedean() {
    const auto table = converge_resultant(curve(1, {0, -1, 0}), Place::archimedean(), odd_3_to_25());
    double worst = 0;
    for (const auto& r : table.rows) {
        const double closed = ln2 / double(r.n * r.n);
        worst = std::max(worst, std::fabs(r.error() - closed));
        if (r.error() > r.bound + 1e-9) return {false, fmt::format("n={} error above bound", r.n)};
    }
    if (worst >= 1e-10) return {false, fmt::format("|error - ln2/n^2| up to {:.3g}", worst)};
    return {true, fmt::format("error = ln2/n^2 within {:.1e}; n=3 {:.4f}, n=25 {:.4f}", worst,
                              table.rows.front().error(), table.rows.back().error())};
}

Outcome p_adic() {
    const auto c = curve(1, {0, -1, 0});
    const auto table = converge_resultant(c, Place::p_adic(2), odd_3_to_25());
    if (table.rows.size() != odd_3_to_25().size()) return {false, "odd n skipped at p=2"};
    for (const auto& r : table.rows) {
        // disc = 4, c(n) = 1: v_2 Res(f, psi_n^2) = 2 d(n) v_2(4) = 4 d(n).
        if (!r.log_units || *r.log_units != -4 * d_of_n(1, r.n)) {
            return {false, fmt::format("n={}: n^2 value/ln2 = {}", r.n, r.log_units.value_or(0))};
        }
        if (std::fabs(r.error() - ln2 / double(r.n * r.n)) >= 1e-10) return {false, fmt::format("n={} error", r.n)};
    }
    std::vector<long> ns;
    for (long n = 1; n <= 25; ++n) ns.push_back(n);
    const auto t3 = converge_resultant(curve(1, {0, 0, 1}), Place::p_adic(3), ns);
    for (const auto& r : t3.rows) {
        if (r.n % 3 == 0) return {false, "n divisible by 3 not skipped"};
        if (std::fabs(r.target + 1.5 * std::log(3.0)) > 1e-12) return {false, "target != -(3/2) ln 3"};
        if (r.error() > r.bound + 1e-9) return {false, fmt::format("x^3+1 n={} error above bound", r.n)};
    }
    if (t3.rows.back().error() >= t3.rows[2].error()) return {false, "x^3+1 error not shrinking"};
    return {true, fmt::format("x^3-x p=2: n^2 value/ln2 = -4 d(n) exactly, error = ln2/n^2; x^3+1 p=3: {} rows, "
                              "error <= bound, n=25 error {:.4f}",
                              t3.rows.size(), t3.rows.back().error())};
}

Outcome crosscheck() {
    for (const auto& [a, b] : {std::pair{-1, 0}, std::pair{2, 3}}) {
        const auto report = crosscheck_elliptic(BigRat(a), BigRat(b), 20);
        if (!report.ok() || report.entries.size() != 20) return {false, fmt::format("A={} B={}", a, b)};
    }
    return {true, "A=-1 B=0 and A=2 B=3, n <= 20: no mismatch"};
}

Outcome product_formula() {
    std::size_t checked = 0;
    for (const auto& c : {curve(1, {0, -1, 0}), curve(1, {0, 0, 1}), curve(2, {0, 0, 0, -1, 1})}) {
        for (long n = c.genus(); n <= 12; ++n) {
            const auto pf = product_formula_check(c, n);
            if (!pf.pass) return {false, fmt::format("{} n={} sum={:.3g}", c.to_string(), n, pf.sum)};
            ++checked;
        }
    }
    return {true, fmt::format("{} (curve, n) pairs sum to 0 within 1e-9", checked)};
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

Outcome determinism() {
    int code = 0;
    const std::vector<std::string> converge{"converge", "--genus", "2", "--random", "--seed", "5", "--n-range", "2..12",
                                            "--place", "p:7", "--format", "csv", "--jobs", "2"};
    const std::string first = cli_output(converge, code);
    if (code != 0 || first.empty()) return {false, "converge run failed"};
    for (int i = 0; i < 3; ++i) {
        if (cli_output(converge, code) != first) return {false, "converge CSV differs between runs"};
    }
    auto as_json = converge;
    as_json[11] = "json";
    if (cli_output(as_json, code) != cli_output(as_json, code)) return {false, "converge JSON differs between runs"};

    const auto doc = nlohmann::json::parse(cli_output(
        {"psi", "--genus", "1", "--coeffs", "1/2,-3,7/5", "--n-range", "1..14", "--format", "json"}, code));
    const CurveSpec c(1, {make_rat(1, 2), BigRat(-3), make_rat(7, 5)});
    for (const auto& row : doc["results"]) {
        const PsiResult direct = hankel_psi(c, row["n"].get<long>());
        if (poly_from_coeff_strings(row["psi"].get<std::vector<std::string>>()) != direct.psi ||
            parse_rat(row["b"].get<std::string>()) != direct.b_n) {
            return {false, fmt::format("JSON round trip n={}", row["n"].get<long>())};
        }
    }
    return {true, "4 identical converge CSV runs, identical JSON, 14 psi_n round-trip exactly"};
}

void sign_table() {
    for (int g = 1; g <= 3; ++g) {
        std::map<long, std::map<Sign, int>> seen;
        for (const auto& res : psi_grid()) {
            if (res.curve.genus() == g) ++seen[res.n][root_identity(res).sign];
        }
        std::string row;
        bool consistent = true;
        std::map<int, std::set<Sign>> by_parity;
        for (const auto& [n, signs] : seen) {
            consistent = consistent && signs.size() == 1;
            row += fmt::format(" {}{}", n, signs.size() == 1 ? (signs.begin()->first == Sign::plus ? "+" : "-") : "?");
            for (const auto& [s, count] : signs) by_parity[static_cast<int>(n % 2)].insert(s);
        }
        const bool parity_constant = by_parity[0].size() <= 1 && by_parity[1].size() <= 1;
        std::cout << fmt::format("INFO  sign eps_n g={}:{}  (same on every curve: {}; constant per parity of n: {})\n",
                                 g, row, consistent ? "yes" : "no", parity_constant ? "yes" : "no");
    }
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "P_j oracle equivalence", 120, oracle_equivalence},
        {2, "series convolution identity", 120, series_identity},
        {3, "P_j value at the roots of f", 120, lemma},
        {4, "psi_n degree, b(n), p does not divide b(n)", 600, structure},
        {5, "root and resultant identities", 600, root_and_resultant},
        {6, "Catalan Hankel determinants", 60, dcv},
        {7, "archimedean convergence", 120, archimedean},
        {8, "p-adic convergence", 120, p_adic},
        {9, "genus 1 vs classical division polynomials", 120, crosscheck},
        {10, "product formula", 120, product_formula},
        {11, "determinism and JSON round trip", 120, determinism},
    };
    std::cout << fmt::format("curve set: {} curves (5 random per genus, a_i in [-5,5], plus x^3-x, x^3+1, x^5-x+1)\n",
                             total_curves());
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.pass && secs > c.budget_s) o = {false, fmt::format("{} (over the {:.0f}s budget)", o.detail, c.budget_s)};
        failed += o.pass ? 0 : 1;
        std::cout << fmt::format("{}  [{:>2}] {}: {}  ({:.2f}s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail,
                                 secs)
                  << std::flush;
    }
    sign_table();
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
