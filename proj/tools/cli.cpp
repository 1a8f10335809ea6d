#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "divpoly/catalan.hpp"
#include "divpoly/division_poly.hpp"
#include "divpoly/errors.hpp"
#include "divpoly/io.hpp"
#include "divpoly/parallel.hpp"
#include "divpoly/place.hpp"
#include "divpoly/series.hpp"
#include "divpoly/theorem.hpp"

namespace divpoly::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    Json results = Json::array();
    std::vector<std::string> lines;  // text format body
    std::string csv;
    std::vector<std::string> warnings;
    int exit = exit_ok;
};

long parse_long(std::string_view s, std::string_view what) {
    long v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw UsageError(fmt::format("{}: '{}' is not an integer", what, s));
    return v;
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw UsageError("--n-range expects lo..hi, got '" + text + "'");
    const long lo = parse_long(std::string_view(text).substr(0, dots), "--n-range");
    const long hi = parse_long(std::string_view(text).substr(dots + 2), "--n-range");
    if (lo > hi) throw UsageError("--n-range: empty range " + text);
    return {lo, hi};
}

std::string csv_float(double v) { return fmt::format("{:.12g}", v); }

// Monic curve with a_i uniform in [-5, 5], redrawn until separable. The
// modulo keeps the draw independent of the standard library's distributions.
std::vector<std::string> random_coeffs(int g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<BigRat> a;
        for (int i = 0; i < 2 * g + 1; ++i) a.emplace_back(static_cast<long>(rng() % 11) - 5);
        try {
            const CurveSpec c(g, a);
            std::vector<std::string> out;
            for (const auto& q : c.coeffs()) out.push_back(to_string(q));
            return out;
        } catch (const InvalidArgument&) {
        }
    }
}

std::vector<long> resolved_ns(const RunConfig& cfg) {
    std::vector<long> ns;
    if (cfg.n) {
        ns.push_back(*cfg.n);
    } else if (cfg.n_lo) {
        for (long n = *cfg.n_lo; n <= *cfg.n_hi; ++n) ns.push_back(n);
    }
    return ns;
}

void check_budget(const RunConfig& cfg, long needed, std::string_view what) {
    if (needed > *cfg.n_cap) {
        throw BudgetExceeded(fmt::format("{} = {} exceeds the cap {} for genus {}; raise it with --n-cap", what,
                                         needed, *cfg.n_cap, cfg.genus));
    }
}

std::vector<long> require_ns(const RunConfig& cfg) {
    auto ns = resolved_ns(cfg);
    if (ns.empty()) throw UsageError(cfg.command + " needs --n or --n-range");
    if (ns.front() < cfg.genus) {
        throw UsageError(fmt::format("n = {} is below the genus {}", ns.front(), cfg.genus));
    }
    check_budget(cfg, ns.back(), "n");
    return ns;
}

PjMethod single_method(const RunConfig& cfg) {
    if (cfg.method == "all") throw UsageError("--method all is only available for pj");
    return parse_pj_method(cfg.method);
}

Json poly_json(const QPoly& p) { return Json(coeff_strings(p)); }

std::shared_ptr<const PjTable> table_for(const CurveSpec& curve, const std::vector<long>& ns, PjMethod m) {
    return PjCache::global().get(curve, static_cast<std::size_t>(std::max(ns.back() - 1, 0L)), m);
}

// ---------------------------------------------------------------------------

Output cmd_psi(const RunConfig& cfg, const CurveSpec& curve) {
    const auto ns = require_ns(cfg);
    const auto table = table_for(curve, ns, single_method(cfg));
    const auto rows = parallel_map(ns, cfg.jobs, [&](long n) { return hankel_psi(*table, n); });
    Output out;
    for (const auto& r : rows) {
        const long deg = static_cast<long>(r.psi.degree().value_or(0));
        out.results.push_back(Json{{"n", r.n},
                                   {"parity", to_string(r.parity)},
                                   {"degree", deg},
                                   {"psi", poly_json(r.psi)},
                                   {"text", to_string(r.psi)},
                                   {"b", to_string(r.b_n)},
                                   {"dim", r.dim},
                                   {"d", r.d_n},
                                   {"c", to_string(r.c_n)}});
        const std::string line = fmt::format("{}, deg {}, b={}, dim={}, d={}, c={}", to_string(r.psi), deg,
                                             to_string(r.b_n), r.dim, r.d_n, to_string(r.c_n));
        out.lines.push_back(ns.size() == 1 ? line : fmt::format("n={}: {}", r.n, line));
    }
    return out;
}

Output cmd_pj(const RunConfig& cfg, const CurveSpec& curve) {
    if (!cfg.max_j) throw UsageError("pj needs --max-j");
    if (*cfg.max_j < 0) throw UsageError("--max-j must be non-negative");
    check_budget(cfg, *cfg.max_j, "max-j");
    const auto max_j = static_cast<std::size_t>(*cfg.max_j);
    Output out;
    std::shared_ptr<const PjTable> table;
    if (cfg.method == "all") {
        table = PjCache::global().get(curve, max_j, PjMethod::closed_form);
        for (PjMethod other : {PjMethod::newton_sqrt, PjMethod::rj_recursion}) {
            const auto t = PjCache::global().get(curve, max_j, other);
            if (const auto diff = first_difference(*table, *t)) {
                out.exit = exit_identity;
                out.warnings.push_back(fmt::format("methods closed and {} first differ at j={}, coefficient x^{}",
                                                   to_string(other), diff->j, diff->coeff));
            }
        }
        if (out.exit == exit_ok) out.lines.push_back(fmt::format("# closed, newton, rj agree for j <= {}", max_j));
    } else {
        table = PjCache::global().get(curve, max_j, parse_pj_method(cfg.method));
    }
    for (std::size_t j = 0; j <= max_j; ++j) {
        const QPoly& p = (*table)[j];
        out.results.push_back(Json{{"j", j}, {"P", poly_json(p)}, {"text", to_string(p)}});
        out.lines.push_back(fmt::format("P_{} = {}", j, to_string(p)));
    }
    return out;
}

struct CheckRow {
    std::string name;
    std::optional<long> n;
    bool pass;
    std::string detail;
};

std::vector<CheckRow> checks_for_n(const PjTable& table, long n, const std::vector<unsigned long>& primes) {
    std::vector<CheckRow> rows;
    PsiResult res = hankel_psi(table, n);
    for (const auto& c : validate_psi(res, primes).checks) rows.push_back({c.name, n, c.pass, c.detail});
    const auto root = root_identity(res);
    rows.push_back({"root identity", n, root.pass, fmt::format("sign {}", to_string(root.sign))});
    rows.push_back({"resultant identity", n, resultant_identity(res), ""});
    try {
        const auto pf = product_formula_check(res.curve, n);
        std::string primes_text;
        for (const auto& p : pf.primes) primes_text += (primes_text.empty() ? "" : " ") + p;
        rows.push_back({"product formula", n, pf.pass, fmt::format("sum={:.3g} primes=[{}]", pf.sum, primes_text)});
    } catch (const InternalError& e) {
        rows.push_back({"product formula", n, false, e.what()});
    }
    return rows;
}

Output cmd_verify(const RunConfig& cfg, const CurveSpec& curve) {
    const auto ns = require_ns(cfg);
    const long need_j = std::max({ns.back() - 1, cfg.max_j.value_or(0), 1L});
    check_budget(cfg, need_j, "max-j");
    const auto max_j = static_cast<std::size_t>(need_j);
    const auto table = PjCache::global().get(curve, max_j, single_method(cfg));
    const auto primes = primes_below(cfg.prime_bound + 1);

    std::vector<CheckRow> rows;
    for (PjMethod m : {PjMethod::closed_form, PjMethod::newton_sqrt, PjMethod::rj_recursion}) {
        if (m == table->method) continue;
        const auto other = PjCache::global().get(curve, max_j, m);
        const auto diff = first_difference(*table, *other);
        rows.push_back({fmt::format("P_j {} = {}", to_string(table->method), to_string(m)), std::nullopt, !diff,
                        diff ? fmt::format("first differ at j={}, x^{}", diff->j, diff->coeff)
                             : fmt::format("j <= {}", max_j)});
    }
    for (std::size_t j = 0; j <= max_j; ++j) {
        rows.push_back({fmt::format("convolution j={}", j), std::nullopt,
                        convolution(*table, j) == convolution_target(curve, j), ""});
    }
    for (std::size_t j = 1; j <= max_j; ++j) {
        rows.push_back({fmt::format("lemma j={}", j), std::nullopt,
                        poly_mod((*table)[j], curve.f()) == lemma_value_mod_f(curve, j), ""});
    }
    std::vector<std::string> dcv_failures;
    for (long l = 1; l <= cfg.dcv_l; ++l) {
        for (long m = 1; m <= cfg.dcv_m; ++m) {
            if (BigRat(catalan_hankel_det(l, m)) != dcv_product(l, m)) dcv_failures.push_back(fmt::format("({},{})", l, m));
        }
    }
    rows.push_back({fmt::format("dcv l<={} m<={}", cfg.dcv_l, cfg.dcv_m), std::nullopt, dcv_failures.empty(),
                    fmt::format("{} failures", dcv_failures.size())});

    const auto per_n = parallel_map(ns, cfg.jobs, [&](long n) { return checks_for_n(*table, n, primes); });
    for (const auto& block : per_n) rows.insert(rows.end(), block.begin(), block.end());

    Output out;
    std::size_t failed = 0;
    for (const auto& r : rows) {
        failed += r.pass ? 0 : 1;
        out.results.push_back(Json{{"check", r.name},
                                   {"n", r.n ? Json(*r.n) : Json(nullptr)},
                                   {"pass", r.pass},
                                   {"detail", r.detail}});
        out.lines.push_back(fmt::format("{}  {}{}{}", r.pass ? "PASS" : "FAIL", r.name,
                                        r.n ? fmt::format(" n={}", *r.n) : "",
                                        r.detail.empty() ? "" : "  " + r.detail));
    }
    out.lines.push_back(fmt::format("# {} checks, {} failed", rows.size(), failed));
    if (failed) out.exit = exit_identity;
    return out;
}

Output cmd_converge(const RunConfig& cfg, const CurveSpec& curve) {
    const auto ns = require_ns(cfg);
    Place place = Place::archimedean();
    try {
        place = Place::parse(cfg.place);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    const ConvergenceTable table = cfg.root ? converge_at_root(curve, parse_rat(*cfg.root), place, ns, cfg.jobs)
                                            : converge_resultant(curve, place, ns, cfg.jobs);
    Output out;
    for (long n : table.skipped) {
        out.warnings.push_back(fmt::format("n={} skipped: p={} divides (n-g+1)...(n+g-1)", n, place.prime()));
    }
    out.csv = "n,value,target,error,bound\n";
    out.lines.push_back(fmt::format("{:>4} {:>20} {:>20} {:>20} {:>20}{}", "n", "value", "target", "error", "bound",
                                    place.is_archimedean() ? "" : fmt::format(" {:>10}", "log_units")));
    for (const auto& r : table.rows) {
        out.csv += fmt::format("{},{},{},{},{}\n", r.n, csv_float(r.value), csv_float(r.target), csv_float(r.error()),
                               csv_float(r.bound));
        out.lines.push_back(fmt::format("{:>4} {:>20} {:>20} {:>20} {:>20}{}", r.n, csv_float(r.value),
                                        csv_float(r.target), csv_float(r.error()), csv_float(r.bound),
                                        r.log_units ? fmt::format(" {:>10}", *r.log_units) : ""));
        Json row{{"n", r.n}, {"value", r.value}, {"target", r.target}, {"error", r.error()}, {"bound", r.bound}};
        if (r.log_units) row["log_units"] = *r.log_units;
        out.results.push_back(row);
    }
    return out;
}

Output cmd_crosscheck(const RunConfig& cfg, const CurveSpec& curve) {
    if (cfg.genus != 1) throw UsageError("crosscheck compares with classical division polynomials: needs --genus 1");
    if (sgn(curve.coeffs()[0]) != 0) {
        throw UsageError("crosscheck needs a short Weierstrass model x^3 + Ax + B: pass --coeffs 0,A,B");
    }
    const auto ns = require_ns(cfg);
    const auto report = crosscheck_elliptic(curve.coeffs()[1], curve.coeffs()[2], ns.back(), cfg.jobs);
    Output out;
    for (const auto& e : report.entries) {
        if (e.n < ns.front()) continue;
        if (e.verdict == Verdict::mismatch) out.exit = exit_identity;
        out.results.push_back(Json{{"n", e.n}, {"verdict", to_string(e.verdict)}});
        out.lines.push_back(fmt::format("n={} {}", e.n, to_string(e.verdict)));
    }
    return out;
}

// ---------------------------------------------------------------------------

Json manifest(const RunConfig& cfg, const CurveSpec& curve, const std::vector<std::string>& warnings) {
    Json m;
    m["tool"] = "divpoly";
    m["version"] = kVersion;
    m["command"] = cfg.command;
    m["genus"] = cfg.genus;
    m["coeffs"] = cfg.coeffs;
    m["f"] = to_string(curve.f());
    m["random"] = cfg.random;
    m["seed"] = cfg.random ? Json(cfg.seed) : Json(nullptr);
    m["n"] = cfg.n ? Json(*cfg.n) : Json(nullptr);
    m["n_range"] = cfg.n_lo ? Json::array({*cfg.n_lo, *cfg.n_hi}) : Json(nullptr);
    m["place"] = cfg.place;
    m["root"] = cfg.root ? Json(*cfg.root) : Json(nullptr);
    m["method"] = cfg.method;
    m["max_j"] = cfg.max_j ? Json(*cfg.max_j) : Json(nullptr);
    m["format"] = cfg.format;
    m["out"] = cfg.out;
    m["jobs"] = cfg.jobs;
    m["n_cap"] = *cfg.n_cap;
    m["prime_bound"] = cfg.prime_bound;
    m["dcv"] = Json{{"l", cfg.dcv_l}, {"m", cfg.dcv_m}};
    m["warnings"] = warnings;
    return m;
}

void write_to(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open '" + path + "' for writing");
    file << content;
    if (!file) throw UsageError("write to '" + path + "' failed");
}

std::string render_text(const Json& m, const Output& out) {
    std::string s;
    for (const auto& [key, value] : m.items()) {
        if (key == "warnings") continue;
        s += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    for (const auto& w : out.warnings) s += "# warning: " + w + "\n";
    for (const auto& line : out.lines) s += line + "\n";
    return s;
}

void emit(const RunConfig& cfg, const CurveSpec& curve, const Output& out, std::ostream& stdout_, std::ostream& err) {
    const Json m = manifest(cfg, curve, out.warnings);
    std::string body;
    if (cfg.format == "json") {
        body = Json{{"manifest", m}, {"results", out.results}}.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        body = out.csv;
        // CSV carries no comments; the manifest travels next to it.
        if (cfg.out.empty()) {
            err << "manifest: " << m.dump() << "\n";
        } else {
            write_to(cfg.out + ".manifest.json", m.dump(2) + "\n");
        }
    } else {
        body = render_text(m, out);
    }
    if (cfg.out.empty()) {
        stdout_ << body;
    } else {
        write_to(cfg.out, body);
    }
    if (out.exit != exit_ok) {
        for (const auto& w : out.warnings) err << "error: " << w << "\n";
    }
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& coeffs_text) {
    sub->add_option("--genus", cfg.genus, "genus g >= 1")->required()->check(CLI::PositiveNumber);
    auto* coeffs = sub->add_option("--coeffs", coeffs_text, "a_1,...,a_{2g+1} for f = x^{2g+1} + a_1 x^{2g} + ... + a_{2g+1}");
    auto* random = sub->add_flag("--random", cfg.random, "draw a_i uniformly from [-5, 5] using --seed");
    coeffs->excludes(random);
    sub->add_option("--seed", cfg.seed, "seed for --random");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out, "write results to this file instead of stdout");
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--n-cap", cfg.n_cap, "largest n (and max-j) accepted");
}

void add_n(CLI::App* sub, RunConfig& cfg, std::string& range_text) {
    auto* n = sub->add_option("--n", cfg.n, "single index n");
    auto* range = sub->add_option("--n-range", range_text, "inclusive range lo..hi");
    n->excludes(range);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string coeffs_text;
    std::string range_text;

    CLI::App app{"Cantor division polynomials of y^2 = f(x)", "divpoly"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto* psi = app.add_subcommand("psi", "division polynomial psi_n with b(n), dim, d(n), c(n)");
    add_common(psi, cfg, coeffs_text);
    add_n(psi, cfg, range_text);
    psi->add_option("--method", cfg.method, "P_j algorithm")->check(CLI::IsMember({"closed", "newton", "rj"}));

    auto* pj = app.add_subcommand("pj", "table of P_0..P_J");
    add_common(pj, cfg, coeffs_text);
    pj->add_option("--max-j", cfg.max_j, "largest j");
    pj->add_option("--method", cfg.method, "P_j algorithm, or all to compare the three")
        ->check(CLI::IsMember({"closed", "newton", "rj", "all"}));

    auto* verify = app.add_subcommand("verify", "check every exact identity over a range of n");
    add_common(verify, cfg, coeffs_text);
    add_n(verify, cfg, range_text);
    verify->add_option("--method", cfg.method, "P_j algorithm")->check(CLI::IsMember({"closed", "newton", "rj"}));
    verify->add_option("--max-j", cfg.max_j, "check P_j identities at least up to this j");
    verify->add_option("--prime-bound", cfg.prime_bound, "test p not dividing b(n) for primes up to this bound");
    verify->add_option("--dcv-l", cfg.dcv_l, "Catalan Hankel check: l range")->check(CLI::NonNegativeNumber);
    verify->add_option("--dcv-m", cfg.dcv_m, "Catalan Hankel check: m range")->check(CLI::NonNegativeNumber);

    auto* converge = app.add_subcommand("converge", "(1/n^2) log |.| at a place against its limit");
    add_common(converge, cfg, coeffs_text);
    add_n(converge, cfg, range_text);
    converge->add_option("--place", cfg.place, "arch or p:<prime>");
    converge->add_option("--root", cfg.root, "rational root alpha of f: use psi_n(alpha)^2 instead of Res(f, psi_n^2)");

    auto* crosscheck = app.add_subcommand("crosscheck", "genus 1: compare with classical division polynomials");
    add_common(crosscheck, cfg, coeffs_text);
    add_n(crosscheck, cfg, range_text);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!range_text.empty()) std::tie(cfg.n_lo, cfg.n_hi) = parse_range(range_text);
        if (cfg.format == "csv" && cfg.command != "converge") throw UsageError("--format csv is only available for converge");
        if (cfg.random) {
            cfg.coeffs = random_coeffs(cfg.genus, cfg.seed);
        } else if (coeffs_text.empty()) {
            throw UsageError("give --coeffs a_1,...,a_{2g+1} or --random");
        } else {
            for (const auto& q : parse_rat_list(coeffs_text)) cfg.coeffs.push_back(to_string(q));
        }
        if (!cfg.n_cap) cfg.n_cap = default_n_cap(cfg.genus);

        std::vector<BigRat> a;
        for (const auto& s : cfg.coeffs) a.push_back(parse_rat(s));
        const CurveSpec curve(cfg.genus, a);

        Output result;
        if (cfg.command == "psi") {
            result = cmd_psi(cfg, curve);
        } else if (cfg.command == "pj") {
            result = cmd_pj(cfg, curve);
        } else if (cfg.command == "verify") {
            result = cmd_verify(cfg, curve);
        } else if (cfg.command == "converge") {
            result = cmd_converge(cfg, curve);
        } else {
            result = cmd_crosscheck(cfg, curve);
        }
        emit(cfg, curve, result, out, err);
        return result.exit;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return exit_usage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_identity;
    }
}

} // namespace divpoly::cli
