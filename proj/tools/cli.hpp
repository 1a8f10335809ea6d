#ifndef DIVPOLY_TOOLS_CLI_HPP
#define DIVPOLY_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace divpoly::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_identity = 2, exit_budget = 3 };

/// Everything a run depends on. Filled from the command line, then resolved
/// (random coefficients drawn, defaults for n-cap and max-j applied) before
/// any computation and echoed verbatim into the manifest.
struct RunConfig {
    std::string command;
    int genus = 0;
    std::vector<std::string> coeffs;  // a_1 .. a_{2g+1}, exact "p/q" text
    bool random = false;
    std::uint64_t seed = 1;
    std::optional<long> n;
    std::optional<long> n_lo, n_hi;  // --n-range lo..hi
    std::string place = "arch";
    std::optional<std::string> root;
    std::string method = "closed";
    std::optional<long> max_j;
    std::string format = "text";
    std::string out;
    unsigned jobs = 1;
    std::optional<long> n_cap;
    unsigned long prime_bound = 50;
    long dcv_l = 8;
    long dcv_m = 12;
};

/// Runs one command line (without the program name). Results go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace divpoly::cli

#endif // DIVPOLY_TOOLS_CLI_HPP
