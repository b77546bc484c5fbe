#pragma once

#include <sbreak/automorphism.hpp>
#include <sbreak/oracle.hpp>
#include <sbreak/program.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sbreak::cli {

/// Process exit codes. Stable contract.
enum ExitCode : int {
    exit_ok           = 0,
    exit_usage        = 1,
    exit_parse        = 2,
    exit_unsupported  = 3,
    exit_budget       = 4,
    exit_verification = 5,
};

struct PhaseTimes {
    double parse_ms  = 0;
    double graph_ms  = 0;
    double detect_ms = 0;
    double break_ms  = 0;
    double verify_ms = 0;
};

/// Summary of one pipeline run; printed to the error stream by `break`.
struct RunReport {
    std::string instance;
    std::size_t atoms_before = 0;
    std::size_t atoms_after  = 0;
    std::size_t rules_before = 0;
    std::size_t rules_after  = 0;
    std::size_t generators   = 0;
    std::size_t skipped      = 0;
    bool        limit_hit    = false;
    bool        timed_out    = false;
    std::size_t vertices     = 0;
    std::size_t edges        = 0;
    PhaseTimes  times;
    /// Only set when verification was requested.
    std::optional<bool> verified;

    std::string to_string() const;
};

struct Check {
    std::string name;
    /// Empty means skipped (not applicable).
    std::optional<bool> passed;
    std::string detail;
};

struct VerifyReport {
    std::size_t        generators    = 0;
    std::size_t        used          = 0;
    std::size_t        models_before = 0;
    std::size_t        models_after  = 0;
    std::size_t        orbits        = 0;
    std::vector<Check> checks;

    bool passed() const;
    void print(std::ostream& out) const;
};

/// Generators usable for constraint chains (transpositions only).
std::vector<Permutation> chainable(const GeneratorSet& gens);

/// Detection, breaking, and the brute-force comparison of models before and
/// after. Throws BudgetExceeded if the oracle cannot handle the program.
VerifyReport verify_program(const Program& program, const SearchOptions& search, const OracleOptions& oracle);

/// Entry point of the command-line tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace sbreak::cli
