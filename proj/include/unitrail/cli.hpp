#pragma once

// Command implementations behind the `unitrail` executable. Each command
// reads from / writes to the streams it is given and returns the process
// exit code, so tests can drive them without spawning processes.

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unitrail/core.hpp"
#include "unitrail/grammar.hpp"

namespace unitrail::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitUsage = 64;

// check ---------------------------------------------------------------------

struct Witness {
    bool one_anchor = false;
    std::string u, a, x, b, z, y, v;
    std::string alternative;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
    std::size_t index = 0;
    bool unique = true;
    std::optional<std::size_t> first_rejection;
    std::optional<Witness> witness;

    friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// Builds the report for one parsed line; `explain` attaches a witness to
/// non-unique trails.
CheckReport make_report(std::size_t index, const ParsedTrail& parsed, ParseMode mode,
                        bool explain);

/// index<TAB>UNIQUE|NONUNIQUE<TAB>prefix-length-or-"-", followed for
/// witnesses by u=, a=, x=, [b=, z=,] y=, v= and alt= fields, tab separated.
std::string format_report_plain(const CheckReport& report);
std::string format_report_json(const CheckReport& report);
CheckReport parse_report_plain(std::string_view line);
CheckReport parse_report_json(std::string_view line);

struct CheckOptions {
    bool tokens = false;
    std::optional<std::size_t> alphabet_size;
    bool explain = false;
    bool json = false;
};

int cmd_check(const CheckOptions& options, std::istream& in, std::ostream& out,
              std::ostream& err);

// trails --------------------------------------------------------------------

struct TrailsOptions {
    std::string sequence;
    bool tokens = false;
    std::optional<std::size_t> limit;
};

int cmd_trails(const TrailsOptions& options, std::ostream& out, std::ostream& err);

// mfw -----------------------------------------------------------------------

enum class MfwMethod { Constructive, Brute, Both };

struct MfwOptions {
    std::size_t alphabet_size = 2;
    std::size_t max_len = 0;
    MfwMethod method = MfwMethod::Both;
};

struct MfwDifference {
    std::vector<Trail> constructive_only;
    std::vector<Trail> brute_only;
    bool empty() const { return constructive_only.empty() && brute_only.empty(); }
};

/// Both inputs must be sorted.
MfwDifference mfw_difference(const std::vector<Trail>& constructive,
                             const std::vector<Trail>& brute);

int cmd_mfw(const MfwOptions& options, std::ostream& out, std::ostream& err);

// crosscheck ----------------------------------------------------------------

struct CrosscheckOptions {
    std::size_t alphabet_size = 2;
    std::size_t max_len = 0;
    GrammarMode grammar = GrammarMode::Amended;
    /// Cap on listed example strings per category.
    std::size_t max_examples = 10;
};

/// One string where the classifiers disagree. Fields are true for "unique".
struct Disagreement {
    Trail word;
    bool automaton, oracle, scan, grammar;
};

struct CrosscheckSummary {
    std::size_t strings = 0;
    std::size_t non_unique = 0;
    std::size_t disagreements = 0;
    std::size_t strict_violations = 0;
    std::size_t strict_gaps = 0;
    std::vector<Disagreement> disagreement_examples;
    std::vector<Trail> strict_violation_examples;
    std::vector<Trail> strict_gap_examples;

    std::chrono::nanoseconds automaton_time{0}, oracle_time{0}, scan_time{0},
        grammar_time{0}, strict_time{0};

    bool agreed() const { return disagreements == 0 && strict_violations == 0; }
};

/// Classifies every word of length 1..max_len with the automaton, the trail
/// enumeration, the pattern scan and the grammar automaton selected by
/// `grammar`. In amended mode the grammar must agree exactly; in strict mode
/// it is only checked for soundness. The strict grammar's soundness is always
/// checked and its completeness gaps are always collected.
CrosscheckSummary run_crosscheck(const CrosscheckOptions& options);

int cmd_crosscheck(const CrosscheckOptions& options, std::ostream& out, std::ostream& err);

// grammar -------------------------------------------------------------------

int cmd_grammar(std::size_t alphabet_size, GrammarMode mode, std::ostream& out);

/// Parses `argv` and dispatches to a command. Usage errors return kExitUsage.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace unitrail::cli
