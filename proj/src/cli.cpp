#include "unitrail/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <istream>
#include <ostream>
#include <sstream>

#include "unitrail/automaton.hpp"
#include "unitrail/mfw.hpp"
#include "unitrail/oracle.hpp"
#include "unitrail/transposition.hpp"

namespace unitrail::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxCharsAlphabet = 62;

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n\v\f";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

// Words produced by the enumeration commands are printed with the canonical
// single-character names when they fit, decimal tokens otherwise.
struct WordPrinter {
    explicit WordPrinter(std::size_t alphabet_size)
        : mode(alphabet_size <= kMaxCharsAlphabet ? ParseMode::Chars : ParseMode::Tokens),
          alphabet(canonical_alphabet(alphabet_size, mode)) {}

    std::string operator()(std::span<const Symbol> w) const {
        return format_trail(w, alphabet, mode);
    }

    ParseMode mode;
    Alphabet alphabet;
};

std::vector<std::string> split_tabs(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        out.emplace_back(line.substr(start, tab - start));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
    }
    return out;
}

std::size_t parse_count(const std::string& text) {
    std::size_t pos = 0;
    const auto value = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument("bad number '" + text + "'");
    return static_cast<std::size_t>(value);
}

template <class Duration>
double millis(Duration d) {
    return std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace

CheckReport make_report(std::size_t index, const ParsedTrail& parsed, ParseMode mode,
                        bool explain) {
    const Trail& t = parsed.trail;
    const auto verdict = unitrail::run(t, parsed.alphabet.size());

    CheckReport report;
    report.index = index;
    report.unique = verdict.accepted;
    report.first_rejection = verdict.first_rejection;
    if (!explain || verdict.accepted) return report;

    const auto site = find_proper_site(t);
    if (!site) throw std::logic_error("rejected trail without a proper transposition");
    const auto seg = segments(t, *site);
    const auto fmt = [&](std::span<const Symbol> w) {
        return format_trail(w, parsed.alphabet, mode);
    };
    const Symbol a[] = {seg.a};
    const Symbol b[] = {seg.b};

    Witness w;
    w.one_anchor = seg.one_anchor;
    w.u = fmt(seg.u);
    w.a = fmt(a);
    w.x = fmt(seg.x);
    if (!seg.one_anchor) {
        w.b = fmt(b);
        w.z = fmt(seg.z);
    }
    w.y = fmt(seg.y);
    w.v = fmt(seg.v);
    w.alternative = fmt(apply_transposition(t, *site));
    report.witness = std::move(w);
    return report;
}

std::string format_report_plain(const CheckReport& r) {
    std::string line = std::to_string(r.index);
    line += r.unique ? "\tUNIQUE\t" : "\tNONUNIQUE\t";
    line += r.first_rejection ? std::to_string(*r.first_rejection) : "-";
    if (r.witness) {
        const auto& w = *r.witness;
        line += "\tu=" + w.u + "\ta=" + w.a + "\tx=" + w.x;
        if (!w.one_anchor) line += "\tb=" + w.b + "\tz=" + w.z;
        line += "\ty=" + w.y + "\tv=" + w.v + "\talt=" + w.alternative;
    }
    return line;
}

std::string format_report_json(const CheckReport& r) {
    json j;
    j["index"] = r.index;
    j["verdict"] = r.unique ? "UNIQUE" : "NONUNIQUE";
    j["first_rejection"] = r.first_rejection ? json(*r.first_rejection) : json(nullptr);
    if (r.witness) {
        const auto& w = *r.witness;
        json wj;
        wj["form"] = w.one_anchor ? "one_anchor" : "two_anchors";
        wj["u"] = w.u;
        wj["a"] = w.a;
        wj["x"] = w.x;
        if (!w.one_anchor) {
            wj["b"] = w.b;
            wj["z"] = w.z;
        }
        wj["y"] = w.y;
        wj["v"] = w.v;
        wj["alternative"] = w.alternative;
        j["witness"] = std::move(wj);
    }
    return j.dump();
}

CheckReport parse_report_plain(std::string_view line) {
    const auto fields = split_tabs(line);
    if (fields.size() < 3) throw std::invalid_argument("report line has too few fields");

    CheckReport r;
    r.index = parse_count(fields[0]);
    if (fields[1] == "UNIQUE") {
        r.unique = true;
    } else if (fields[1] == "NONUNIQUE") {
        r.unique = false;
    } else {
        throw std::invalid_argument("unknown verdict '" + fields[1] + "'");
    }
    if (fields[2] != "-") r.first_rejection = parse_count(fields[2]);
    if (fields.size() == 3) return r;

    Witness w;
    std::vector<std::string> keys;
    for (std::size_t i = 3; i < fields.size(); ++i) {
        const auto eq = fields[i].find('=');
        if (eq == std::string::npos) throw std::invalid_argument("witness field without '='");
        const auto key = fields[i].substr(0, eq);
        const auto value = fields[i].substr(eq + 1);
        keys.push_back(key);
        if (key == "u") w.u = value;
        else if (key == "a") w.a = value;
        else if (key == "x") w.x = value;
        else if (key == "b") w.b = value;
        else if (key == "z") w.z = value;
        else if (key == "y") w.y = value;
        else if (key == "v") w.v = value;
        else if (key == "alt") w.alternative = value;
        else throw std::invalid_argument("unknown witness field '" + key + "'");
    }
    w.one_anchor = std::find(keys.begin(), keys.end(), "b") == keys.end();
    r.witness = std::move(w);
    return r;
}

CheckReport parse_report_json(std::string_view line) {
    const auto j = json::parse(line);
    CheckReport r;
    r.index = j.at("index").get<std::size_t>();
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "UNIQUE" && verdict != "NONUNIQUE") {
        throw std::invalid_argument("unknown verdict '" + verdict + "'");
    }
    r.unique = verdict == "UNIQUE";
    if (!j.at("first_rejection").is_null()) {
        r.first_rejection = j.at("first_rejection").get<std::size_t>();
    }
    if (j.contains("witness")) {
        const auto& wj = j.at("witness");
        Witness w;
        w.one_anchor = wj.at("form").get<std::string>() == "one_anchor";
        w.u = wj.at("u").get<std::string>();
        w.a = wj.at("a").get<std::string>();
        w.x = wj.at("x").get<std::string>();
        if (!w.one_anchor) {
            w.b = wj.at("b").get<std::string>();
            w.z = wj.at("z").get<std::string>();
        }
        w.y = wj.at("y").get<std::string>();
        w.v = wj.at("v").get<std::string>();
        w.alternative = wj.at("alternative").get<std::string>();
        r.witness = std::move(w);
    }
    return r;
}

int cmd_check(const CheckOptions& options, std::istream& in, std::ostream& out,
              std::ostream& err) {
    const auto mode = options.tokens ? ParseMode::Tokens : ParseMode::Chars;
    std::optional<Alphabet> fixed;
    if (options.alphabet_size) {
        try {
            fixed = canonical_alphabet(*options.alphabet_size, mode);
        } catch (const std::invalid_argument& e) {
            err << "check: " << e.what() << '\n';
            return kExitUsage;
        }
    }

    std::string line;
    for (std::size_t index = 0; std::getline(in, line); ++index) {
        std::string_view text = line;
        if (mode == ParseMode::Chars) text = trim(text);

        ParsedTrail parsed;
        try {
            parsed = parse_trail(text, mode, fixed ? &*fixed : nullptr);
        } catch (const ParseError& e) {
            err << "line " << index + 1 << ": " << e.what() << '\n';
            return kExitUsage;
        }

        const auto report = make_report(index, parsed, mode, options.explain);
        out << (options.json ? format_report_json(report) : format_report_plain(report)) << '\n';
    }
    return kExitOk;
}

int cmd_trails(const TrailsOptions& options, std::ostream& out, std::ostream& err) {
    const auto mode = options.tokens ? ParseMode::Tokens : ParseMode::Chars;
    ParsedTrail parsed;
    try {
        parsed = parse_trail(mode == ParseMode::Chars ? trim(options.sequence)
                                                      : std::string_view(options.sequence),
                             mode);
    } catch (const ParseError& e) {
        err << "trails: " << e.what() << '\n';
        return kExitUsage;
    }
    if (parsed.trail.empty()) {
        err << "trails: empty sequence\n";
        return kExitUsage;
    }

    const auto graph = induced_graph(parsed.trail, parsed.alphabet.size());
    for (const auto& t : enumerate_trails(graph, parsed.trail.front(), options.limit)) {
        out << format_trail(t, parsed.alphabet, mode) << '\n';
    }
    return kExitOk;
}

MfwDifference mfw_difference(const std::vector<Trail>& constructive,
                             const std::vector<Trail>& brute) {
    MfwDifference diff;
    std::set_difference(constructive.begin(), constructive.end(), brute.begin(), brute.end(),
                        std::back_inserter(diff.constructive_only));
    std::set_difference(brute.begin(), brute.end(), constructive.begin(), constructive.end(),
                        std::back_inserter(diff.brute_only));
    return diff;
}

int cmd_mfw(const MfwOptions& options, std::ostream& out, std::ostream& err) {
    if (options.alphabet_size == 0 || options.alphabet_size > kMaxCharsAlphabet) {
        err << "mfw: alphabet size must be between 1 and " << kMaxCharsAlphabet << '\n';
        return kExitUsage;
    }
    const WordPrinter print(options.alphabet_size);
    const auto emit = [&](const std::vector<Trail>& words) {
        for (const auto& w : words) out << print(w) << '\n';
    };

    switch (options.method) {
        case MfwMethod::Constructive:
            emit(constructive_mfw(options.alphabet_size, options.max_len));
            return kExitOk;
        case MfwMethod::Brute:
            emit(brute_mfw(options.alphabet_size, options.max_len));
            return kExitOk;
        case MfwMethod::Both: break;
    }

    const auto constructive = constructive_mfw(options.alphabet_size, options.max_len);
    const auto brute = brute_mfw(options.alphabet_size, options.max_len);
    const auto diff = mfw_difference(constructive, brute);
    if (diff.empty()) {
        emit(constructive);
        return kExitOk;
    }
    for (const auto& w : diff.constructive_only) out << "constructive-only\t" << print(w) << '\n';
    for (const auto& w : diff.brute_only) out << "brute-only\t" << print(w) << '\n';
    err << "mfw: constructive and brute-force sets differ in "
        << diff.constructive_only.size() + diff.brute_only.size() << " words\n";
    return kExitDisagreement;
}

CrosscheckSummary run_crosscheck(const CrosscheckOptions& options) {
    const std::size_t m = options.alphabet_size;
    if (m == 0) throw std::invalid_argument("alphabet size must be at least 1");
    const GrammarNfa selected(m, options.grammar);
    const GrammarNfa strict(m, GrammarMode::Strict);
    const bool check_selected = options.grammar == GrammarMode::Amended;

    CrosscheckSummary s;
    const auto timed = [](std::chrono::nanoseconds& acc, auto&& fn) {
        const auto start = Clock::now();
        const bool value = fn();
        acc += Clock::now() - start;
        return value;
    };

    for_each_word(m, 1, options.max_len, [&](std::span<const Symbol> w) {
        ++s.strings;
        const bool automaton = timed(s.automaton_time, [&] { return accepts(w, m); });
        const bool oracle = timed(s.oracle_time, [&] { return is_unique_trail(w); });
        const bool scan =
            !timed(s.scan_time, [&] { return admits_proper_transposition(w); });
        const bool strict_unique = !timed(s.strict_time, [&] { return strict.accepts(w); });
        bool grammar = strict_unique;
        if (check_selected) {
            grammar = !timed(s.grammar_time, [&] { return selected.accepts(w); });
        }

        if (!oracle) ++s.non_unique;
        const bool agree = automaton == oracle && scan == oracle &&
                           (!check_selected || grammar == oracle);
        if (!agree) {
            if (s.disagreement_examples.size() < options.max_examples) {
                s.disagreement_examples.push_back({Trail(w), automaton, oracle, scan, grammar});
            }
            ++s.disagreements;
        }
        if (!strict_unique && oracle) {
            if (s.strict_violation_examples.size() < options.max_examples) {
                s.strict_violation_examples.emplace_back(w);
            }
            ++s.strict_violations;
        }
        if (strict_unique && !oracle) {
            if (s.strict_gap_examples.size() < options.max_examples) {
                s.strict_gap_examples.emplace_back(w);
            }
            ++s.strict_gaps;
        }
    });
    return s;
}

int cmd_crosscheck(const CrosscheckOptions& options, std::ostream& out, std::ostream& err) {
    if (options.alphabet_size == 0) {
        err << "crosscheck: alphabet size must be at least 1\n";
        return kExitUsage;
    }
    const auto s = run_crosscheck(options);
    const WordPrinter print(options.alphabet_size);
    const auto verdict = [](bool unique) { return unique ? "unique" : "non-unique"; };

    out << "alphabet size\t" << options.alphabet_size << '\n'
        << "max length\t" << options.max_len << '\n'
        << "grammar\t" << (options.grammar == GrammarMode::Amended ? "amended" : "strict")
        << '\n'
        << "strings checked\t" << s.strings << '\n'
        << "non-unique\t" << s.non_unique << '\n'
        << "disagreements\t" << s.disagreements << '\n';
    for (const auto& d : s.disagreement_examples) {
        out << "disagreement\t" << print(d.word) << "\tautomaton=" << verdict(d.automaton)
            << "\toracle=" << verdict(d.oracle) << "\tscan=" << verdict(d.scan)
            << "\tgrammar=" << verdict(d.grammar) << '\n';
    }
    out << "strict soundness violations\t" << s.strict_violations << '\n';
    for (const auto& w : s.strict_violation_examples) {
        out << "strict violation\t" << print(w) << '\n';
    }
    out << "strict completeness gaps\t" << s.strict_gaps << '\n';
    for (const auto& w : s.strict_gap_examples) out << "strict gap\t" << print(w) << '\n';

    // Timings vary run to run; keep them off stdout.
    err << "timing automaton " << millis(s.automaton_time) << " ms\n"
        << "timing oracle " << millis(s.oracle_time) << " ms\n"
        << "timing scan " << millis(s.scan_time) << " ms\n";
    if (options.grammar == GrammarMode::Amended) {
        err << "timing grammar(amended) " << millis(s.grammar_time) << " ms\n";
    }
    err << "timing grammar(strict) " << millis(s.strict_time) << " ms\n";

    return s.agreed() ? kExitOk : kExitDisagreement;
}

int cmd_grammar(std::size_t alphabet_size, GrammarMode mode, std::ostream& out) {
    GrammarNfa(alphabet_size, mode).write_transitions(out);
    return kExitOk;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Decide whether a vertex sequence is the unique Eulerian trail of its graph",
                 "unitrail"};
    app.require_subcommand(1);

    const std::map<std::string, GrammarMode> grammar_modes{{"strict", GrammarMode::Strict},
                                                           {"amended", GrammarMode::Amended}};

    CheckOptions check;
    std::string check_file;
    std::size_t check_m = 0;
    auto* check_cmd = app.add_subcommand("check", "Check one sequence per input line");
    check_cmd->add_option("file", check_file, "Input file (standard input when omitted)");
    check_cmd->add_flag("--tokens", check.tokens, "Whitespace-separated symbols");
    auto* check_m_opt = check_cmd->add_option("--alphabet-size", check_m,
                                              "Fix the alphabet to M canonical symbols")
                            ->check(CLI::PositiveNumber);
    check_cmd->add_flag("--explain", check.explain, "Attach a transposition witness");
    check_cmd->add_flag("--json", check.json, "One JSON object per line");

    TrailsOptions trails;
    std::size_t trails_limit = 0;
    auto* trails_cmd = app.add_subcommand("trails", "List Eulerian trails of a sequence's graph");
    trails_cmd->add_option("sequence", trails.sequence, "The sequence")->required();
    trails_cmd->add_flag("--tokens", trails.tokens, "Whitespace-separated symbols");
    auto* trails_limit_opt =
        trails_cmd->add_option("--limit", trails_limit, "Print at most N trails")
            ->check(CLI::PositiveNumber);

    MfwOptions mfw;
    auto* mfw_cmd = app.add_subcommand("mfw", "Minimal forbidden words up to a length");
    mfw_cmd->add_option("--alphabet-size", mfw.alphabet_size, "Alphabet size M")
        ->required()
        ->check(CLI::PositiveNumber);
    mfw_cmd->add_option("--max-len", mfw.max_len, "Maximum word length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    mfw_cmd->add_option("--method", mfw.method, "constructive, brute or both")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, MfwMethod>{{"constructive", MfwMethod::Constructive},
                                             {"brute", MfwMethod::Brute},
                                             {"both", MfwMethod::Both}}));

    CrosscheckOptions cross;
    auto* cross_cmd = app.add_subcommand("crosscheck", "Exhaustively compare all classifiers");
    cross_cmd->add_option("--alphabet-size", cross.alphabet_size, "Alphabet size M")
        ->required()
        ->check(CLI::PositiveNumber);
    cross_cmd->add_option("--max-len", cross.max_len, "Maximum word length")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cross_cmd->add_option("--grammar", cross.grammar, "strict or amended")
        ->transform(CLI::CheckedTransformer(grammar_modes));
    cross_cmd->add_option("--examples", cross.max_examples, "Examples listed per category");

    std::size_t grammar_m = 0;
    GrammarMode grammar_mode = GrammarMode::Strict;
    auto* grammar_cmd = app.add_subcommand("grammar", "Print the grammar automaton's transitions");
    grammar_cmd->add_option("--alphabet-size", grammar_m, "Alphabet size M")
        ->required()
        ->check(CLI::PositiveNumber);
    grammar_cmd->add_option("--mode", grammar_mode, "strict or amended")
        ->transform(CLI::CheckedTransformer(grammar_modes));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*check_cmd) {
        if (*check_m_opt) check.alphabet_size = check_m;
        if (check_file.empty()) return cmd_check(check, in, out, err);
        std::ifstream file(check_file);
        if (!file) {
            err << "check: cannot open '" << check_file << "'\n";
            return kExitUsage;
        }
        return cmd_check(check, file, out, err);
    }
    if (*trails_cmd) {
        if (*trails_limit_opt) trails.limit = trails_limit;
        return cmd_trails(trails, out, err);
    }
    if (*mfw_cmd) return cmd_mfw(mfw, out, err);
    if (*cross_cmd) return cmd_crosscheck(cross, out, err);
    return cmd_grammar(grammar_m, grammar_mode, out);
}

}  // namespace unitrail::cli
