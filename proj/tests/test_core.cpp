#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "unitrail/core.hpp"

using namespace unitrail;
using unitrail::testing::T;

TEST_CASE("parse_trail numbers characters by first appearance") {
    const auto parsed = parse_trail("abab", ParseMode::Chars);
    CHECK(parsed.trail == Trail{0, 1, 0, 1});
    REQUIRE(parsed.alphabet.size() == 2);
    CHECK(parsed.alphabet.find("a") == Symbol{0});
    CHECK(parsed.alphabet.find("b") == Symbol{1});
}

TEST_CASE("parse_trail accepts empty input with an empty alphabet") {
    const auto parsed = parse_trail("", ParseMode::Chars);
    CHECK(parsed.trail.empty());
    CHECK(parsed.alphabet.size() == 0);
}

TEST_CASE("parse_trail splits tokens on whitespace") {
    const auto parsed = parse_trail("0 10 0", ParseMode::Tokens);
    CHECK(parsed.trail == Trail{0, 1, 0});
    CHECK(parsed.alphabet.name(0) == "0");
    CHECK(parsed.alphabet.name(1) == "10");

    CHECK(parse_trail("  x\ty \n x ", ParseMode::Tokens).trail == Trail{0, 1, 0});
}

TEST_CASE("parse_trail treats code points as symbols in chars mode") {
    const auto parsed = parse_trail("\xCE\xB1\xCE\xB2\xCE\xB1", ParseMode::Chars);  // αβα
    CHECK(parsed.trail == Trail{0, 1, 0});
    CHECK(parsed.alphabet.name(1) == "\xCE\xB2");
    CHECK_THROWS_AS(parse_trail("\xCE", ParseMode::Chars), ParseError);
    CHECK_THROWS_AS(parse_trail("\xFF", ParseMode::Chars), ParseError);
}

TEST_CASE("parse_trail under a fixed alphabet") {
    const auto fixed = canonical_alphabet(2, ParseMode::Chars);
    CHECK(parse_trail("1001", ParseMode::Chars, &fixed).trail == Trail{1, 0, 0, 1});
    CHECK(parse_trail("1001", ParseMode::Chars, &fixed).alphabet == fixed);
    CHECK_THROWS_AS(parse_trail("012", ParseMode::Chars, &fixed), ParseError);

    const auto tokens = canonical_alphabet(12, ParseMode::Tokens);
    CHECK(parse_trail("11 0 11", ParseMode::Tokens, &tokens).trail == Trail{11, 0, 11});
    CHECK_THROWS_AS(parse_trail("12", ParseMode::Tokens, &tokens), ParseError);
}

TEST_CASE("alphabet invariants") {
    CHECK_THROWS_AS(Alphabet(0), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::named({"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(Alphabet::named({}), std::invalid_argument);
    CHECK_THROWS_AS(canonical_alphabet(63, ParseMode::Chars), std::invalid_argument);
    CHECK(canonical_alphabet(63, ParseMode::Tokens).name(62) == "62");
    CHECK(canonical_alphabet(12, ParseMode::Chars).name(11) == "b");

    Alphabet unnamed(3);
    CHECK(unnamed.name(2) == "2");
    CHECK_THROWS_AS(unnamed.name(3), std::out_of_range);
    CHECK_THROWS_AS(unnamed.intern("q"), std::logic_error);

    Alphabet inferred;
    CHECK_THROWS_AS(inferred.intern(""), ParseError);
}

TEST_CASE("format_trail renders through the alphabet") {
    const auto parsed = parse_trail("x yy x", ParseMode::Tokens);
    CHECK(format_trail(parsed.trail, parsed.alphabet, ParseMode::Tokens) == "x yy x");
    CHECK(format_trail(parsed.trail, parsed.alphabet, ParseMode::Chars) == "xyyx");
    CHECK(format_trail(Trail{}, parsed.alphabet, ParseMode::Tokens).empty());
}

TEST_CASE("induced_graph counts consecutive pairs") {
    const auto g = induced_graph(T("0010"), 2);
    CHECK(g.arc_count() == 3);
    CHECK(g.multiplicity(0, 0) == 1);
    CHECK(g.multiplicity(0, 1) == 1);
    CHECK(g.multiplicity(1, 0) == 1);
    CHECK(g.multiplicity(1, 1) == 0);

    CHECK(induced_graph(T("0"), 1).arc_count() == 0);

    const auto parallel = induced_graph(T("01010"), 2);
    CHECK(parallel.multiplicity(0, 1) == 2);
    CHECK(parallel.multiplicity(1, 0) == 2);
    CHECK(parallel.arcs().size() == 2);

    CHECK_THROWS_AS(induced_graph(Trail{}, 2), std::invalid_argument);
    CHECK_THROWS_AS(induced_graph(T("02"), 2), std::out_of_range);
}

TEST_CASE("reverse_trail") {
    CHECK(reverse_trail(Trail{}).empty());
    CHECK(reverse_trail(T("0010")) == T("0100"));
}

TEST_CASE("trail model properties on random trails") {
    std::mt19937 rng(20261016);
    for (int iter = 0; iter < 500; ++iter) {
        const std::size_t m = 1 + rng() % 5;
        const std::size_t n = 1 + rng() % 30;
        std::vector<Symbol> symbols(n);
        for (auto& s : symbols) s = static_cast<Symbol>(rng() % m);
        const Trail t(symbols);

        const auto r = reverse_trail(t);
        CHECK(reverse_trail(r) == t);
        CHECK(r.size() == t.size());

        const auto g = induced_graph(t, m);
        CHECK(g.arc_count() == n - 1);
        CHECK(induced_graph(r, m) == g.reversed());

        // Walking the graph along t uses every arc exactly once.
        std::map<Arc, std::size_t> remaining = g.arcs();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            auto& count = remaining[Arc{t[i], t[i + 1]}];
            REQUIRE(count > 0);
            --count;
        }
        for (const auto& [arc, count] : remaining) CHECK(count == 0);
    }
}

TEST_CASE("for_each_word enumerates by length then lexicographically") {
    std::vector<std::string> seen;
    for_each_word(2, 0, 2, [&](std::span<const Symbol> w) { seen.push_back(testing::str(w)); });
    CHECK(seen == std::vector<std::string>{"", "0", "1", "00", "01", "10", "11"});

    std::size_t count = 0;
    for_each_word(3, 1, 9, [&](std::span<const Symbol>) { ++count; });
    CHECK(count == 29523);

    const Symbol sub[] = {2, 5};
    seen.clear();
    for_each_word(std::span<const Symbol>(sub), 2, 2, [&](std::span<const Symbol> w) {
        seen.push_back(std::to_string(w[0]) + std::to_string(w[1]));
        return seen.size() < 3;
    });
    CHECK(seen == std::vector<std::string>{"22", "25", "52"});

    count = 0;
    for_each_word(std::span<const Symbol>(), 0, 3, [&](std::span<const Symbol>) { ++count; });
    CHECK(count == 1);
}
