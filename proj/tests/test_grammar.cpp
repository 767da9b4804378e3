#include <doctest.h>

#include <sstream>

#include "brute.hpp"
#include "unitrail/grammar.hpp"
#include "unitrail/transposition.hpp"

using namespace unitrail;
using unitrail::testing::T;

TEST_CASE("state counts") {
    CHECK(build_grammar_nfa(2, GrammarMode::Strict).state_count() == 18);
    CHECK(build_grammar_nfa(1, GrammarMode::Strict).state_count() == 6);
    CHECK(build_grammar_nfa(3, GrammarMode::Strict).state_count() == 44);
    CHECK(build_grammar_nfa(3, GrammarMode::Amended).state_count() == 44);
    CHECK_THROWS_AS(build_grammar_nfa(0, GrammarMode::Strict), std::invalid_argument);
}

TEST_CASE("productions are encoded exactly") {
    const GrammarNfa g(2, GrammarMode::Strict);
    using Ids = std::vector<GrammarNfa::StateId>;
    auto targets = [&](GrammarNfa::StateId s, Symbol d) {
        return Ids(g.targets(s, d).begin(), g.targets(s, d).end());
    };
    const auto sorted = [](Ids v) {
        std::sort(v.begin(), v.end());
        return v;
    };

    CHECK(targets(g.start(), 1) == sorted({g.start(), g.a_state(1)}));
    CHECK(targets(g.a_state(0), 1) == Ids{g.b_state(0, 1, 1)});
    CHECK(targets(g.a_state(0), 0) == sorted({g.b_state(0, 0, 0), g.c_state(0, 0)}));
    CHECK(targets(g.b_state(0, 1, 1), 0) ==
          sorted({g.b_state(0, 1, 1), g.b_state(0, 1, 0), g.c_state(1, 1)}));
    CHECK(targets(g.b_state(0, 1, 1), 1) == Ids{g.b_state(0, 1, 1)});
    // C_cb -> d D_b only for d != c; -> b R only for b != c.
    CHECK(targets(g.c_state(1, 0), 1).empty());
    CHECK(targets(g.c_state(1, 0), 0) == sorted({g.d_state(0), g.accepting()}));
    CHECK(targets(g.c_state(1, 1), 0) == Ids{g.d_state(1)});
    CHECK(targets(g.d_state(1), 1) == sorted({g.d_state(1), g.accepting()}));
    CHECK(targets(g.accepting(), 0) == Ids{g.accepting()});

    const GrammarNfa amended(2, GrammarMode::Amended);
    CHECK(amended.targets(amended.a_state(0), 1).size() == 2);
    CHECK(amended.transition_count() > g.transition_count());
}

TEST_CASE("state names") {
    const GrammarNfa g(3, GrammarMode::Strict);
    CHECK(g.state_name(g.start()) == "S");
    CHECK(g.state_name(g.accepting()) == "R");
    CHECK(g.state_name(g.a_state(2)) == "A_2");
    CHECK(g.state_name(g.d_state(1)) == "D_1");
    CHECK(g.state_name(g.c_state(1, 2)) == "C_1_2");
    CHECK(g.state_name(g.b_state(2, 0, 1)) == "B_2_0_1");
    CHECK_THROWS_AS(g.state_name(44), std::out_of_range);
}

TEST_CASE("nfa_accepts examples") {
    const auto strict2 = build_grammar_nfa(2, GrammarMode::Strict);
    CHECK(nfa_accepts(strict2, T("0010")));
    CHECK_FALSE(nfa_accepts(strict2, Trail{}));

    const auto strict3 = build_grammar_nfa(3, GrammarMode::Strict);
    const auto amended3 = build_grammar_nfa(3, GrammarMode::Amended);
    CHECK_FALSE(nfa_accepts(strict3, T("01020")));
    CHECK(nfa_accepts(amended3, T("01020")));
    CHECK_THROWS_AS(nfa_accepts(strict2, T("012")), std::out_of_range);
}

TEST_CASE("strict is sound, amended is exact, over short words") {
    for (std::size_t m = 1; m <= 3; ++m) {
        const GrammarNfa strict(m, GrammarMode::Strict);
        const GrammarNfa amended(m, GrammarMode::Amended);
        for_each_word(m, 0, 9, [&](std::span<const Symbol> t) {
            const bool pattern = testing::pattern_by_definition(t);
            if (strict.accepts(t)) REQUIRE(pattern);
            REQUIRE(amended.accepts(t) == pattern);
            REQUIRE(strict.simulate(t).size() <= strict.state_count());
        });
    }
}

TEST_CASE("transition export") {
    const GrammarNfa g(1, GrammarMode::Strict);
    std::ostringstream out;
    g.write_transitions(out);
    CHECK(out.str() ==
          "S\t0\tS\n"
          "S\t0\tA_0\n"
          "R\t0\tR\n"
          "A_0\t0\tC_0_0\n"
          "A_0\t0\tB_0_0_0\n"
          "D_0\t0\tR\n"
          "D_0\t0\tD_0\n"
          "B_0_0_0\t0\tC_0_0\n"
          "B_0_0_0\t0\tB_0_0_0\n");
}
