#pragma once

// Nondeterministic automaton for the right-linear grammar generating the
// non-unique trails:
//
//   S       -> d S | a A_a
//   A_a     -> c B_acc | a C_aa
//   B_acb   -> d B_acb | d B_acd | a C_cb
//   C_cb    -> d D_b (d != c) | b R (b != c)
//   D_b     -> d D_b | b R
//   R       -> d R | <empty>
//
// Each nonterminal is a state; R is the only accepting one. The grammar as
// written never lets the anchor itself serve as b when something else sits
// between the two anchors (0 1 0 2 0 is not generated). Amended mode adds
// A_a -> c B_aca to seed b with the anchor.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "unitrail/core.hpp"

namespace unitrail {

enum class GrammarMode { Strict, Amended };

class GrammarNfa {
public:
    using StateId = std::uint32_t;

    /// Throws std::invalid_argument for an empty alphabet.
    GrammarNfa(std::size_t alphabet_size, GrammarMode mode);

    std::size_t alphabet_size() const noexcept { return m_; }
    GrammarMode mode() const noexcept { return mode_; }
    /// 2 + 2m + m^2 + m^3.
    std::size_t state_count() const noexcept { return state_count_; }
    std::size_t transition_count() const noexcept { return transition_count_; }

    StateId start() const noexcept { return 0; }
    StateId accepting() const noexcept { return 1; }
    StateId a_state(Symbol a) const;
    StateId b_state(Symbol a, Symbol c, Symbol b) const;
    StateId c_state(Symbol c, Symbol b) const;
    StateId d_state(Symbol b) const;

    /// Sorted, duplicate-free successor set.
    std::span<const StateId> targets(StateId from, Symbol on) const;

    /// "S", "A_0", "B_0_1_1", "C_1_0", "D_2", "R".
    std::string state_name(StateId state) const;

    /// Live state set after reading `trail` from {S}, as sorted ids.
    std::vector<StateId> simulate(std::span<const Symbol> trail) const;
    bool accepts(std::span<const Symbol> trail) const;

    /// One "from<TAB>symbol<TAB>to" line per transition, ordered by state id,
    /// symbol, then target.
    void write_transitions(std::ostream& out) const;

private:
    void add(StateId from, Symbol on, StateId to);

    std::size_t m_;
    GrammarMode mode_;
    std::size_t state_count_;
    std::size_t transition_count_ = 0;
    std::vector<std::vector<StateId>> delta_;  // indexed by from * m + symbol
};

inline GrammarNfa build_grammar_nfa(std::size_t alphabet_size, GrammarMode mode) {
    return GrammarNfa(alphabet_size, mode);
}

inline bool nfa_accepts(const GrammarNfa& nfa, std::span<const Symbol> trail) {
    return nfa.accepts(trail);
}

}  // namespace unitrail
