#pragma once

// Streaming recognizer for sequences that are the unique Eulerian trail of
// their own induced multigraph (with the start vertex fixed).
//
// The state is (last vertex, latest-follower table, color table). A vertex
// turns BLACK once it lies on a circuit whose closing occurrence is followed
// by something other than the opening occurrence's latest follower; reading a
// BLACK vertex again kills the run. The all-BLACK configuration is absorbing
// and is the only rejecting one, so a rejection is visible at the exact prefix
// where it first becomes unavoidable.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "unitrail/core.hpp"

namespace unitrail {

enum class Color : unsigned char { White, Black };

class AutomatonState {
public:
    /// Follower slot value meaning "no follower recorded yet".
    static constexpr Symbol kNone = static_cast<Symbol>(-1);

    /// Initial state over `alphabet_size` vertices. Throws on size zero.
    explicit AutomatonState(std::size_t alphabet_size);

    std::size_t alphabet_size() const noexcept { return colors_.size(); }
    /// Id of the start-of-sequence sentinel; equals alphabet_size().
    Symbol sentinel() const noexcept { return static_cast<Symbol>(colors_.size()); }

    /// Last symbol read, or sentinel() before any input.
    Symbol last() const noexcept { return last_; }
    /// Latest follower of `v` (a vertex or the sentinel), or kNone.
    Symbol follower(Symbol v) const { return followers_.at(v); }
    Color color(Symbol v) const { return colors_.at(v); }
    std::span<const Symbol> followers() const noexcept { return followers_; }
    std::span<const Color> colors() const noexcept { return colors_; }

    bool accepting() const noexcept { return black_count_ < colors_.size(); }

    /// Consumes one symbol in place. Throws std::out_of_range for a symbol
    /// outside the alphabet.
    void advance(Symbol a);

    /// Number of vertices colored by the circuit walk of the last advance().
    std::size_t last_circuit_length() const noexcept { return last_circuit_length_; }

    friend bool operator==(const AutomatonState& lhs, const AutomatonState& rhs) {
        return lhs.last_ == rhs.last_ && lhs.followers_ == rhs.followers_ &&
               lhs.colors_ == rhs.colors_;
    }

private:
    void blacken(Symbol v);

    Symbol last_;
    std::vector<Symbol> followers_;  // alphabet_size + 1 slots, sentinel last
    std::vector<Color> colors_;
    std::size_t black_count_ = 0;
    std::size_t last_circuit_length_ = 0;
};

AutomatonState init_state(std::size_t alphabet_size);

/// Pure transition; agrees with AutomatonState::advance.
AutomatonState step(AutomatonState state, Symbol a);

inline bool is_accepting(const AutomatonState& state) noexcept { return state.accepting(); }

struct Verdict {
    bool accepted = true;
    /// Length of the shortest rejected prefix; absent iff accepted.
    std::optional<std::size_t> first_rejection;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Runs the automaton over `trail`, stopping at the first rejected prefix.
/// Symbols past that point are not read. The empty trail is accepted for any
/// alphabet size.
Verdict run(std::span<const Symbol> trail, std::size_t alphabet_size);

inline bool accepts(std::span<const Symbol> trail, std::size_t alphabet_size) {
    return run(trail, alphabet_size).accepted;
}

}  // namespace unitrail
