#include "unitrail/automaton.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace unitrail {

AutomatonState::AutomatonState(std::size_t alphabet_size)
    : last_(static_cast<Symbol>(alphabet_size)),
      followers_(alphabet_size + 1, kNone),
      colors_(alphabet_size, Color::White) {
    if (alphabet_size == 0) throw std::invalid_argument("alphabet size must be at least 1");
}

void AutomatonState::blacken(Symbol v) {
    if (colors_[v] == Color::White) {
        colors_[v] = Color::Black;
        ++black_count_;
    }
}

void AutomatonState::advance(Symbol a) {
    const std::size_t m = colors_.size();
    if (a >= m) {
        throw std::out_of_range("symbol " + std::to_string(a) + " outside alphabet of size " +
                                std::to_string(m));
    }

    const Symbol p = last_;
    last_circuit_length_ = 0;

    // The latest followers starting at n_p lead back to p (they form the
    // last-exit tree rooted at the current vertex), so the walk closes a
    // circuit through p of at most m vertices.
    if (followers_[p] != kNone && followers_[p] != a) {
        Symbol b = p;
        do {
            if (++last_circuit_length_ > m) {
                throw std::logic_error("follower walk did not return to the current vertex");
            }
            blacken(b);
            b = followers_[b];
        } while (b != p);
    }

    if (colors_[a] == Color::Black && black_count_ < m) {
        std::fill(colors_.begin(), colors_.end(), Color::Black);
        black_count_ = m;
    }

    followers_[p] = a;
    last_ = a;
}

AutomatonState init_state(std::size_t alphabet_size) { return AutomatonState(alphabet_size); }

AutomatonState step(AutomatonState state, Symbol a) {
    state.advance(a);
    return state;
}

Verdict run(std::span<const Symbol> trail, std::size_t alphabet_size) {
    if (trail.empty()) return {};
    AutomatonState state(alphabet_size);
    for (std::size_t i = 0; i < trail.size(); ++i) {
        state.advance(trail[i]);
        if (!state.accepting()) return Verdict{false, i + 1};
    }
    return {};
}

}  // namespace unitrail
