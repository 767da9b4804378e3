#include "unitrail/grammar.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace unitrail {

GrammarNfa::GrammarNfa(std::size_t alphabet_size, GrammarMode mode)
    : m_(alphabet_size), mode_(mode) {
    if (m_ == 0) throw std::invalid_argument("alphabet size must be at least 1");
    const std::size_t m = m_;
    state_count_ = 2 + 2 * m + m * m + m * m * m;
    delta_.resize(state_count_ * m);

    const auto sym = [](std::size_t s) { return static_cast<Symbol>(s); };

    for (std::size_t d = 0; d < m; ++d) {
        add(start(), sym(d), start());
        add(start(), sym(d), a_state(sym(d)));
        add(accepting(), sym(d), accepting());
    }

    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t c = 0; c < m; ++c) {
            add(a_state(sym(a)), sym(c), b_state(sym(a), sym(c), sym(c)));
            if (mode == GrammarMode::Amended) {
                add(a_state(sym(a)), sym(c), b_state(sym(a), sym(c), sym(a)));
            }
        }
        add(a_state(sym(a)), sym(a), c_state(sym(a), sym(a)));
    }

    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t c = 0; c < m; ++c) {
            for (std::size_t b = 0; b < m; ++b) {
                const StateId from = b_state(sym(a), sym(c), sym(b));
                for (std::size_t d = 0; d < m; ++d) {
                    add(from, sym(d), from);
                    add(from, sym(d), b_state(sym(a), sym(c), sym(d)));
                }
                add(from, sym(a), c_state(sym(c), sym(b)));
            }
        }
    }

    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t b = 0; b < m; ++b) {
            const StateId from = c_state(sym(c), sym(b));
            for (std::size_t d = 0; d < m; ++d) {
                if (d != c) add(from, sym(d), d_state(sym(b)));
            }
            if (b != c) add(from, sym(b), accepting());
        }
    }

    for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t d = 0; d < m; ++d) add(d_state(sym(b)), sym(d), d_state(sym(b)));
        add(d_state(sym(b)), sym(b), accepting());
    }
}

void GrammarNfa::add(StateId from, Symbol on, StateId to) {
    auto& list = delta_[from * m_ + on];
    auto it = std::lower_bound(list.begin(), list.end(), to);
    if (it != list.end() && *it == to) return;
    list.insert(it, to);
    ++transition_count_;
}

GrammarNfa::StateId GrammarNfa::a_state(Symbol a) const {
    return static_cast<StateId>(2 + a);
}

GrammarNfa::StateId GrammarNfa::d_state(Symbol b) const {
    return static_cast<StateId>(2 + m_ + b);
}

GrammarNfa::StateId GrammarNfa::c_state(Symbol c, Symbol b) const {
    return static_cast<StateId>(2 + 2 * m_ + c * m_ + b);
}

GrammarNfa::StateId GrammarNfa::b_state(Symbol a, Symbol c, Symbol b) const {
    return static_cast<StateId>(2 + 2 * m_ + m_ * m_ + (a * m_ + c) * m_ + b);
}

std::span<const GrammarNfa::StateId> GrammarNfa::targets(StateId from, Symbol on) const {
    if (from >= state_count_ || on >= m_) throw std::out_of_range("transition lookup out of range");
    return delta_[from * m_ + on];
}

std::string GrammarNfa::state_name(StateId state) const {
    if (state >= state_count_) throw std::out_of_range("state id out of range");
    const std::size_t m = m_;
    std::size_t s = state;
    if (s == 0) return "S";
    if (s == 1) return "R";
    s -= 2;
    if (s < m) return "A_" + std::to_string(s);
    s -= m;
    if (s < m) return "D_" + std::to_string(s);
    s -= m;
    if (s < m * m) return "C_" + std::to_string(s / m) + "_" + std::to_string(s % m);
    s -= m * m;
    return "B_" + std::to_string(s / (m * m)) + "_" + std::to_string(s / m % m) + "_" +
           std::to_string(s % m);
}

std::vector<GrammarNfa::StateId> GrammarNfa::simulate(std::span<const Symbol> trail) const {
    check_symbols(trail, m_);
    std::vector<char> live(state_count_, 0);
    std::vector<char> next(state_count_, 0);
    live[start()] = 1;
    for (Symbol d : trail) {
        std::fill(next.begin(), next.end(), 0);
        for (std::size_t s = 0; s < state_count_; ++s) {
            if (!live[s]) continue;
            for (StateId to : delta_[s * m_ + d]) next[to] = 1;
        }
        live.swap(next);
    }
    std::vector<StateId> out;
    for (std::size_t s = 0; s < state_count_; ++s) {
        if (live[s]) out.push_back(static_cast<StateId>(s));
    }
    return out;
}

bool GrammarNfa::accepts(std::span<const Symbol> trail) const {
    const auto live = simulate(trail);
    return std::binary_search(live.begin(), live.end(), accepting());
}

void GrammarNfa::write_transitions(std::ostream& out) const {
    for (std::size_t s = 0; s < state_count_; ++s) {
        for (std::size_t d = 0; d < m_; ++d) {
            for (StateId to : delta_[s * m_ + d]) {
                out << state_name(static_cast<StateId>(s)) << '\t' << d << '\t'
                    << state_name(to) << '\n';
            }
        }
    }
}

}  // namespace unitrail
