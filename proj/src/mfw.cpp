#include "unitrail/mfw.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "unitrail/automaton.hpp"

namespace unitrail {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool contains(std::span<const Symbol> word, Symbol s) {
    return std::find(word.begin(), word.end(), s) != word.end();
}

bool disjoint(std::span<const Symbol> lhs, std::span<const Symbol> rhs) {
    return std::none_of(lhs.begin(), lhs.end(), [&](Symbol s) { return contains(rhs, s); });
}

std::vector<Symbol> without(std::span<const Symbol> symbols, std::span<const Symbol> drop) {
    std::vector<Symbol> out;
    for (Symbol s : symbols) {
        if (!contains(drop, s)) out.push_back(s);
    }
    return out;
}

void push(std::vector<Symbol>& out, std::span<const Symbol> piece) {
    out.insert(out.end(), piece.begin(), piece.end());
}

// Unique-trail words over `symbols` of length at most max_len.
std::vector<Trail> unique_words(std::span<const Symbol> symbols, std::size_t max_len,
                                std::size_t alphabet_size) {
    std::vector<Trail> out;
    for_each_word(symbols, 0, max_len, [&](std::span<const Symbol> w) {
        if (accepts(w, alphabet_size)) out.emplace_back(w);
    });
    return out;
}

// The two anchor occurrences of a rendered form must be followed by different
// symbols, otherwise the word would not contain a proper transposition.
void check_proper(const Trail& r, std::size_t second_anchor) {
    if (r[1] == r[second_anchor + 1]) {
        throw std::logic_error("generated form is not a proper transposition");
    }
}

}  // namespace

Trail render(const MfwForm& form) {
    std::vector<Symbol> r;
    std::visit(overloaded{[&](const MfwTwoAnchors& f) {
                              r.push_back(f.a);
                              push(r, f.x);
                              r.push_back(f.b);
                              push(r, f.z);
                              r.push_back(f.a);
                              push(r, f.y);
                              r.push_back(f.b);
                          },
                          [&](const MfwOneAnchor& f) {
                              r.push_back(f.a);
                              push(r, f.x);
                              r.push_back(f.a);
                              push(r, f.y);
                              r.push_back(f.a);
                          }},
               form);
    return Trail(std::move(r));
}

bool satisfies_conditions(const MfwForm& form, std::size_t m) {
    const auto in_range = [m](std::span<const Symbol> w) {
        return std::all_of(w.begin(), w.end(), [m](Symbol s) { return s < m; });
    };
    return std::visit(
        overloaded{[&](const MfwTwoAnchors& f) {
                       const Symbol anchors[] = {f.a, f.b};
                       return f.a < m && f.b < m && f.a != f.b && in_range(f.x) &&
                              in_range(f.y) && in_range(f.z) && (!f.x.empty() || !f.y.empty()) &&
                              accepts(f.x, m) && accepts(f.y, m) && accepts(f.z, m) &&
                              disjoint(f.x, anchors) && disjoint(f.y, anchors) &&
                              disjoint(f.z, anchors) && disjoint(f.x, f.y) &&
                              disjoint(f.x, f.z) && disjoint(f.y, f.z);
                   },
                   [&](const MfwOneAnchor& f) {
                       const Symbol anchors[] = {f.a};
                       return f.a < m && in_range(f.x) && in_range(f.y) &&
                              (!f.x.empty() || !f.y.empty()) && accepts(f.x, m) &&
                              accepts(f.y, m) && disjoint(f.x, anchors) &&
                              disjoint(f.y, anchors) && disjoint(f.x, f.y);
                   }},
        form);
}

std::vector<Trail> constructive_mfw(std::size_t m, std::size_t max_len) {
    if (m == 0) throw std::invalid_argument("alphabet size must be at least 1");
    std::vector<Symbol> sigma(m);
    for (std::size_t s = 0; s < m; ++s) sigma[s] = static_cast<Symbol>(s);

    std::set<Trail> words;

    // One anchor: a x a y a, three anchor symbols.
    if (max_len >= 4) {
        for (Symbol a : sigma) {
            const Symbol anchors[] = {a};
            const auto rest = without(sigma, anchors);
            for (const auto& x : unique_words(rest, max_len - 3, m)) {
                const auto y_symbols = without(rest, x);
                for (const auto& y : unique_words(y_symbols, max_len - 3 - x.size(), m)) {
                    if (x.empty() && y.empty()) continue;
                    auto r = render(MfwOneAnchor{a, x, y});
                    check_proper(r, x.size() + 1);
                    words.insert(std::move(r));
                }
            }
        }
    }

    // Two anchors: a x b z a y b, four anchor symbols.
    if (max_len >= 5) {
        for (Symbol a : sigma) {
            for (Symbol b : sigma) {
                if (a == b) continue;
                const Symbol anchors[] = {a, b};
                const auto rest = without(sigma, anchors);
                for (const auto& x : unique_words(rest, max_len - 4, m)) {
                    const auto y_symbols = without(rest, x);
                    for (const auto& y : unique_words(y_symbols, max_len - 4 - x.size(), m)) {
                        if (x.empty() && y.empty()) continue;
                        const auto z_symbols = without(y_symbols, y);
                        for (const auto& z :
                             unique_words(z_symbols, max_len - 4 - x.size() - y.size(), m)) {
                            auto r = render(MfwTwoAnchors{a, b, x, y, z});
                            check_proper(r, x.size() + z.size() + 2);
                            words.insert(std::move(r));
                        }
                    }
                }
            }
        }
    }

    return {words.begin(), words.end()};
}

std::vector<Trail> brute_mfw(std::size_t m, std::size_t max_len) {
    if (m == 0) throw std::invalid_argument("alphabet size must be at least 1");
    std::vector<Trail> out;
    for_each_word(m, 1, max_len, [&](std::span<const Symbol> r) {
        if (!accepts(r, m) && accepts(r.subspan(1), m) && accepts(r.first(r.size() - 1), m)) {
            out.emplace_back(r);
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool binary_mfw_regex_match(std::span<const Symbol> w) {
    check_symbols(w, 2);
    const std::size_t n = w.size();
    if (n < 4) return false;
    const Symbol s = w[0];
    const Symbol o = 1 - s;
    const auto all_other = [&](std::size_t from, std::size_t to) {
        return std::all_of(w.begin() + static_cast<std::ptrdiff_t>(from),
                           w.begin() + static_cast<std::ptrdiff_t>(to),
                           [o](Symbol c) { return c == o; });
    };
    // s s o^k s
    if (w[1] == s && w[n - 1] == s && all_other(2, n - 1)) return true;
    // s o^k s s
    return w[n - 2] == s && w[n - 1] == s && all_other(1, n - 2);
}

}  // namespace unitrail
