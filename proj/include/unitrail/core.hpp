#pragma once

// Symbols, trails and trail-induced multigraphs.
//
// A trail is a plain sequence of dense vertex ids 0..m-1. Every trail is an
// Eulerian trail of the multigraph formed by its consecutive pairs, so the
// rest of the library never needs a separate graph input format.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace unitrail {

using Symbol = std::uint32_t;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ParseMode { Chars, Tokens };

/// Dense vertex ids 0..size()-1, optionally carrying distinct token names.
///
/// A default-constructed alphabet has size zero. It only arises from parsing
/// empty input; algorithms that build per-vertex tables require size >= 1.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::size_t size);

    static Alphabet named(std::vector<std::string> names);

    std::size_t size() const noexcept { return size_; }
    bool has_names() const noexcept { return !names_.empty() || size_ == 0; }

    std::optional<Symbol> find(std::string_view name) const;
    /// Token for `s`; the decimal id when the alphabet is unnamed.
    std::string name(Symbol s) const;

    /// Returns the id of `name`, appending a new symbol if it is unknown.
    /// Only valid on named (or empty) alphabets.
    Symbol intern(std::string_view name);

    friend bool operator==(const Alphabet& lhs, const Alphabet& rhs) {
        return lhs.size_ == rhs.size_ && lhs.names_ == rhs.names_;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> ids_;
};

/// The fixed alphabet used when the user passes an explicit alphabet size:
/// chars mode names ids "0-9a-zA-Z" (at most 62 symbols), tokens mode names
/// them by their decimal value.
Alphabet canonical_alphabet(std::size_t size, ParseMode mode);

class Trail {
public:
    Trail() = default;
    explicit Trail(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}
    Trail(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
    explicit Trail(std::span<const Symbol> symbols)
        : symbols_(symbols.begin(), symbols.end()) {}

    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    operator std::span<const Symbol>() const noexcept { return symbols_; }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    Symbol front() const { return symbols_.front(); }

    auto begin() const noexcept { return symbols_.begin(); }
    auto end() const noexcept { return symbols_.end(); }

    friend auto operator<=>(const Trail&, const Trail&) = default;

private:
    std::vector<Symbol> symbols_;
};

struct Arc {
    Symbol from;
    Symbol to;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Arc multiset over ordered vertex pairs. Self-loops and parallel arcs are
/// ordinary entries.
class Multigraph {
public:
    explicit Multigraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

    void add_arc(Symbol from, Symbol to, std::size_t count = 1);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t multiplicity(Symbol from, Symbol to) const;
    std::size_t arc_count() const noexcept { return arc_count_; }
    const std::map<Arc, std::size_t>& arcs() const noexcept { return arcs_; }

    Multigraph reversed() const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t vertex_count_;
    std::size_t arc_count_ = 0;
    std::map<Arc, std::size_t> arcs_;
};

struct ParsedTrail {
    Trail trail;
    Alphabet alphabet;
};

/// Parses one sequence. Without `fixed`, ids are assigned in order of first
/// appearance; with it, every token must already be known.
///
/// Chars mode treats every UTF-8 code point as one symbol; tokens mode splits
/// on ASCII whitespace.
ParsedTrail parse_trail(std::string_view text, ParseMode mode,
                        const Alphabet* fixed = nullptr);

std::string format_trail(std::span<const Symbol> trail, const Alphabet& alphabet,
                         ParseMode mode);

/// Throws std::out_of_range if any symbol is >= alphabet_size.
void check_symbols(std::span<const Symbol> trail, std::size_t alphabet_size);

Multigraph induced_graph(std::span<const Symbol> trail, std::size_t alphabet_size);

Trail reverse_trail(std::span<const Symbol> trail);

/// The largest symbol id plus one, i.e. the smallest alphabet the trail fits.
std::size_t min_alphabet_size(std::span<const Symbol> trail);

/// Calls `fn(span)` for every word over `symbols` with length in
/// [min_len, max_len], shorter words first, each length in lexicographic
/// order of positions in `symbols`. Stops early if `fn` returns false.
template <class Fn>
void for_each_word(std::span<const Symbol> symbols, std::size_t min_len, std::size_t max_len,
                   Fn&& fn) {
    std::vector<std::size_t> digits;
    std::vector<Symbol> word;
    for (std::size_t len = min_len; len <= max_len; ++len) {
        if (len > 0 && symbols.empty()) return;
        digits.assign(len, 0);
        word.assign(len, len > 0 ? symbols[0] : Symbol{0});
        while (true) {
            if constexpr (std::is_same_v<std::invoke_result_t<Fn&, std::span<const Symbol>>,
                                         bool>) {
                if (!fn(std::span<const Symbol>(word))) return;
            } else {
                fn(std::span<const Symbol>(word));
            }
            std::size_t pos = len;
            while (pos > 0 && digits[pos - 1] + 1 == symbols.size()) {
                digits[pos - 1] = 0;
                word[pos - 1] = symbols[0];
                --pos;
            }
            if (pos == 0) break;
            ++digits[pos - 1];
            word[pos - 1] = symbols[digits[pos - 1]];
        }
    }
}

/// for_each_word over the whole alphabet 0..alphabet_size-1.
template <class Fn>
void for_each_word(std::size_t alphabet_size, std::size_t min_len, std::size_t max_len,
                   Fn&& fn) {
    std::vector<Symbol> symbols(alphabet_size);
    for (std::size_t s = 0; s < alphabet_size; ++s) symbols[s] = static_cast<Symbol>(s);
    for_each_word(std::span<const Symbol>(symbols), min_len, max_len, std::forward<Fn>(fn));
}

}  // namespace unitrail
