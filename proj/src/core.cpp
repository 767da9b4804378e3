#include "unitrail/core.hpp"

#include <algorithm>
#include <string>

namespace unitrail {

namespace {

constexpr std::string_view kCanonicalChars =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Splits UTF-8 text into code points, each kept as its byte sequence.
std::vector<std::string_view> split_code_points(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto lead = static_cast<unsigned char>(text[i]);
        std::size_t len = 0;
        if (lead < 0x80) {
            len = 1;
        } else if ((lead & 0xE0) == 0xC0) {
            len = 2;
        } else if ((lead & 0xF0) == 0xE0) {
            len = 3;
        } else if ((lead & 0xF8) == 0xF0) {
            len = 4;
        } else {
            throw ParseError("invalid UTF-8 lead byte at offset " + std::to_string(i));
        }
        if (i + len > text.size()) {
            throw ParseError("truncated UTF-8 sequence at offset " + std::to_string(i));
        }
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) {
                throw ParseError("invalid UTF-8 continuation byte at offset " +
                                 std::to_string(i + k));
            }
        }
        out.push_back(text.substr(i, len));
        i += len;
    }
    return out;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        const std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        if (i > start) out.push_back(text.substr(start, i - start));
    }
    return out;
}

}  // namespace

Alphabet::Alphabet(std::size_t size) : size_(size) {
    if (size == 0) throw std::invalid_argument("alphabet size must be at least 1");
}

Alphabet Alphabet::named(std::vector<std::string> names) {
    if (names.empty()) throw std::invalid_argument("alphabet size must be at least 1");
    Alphabet a;
    for (auto& n : names) {
        if (a.find(n)) throw std::invalid_argument("duplicate alphabet name '" + n + "'");
        a.intern(n);
    }
    return a;
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    return std::nullopt;
}

std::string Alphabet::name(Symbol s) const {
    if (s >= size_) throw std::out_of_range("symbol " + std::to_string(s) + " outside alphabet");
    return names_.empty() ? std::to_string(s) : names_[s];
}

Symbol Alphabet::intern(std::string_view name) {
    if (!has_names()) throw std::logic_error("cannot intern into an unnamed alphabet");
    if (name.empty()) throw ParseError("empty token");
    if (auto id = find(name)) return *id;
    const auto id = static_cast<Symbol>(size_);
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    ++size_;
    return id;
}

Alphabet canonical_alphabet(std::size_t size, ParseMode mode) {
    if (size == 0) throw std::invalid_argument("alphabet size must be at least 1");
    std::vector<std::string> names;
    names.reserve(size);
    if (mode == ParseMode::Chars) {
        if (size > kCanonicalChars.size()) {
            throw std::invalid_argument("chars mode supports at most " +
                                        std::to_string(kCanonicalChars.size()) + " symbols");
        }
        for (std::size_t i = 0; i < size; ++i) names.emplace_back(1, kCanonicalChars[i]);
    } else {
        for (std::size_t i = 0; i < size; ++i) names.push_back(std::to_string(i));
    }
    return Alphabet::named(std::move(names));
}

void Multigraph::add_arc(Symbol from, Symbol to, std::size_t count) {
    if (from >= vertex_count_ || to >= vertex_count_) {
        throw std::out_of_range("arc endpoint outside vertex range");
    }
    if (count == 0) return;
    arcs_[Arc{from, to}] += count;
    arc_count_ += count;
}

std::size_t Multigraph::multiplicity(Symbol from, Symbol to) const {
    auto it = arcs_.find(Arc{from, to});
    return it == arcs_.end() ? 0 : it->second;
}

Multigraph Multigraph::reversed() const {
    Multigraph g(vertex_count_);
    for (const auto& [arc, count] : arcs_) g.add_arc(arc.to, arc.from, count);
    return g;
}

ParsedTrail parse_trail(std::string_view text, ParseMode mode, const Alphabet* fixed) {
    const auto pieces =
        mode == ParseMode::Chars ? split_code_points(text) : split_tokens(text);

    ParsedTrail out;
    std::vector<Symbol> symbols;
    symbols.reserve(pieces.size());
    if (fixed != nullptr) {
        out.alphabet = *fixed;
        for (auto piece : pieces) {
            auto id = fixed->find(piece);
            if (!id) throw ParseError("unknown symbol '" + std::string(piece) + "'");
            symbols.push_back(*id);
        }
    } else {
        for (auto piece : pieces) symbols.push_back(out.alphabet.intern(piece));
    }
    out.trail = Trail(std::move(symbols));
    return out;
}

std::string format_trail(std::span<const Symbol> trail, const Alphabet& alphabet,
                         ParseMode mode) {
    std::string out;
    for (std::size_t i = 0; i < trail.size(); ++i) {
        if (mode == ParseMode::Tokens && i > 0) out += ' ';
        out += alphabet.name(trail[i]);
    }
    return out;
}

void check_symbols(std::span<const Symbol> trail, std::size_t alphabet_size) {
    for (std::size_t i = 0; i < trail.size(); ++i) {
        if (trail[i] >= alphabet_size) {
            throw std::out_of_range("symbol " + std::to_string(trail[i]) + " at position " +
                                    std::to_string(i) + " outside alphabet of size " +
                                    std::to_string(alphabet_size));
        }
    }
}

Multigraph induced_graph(std::span<const Symbol> trail, std::size_t alphabet_size) {
    if (trail.empty()) throw std::invalid_argument("induced_graph: empty trail");
    check_symbols(trail, alphabet_size);
    Multigraph g(alphabet_size);
    for (std::size_t i = 0; i + 1 < trail.size(); ++i) g.add_arc(trail[i], trail[i + 1]);
    return g;
}

Trail reverse_trail(std::span<const Symbol> trail) {
    return Trail(std::vector<Symbol>(trail.rbegin(), trail.rend()));
}

std::size_t min_alphabet_size(std::span<const Symbol> trail) {
    if (trail.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(trail.begin(), trail.end())) + 1;
}

}  // namespace unitrail
