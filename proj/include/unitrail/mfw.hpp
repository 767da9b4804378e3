#pragma once

// Minimal forbidden words of the unique-trail language: words that are not
// unique trails although every proper factor is.
//
// Every such word has one of two shapes:
//
//   a x b z a y b   (a != b)
//   a x a y a
//
// where x or y is nonempty, each of x, y, z is itself a unique trail, none of
// them contains an anchor symbol, and no two of them share a symbol.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "unitrail/core.hpp"

namespace unitrail {

struct MfwTwoAnchors {
    Symbol a = 0;
    Symbol b = 0;
    Trail x, y, z;
};

struct MfwOneAnchor {
    Symbol a = 0;
    Trail x, y;
};

using MfwForm = std::variant<MfwTwoAnchors, MfwOneAnchor>;

Trail render(const MfwForm& form);

/// Checks the shape conditions (nonempty x or y, unique segments, anchor
/// avoidance and pairwise disjointness) over an alphabet of the given size.
bool satisfies_conditions(const MfwForm& form, std::size_t alphabet_size);

/// Renders every valid form up to `max_len`, deduplicated and sorted.
std::vector<Trail> constructive_mfw(std::size_t alphabet_size, std::size_t max_len);

/// Every word up to `max_len` that the automaton rejects while accepting the
/// word minus its first symbol and the word minus its last symbol. Sorted.
std::vector<Trail> brute_mfw(std::size_t alphabet_size, std::size_t max_len);

/// Binary alphabet only: matches 0 0 1^k 0, 0 1^k 0 0, 1 1 0^k 1 or
/// 1 0^k 1 1 with k >= 1. Throws std::out_of_range on a symbol >= 2.
bool binary_mfw_regex_match(std::span<const Symbol> word);

}  // namespace unitrail
