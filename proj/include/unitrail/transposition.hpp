#pragma once

// Transpositions on trails.
//
// A two-anchor site splits t = u a x b z a y b v (a != b) and maps it to
// u a y b z a x b v. A one-anchor site splits t = u a x a y a v and maps it to
// u a y a x a v. Both keep the arc multiset and the start vertex, so the image
// is another Eulerian trail of the same graph. A site is proper when the two
// anchor occurrences in front of x and y have different successors; a trail
// has a proper site exactly when it is not the unique Eulerian trail of its
// graph.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "unitrail/core.hpp"

namespace unitrail {

/// Anchors a at i and j, b at p and q, with i < p < j < q.
struct TwoAnchors {
    std::size_t i, p, j, q;
    friend auto operator<=>(const TwoAnchors&, const TwoAnchors&) = default;
};

/// Anchor a at i, j and k, with i < j < k.
struct OneAnchor {
    std::size_t i, j, k;
    friend auto operator<=>(const OneAnchor&, const OneAnchor&) = default;
};

/// Orders every TwoAnchors site before every OneAnchor site.
using TranspositionSite = std::variant<TwoAnchors, OneAnchor>;

std::string to_string(const TranspositionSite& site);

/// The pieces of t cut out by a site. For one-anchor sites `b` equals `a` and
/// `z` is empty.
struct SiteSegments {
    std::span<const Symbol> u, x, z, y, v;
    Symbol a = 0;
    Symbol b = 0;
    bool one_anchor = false;
};

bool is_valid_site(std::span<const Symbol> trail, const TranspositionSite& site);

/// Throws std::invalid_argument if the site does not fit the trail.
SiteSegments segments(std::span<const Symbol> trail, const TranspositionSite& site);

Trail apply_transposition(std::span<const Symbol> trail, const TranspositionSite& site);

bool is_proper(std::span<const Symbol> trail, const TranspositionSite& site);

/// Direct pattern scan: is t = u a w a y b v with b occurring in a w and the
/// two a's followed by different symbols? Quadratic in the trail length.
bool admits_proper_transposition(std::span<const Symbol> trail);

/// Every valid site, in TranspositionSite order. Quartic; meant for short
/// trails.
std::vector<TranspositionSite> all_sites(std::span<const Symbol> trail);

/// The least proper site in TranspositionSite order, or nothing when the
/// trail is unique.
std::optional<TranspositionSite> find_proper_site(std::span<const Symbol> trail);

/// Anchor-shifting steps used while properizing a site. `Two*` steps start
/// from a two-anchor site, `One*` from a one-anchor site; the suffix says
/// which of x and y is empty.
enum class ShiftBranch {
    TwoBothNonEmpty,
    TwoLeadingEmpty,
    TwoTrailingEmpty,
    OneBothNonEmpty,
    OneLeadingEmpty,
    OneTrailingEmpty,
};

const char* to_string(ShiftBranch branch);

struct ProperizeTrace {
    /// Proper site with the same image; absent when none exists.
    std::optional<TranspositionSite> site;
    /// Shifts that were applied and validated, in order.
    std::vector<ShiftBranch> shifts;
    /// Set when a shift was not applicable or failed validation, and the
    /// result came from exhaustive search instead.
    bool used_fallback = false;
    /// The branch at which the shift recursion stopped, when it did.
    std::optional<ShiftBranch> stuck_at;
};

class NoEquivalentProperSite : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shifts the anchors of an improper site forward past their shared
/// successor until the site becomes proper, checking after every shift that
/// the image is unchanged. Throws std::invalid_argument when the site maps
/// the trail to itself.
ProperizeTrace properize_traced(std::span<const Symbol> trail, const TranspositionSite& site);

/// As properize_traced, but throws NoEquivalentProperSite when no proper
/// site has the same image.
TranspositionSite properize(std::span<const Symbol> trail, const TranspositionSite& site);

}  // namespace unitrail
