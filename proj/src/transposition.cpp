#include "unitrail/transposition.hpp"

#include <algorithm>

namespace unitrail {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void append(std::vector<Symbol>& out, std::span<const Symbol> piece) {
    out.insert(out.end(), piece.begin(), piece.end());
}

// Index of the anchor occurrence in front of y (the one compared with the
// anchor in front of x for properness).
std::size_t second_anchor(const TranspositionSite& site) {
    return std::visit(overloaded{[](const TwoAnchors& s) { return s.j; },
                                 [](const OneAnchor& s) { return s.j; }},
                      site);
}

std::size_t first_anchor(const TranspositionSite& site) {
    return std::visit([](const auto& s) { return s.i; }, site);
}

// Positions of every symbol, ascending.
std::vector<std::vector<std::size_t>> occurrences(std::span<const Symbol> t) {
    std::vector<std::vector<std::size_t>> occ(min_alphabet_size(t));
    for (std::size_t k = 0; k < t.size(); ++k) occ[t[k]].push_back(k);
    return occ;
}

// First element of `positions` strictly greater than `after`.
std::optional<std::size_t> next_after(const std::vector<std::size_t>& positions,
                                      std::size_t after) {
    auto it = std::upper_bound(positions.begin(), positions.end(), after);
    if (it == positions.end()) return std::nullopt;
    return *it;
}

// One anchor-shifting step on an improper, non-identity site. Returns nothing
// when the shared successor coincides with the other anchor symbol, where no
// single shifted site exists.
std::optional<TranspositionSite> shift_once(std::span<const Symbol> t,
                                            const TranspositionSite& site,
                                            ShiftBranch& branch) {
    return std::visit(
        overloaded{
            [&](const TwoAnchors& s) -> std::optional<TranspositionSite> {
                const bool x_empty = s.i + 1 == s.p;
                const bool y_empty = s.j + 1 == s.q;
                if (!x_empty && !y_empty) {
                    branch = ShiftBranch::TwoBothNonEmpty;
                    if (t[s.i + 1] == t[s.p]) return std::nullopt;
                    return TwoAnchors{s.i + 1, s.p, s.j + 1, s.q};
                }
                if (x_empty) {
                    branch = ShiftBranch::TwoLeadingEmpty;
                    return OneAnchor{s.p, s.j + 1, s.q};
                }
                branch = ShiftBranch::TwoTrailingEmpty;
                return OneAnchor{s.i + 1, s.p, s.q};
            },
            [&](const OneAnchor& s) -> std::optional<TranspositionSite> {
                const bool x_empty = s.i + 1 == s.j;
                const bool y_empty = s.j + 1 == s.k;
                if (!x_empty && !y_empty) {
                    branch = ShiftBranch::OneBothNonEmpty;
                    if (t[s.i + 1] == t[s.i]) return std::nullopt;
                    return TwoAnchors{s.i + 1, s.j, s.j + 1, s.k};
                }
                if (x_empty) {
                    branch = ShiftBranch::OneLeadingEmpty;
                    return OneAnchor{s.j, s.j + 1, s.k};
                }
                branch = ShiftBranch::OneTrailingEmpty;
                return OneAnchor{s.i + 1, s.j, s.k};
            }},
        site);
}

}  // namespace

std::string to_string(const TranspositionSite& site) {
    return std::visit(
        overloaded{[](const TwoAnchors& s) {
                       return "TwoAnchors(" + std::to_string(s.i) + "," + std::to_string(s.p) +
                              "," + std::to_string(s.j) + "," + std::to_string(s.q) + ")";
                   },
                   [](const OneAnchor& s) {
                       return "OneAnchor(" + std::to_string(s.i) + "," + std::to_string(s.j) +
                              "," + std::to_string(s.k) + ")";
                   }},
        site);
}

const char* to_string(ShiftBranch branch) {
    switch (branch) {
        case ShiftBranch::TwoBothNonEmpty: return "two-anchor/x,y nonempty";
        case ShiftBranch::TwoLeadingEmpty: return "two-anchor/x empty";
        case ShiftBranch::TwoTrailingEmpty: return "two-anchor/y empty";
        case ShiftBranch::OneBothNonEmpty: return "one-anchor/x,y nonempty";
        case ShiftBranch::OneLeadingEmpty: return "one-anchor/x empty";
        case ShiftBranch::OneTrailingEmpty: return "one-anchor/y empty";
    }
    return "?";
}

bool is_valid_site(std::span<const Symbol> t, const TranspositionSite& site) {
    const std::size_t n = t.size();
    return std::visit(overloaded{[&](const TwoAnchors& s) {
                                     return s.i < s.p && s.p < s.j && s.j < s.q && s.q < n &&
                                            t[s.i] == t[s.j] && t[s.p] == t[s.q] &&
                                            t[s.i] != t[s.p];
                                 },
                                 [&](const OneAnchor& s) {
                                     return s.i < s.j && s.j < s.k && s.k < n &&
                                            t[s.i] == t[s.j] && t[s.j] == t[s.k];
                                 }},
                      site);
}

SiteSegments segments(std::span<const Symbol> t, const TranspositionSite& site) {
    if (!is_valid_site(t, site)) {
        throw std::invalid_argument("site " + to_string(site) + " does not fit the trail");
    }
    SiteSegments seg;
    std::visit(overloaded{[&](const TwoAnchors& s) {
                              seg.u = t.subspan(0, s.i);
                              seg.x = t.subspan(s.i + 1, s.p - s.i - 1);
                              seg.z = t.subspan(s.p + 1, s.j - s.p - 1);
                              seg.y = t.subspan(s.j + 1, s.q - s.j - 1);
                              seg.v = t.subspan(s.q + 1);
                              seg.a = t[s.i];
                              seg.b = t[s.p];
                          },
                          [&](const OneAnchor& s) {
                              seg.u = t.subspan(0, s.i);
                              seg.x = t.subspan(s.i + 1, s.j - s.i - 1);
                              seg.z = t.subspan(s.j, 0);
                              seg.y = t.subspan(s.j + 1, s.k - s.j - 1);
                              seg.v = t.subspan(s.k + 1);
                              seg.a = seg.b = t[s.i];
                              seg.one_anchor = true;
                          }},
               site);
    return seg;
}

Trail apply_transposition(std::span<const Symbol> t, const TranspositionSite& site) {
    const auto seg = segments(t, site);
    std::vector<Symbol> out;
    out.reserve(t.size());
    append(out, seg.u);
    out.push_back(seg.a);
    append(out, seg.y);
    if (seg.one_anchor) {
        out.push_back(seg.a);
    } else {
        out.push_back(seg.b);
        append(out, seg.z);
        out.push_back(seg.a);
    }
    append(out, seg.x);
    out.push_back(seg.b);
    append(out, seg.v);
    return Trail(std::move(out));
}

bool is_proper(std::span<const Symbol> t, const TranspositionSite& site) {
    if (!is_valid_site(t, site)) {
        throw std::invalid_argument("site " + to_string(site) + " does not fit the trail");
    }
    return t[first_anchor(site) + 1] != t[second_anchor(site) + 1];
}

bool admits_proper_transposition(std::span<const Symbol> t) {
    const std::size_t n = t.size();
    if (n < 3) return false;
    std::vector<std::size_t> last(min_alphabet_size(t), 0);
    for (std::size_t k = 0; k < n; ++k) last[t[k]] = k;

    for (std::size_t i = 0; i + 2 < n; ++i) {
        // Latest position of any symbol seen in t[i..j).
        std::size_t reach = last[t[i]];
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            if (t[j] == t[i] && t[j + 1] != t[i + 1] && reach > j) return true;
            reach = std::max(reach, last[t[j]]);
        }
    }
    return false;
}

std::vector<TranspositionSite> all_sites(std::span<const Symbol> t) {
    const std::size_t n = t.size();
    std::vector<TranspositionSite> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = i + 1; p < n; ++p)
            for (std::size_t j = p + 1; j < n; ++j)
                for (std::size_t q = j + 1; q < n; ++q)
                    if (TranspositionSite s = TwoAnchors{i, p, j, q}; is_valid_site(t, s))
                        out.push_back(s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (TranspositionSite s = OneAnchor{i, j, k}; is_valid_site(t, s))
                    out.push_back(s);
    return out;
}

std::optional<TranspositionSite> find_proper_site(std::span<const Symbol> t) {
    const std::size_t n = t.size();
    if (n < 3) return std::nullopt;
    const auto occ = occurrences(t);

    // Candidate second anchors for a first anchor at i: later occurrences of
    // t[i] that have a successor different from t[i + 1].
    auto second_anchors = [&](std::size_t i) {
        std::vector<std::size_t> js;
        for (std::size_t j : occ[t[i]]) {
            if (j > i && j + 1 < n && t[j + 1] != t[i + 1]) js.push_back(j);
        }
        return js;
    };

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto js = second_anchors(i);
        if (js.empty()) continue;
        // The smallest j past p is the best choice: any q after a larger j
        // also follows it.
        auto jt = js.begin();
        for (std::size_t p = i + 1; p < n; ++p) {
            while (jt != js.end() && *jt <= p) ++jt;
            if (jt == js.end()) break;
            if (t[p] == t[i]) continue;
            if (auto q = next_after(occ[t[p]], *jt)) return TwoAnchors{i, p, *jt, *q};
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto js = second_anchors(i);
        if (js.empty()) continue;
        if (auto k = next_after(occ[t[i]], js.front())) return OneAnchor{i, js.front(), *k};
    }
    return std::nullopt;
}

ProperizeTrace properize_traced(std::span<const Symbol> t, const TranspositionSite& site) {
    const Trail image = apply_transposition(t, site);
    if (std::ranges::equal(image, t)) {
        throw std::invalid_argument("properize: " + to_string(site) + " is the identity");
    }

    ProperizeTrace trace;
    TranspositionSite current = site;
    // Every shift moves the first anchor right, so at most n shifts happen.
    for (std::size_t guard = 0; guard <= t.size(); ++guard) {
        if (is_proper(t, current)) {
            trace.site = current;
            return trace;
        }
        ShiftBranch branch{};
        auto next = shift_once(t, current, branch);
        if (!next || !is_valid_site(t, *next) || apply_transposition(t, *next) != image) {
            trace.stuck_at = branch;
            break;
        }
        trace.shifts.push_back(branch);
        current = *next;
    }

    trace.used_fallback = true;
    for (const auto& candidate : all_sites(t)) {
        if (is_proper(t, candidate) && apply_transposition(t, candidate) == image) {
            trace.site = candidate;
            break;
        }
    }
    return trace;
}

TranspositionSite properize(std::span<const Symbol> t, const TranspositionSite& site) {
    auto trace = properize_traced(t, site);
    if (!trace.site) {
        throw NoEquivalentProperSite("no proper site reproduces the image of " +
                                     to_string(site));
    }
    return *trace.site;
}

}  // namespace unitrail
