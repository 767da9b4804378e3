#include "unitrail/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace unitrail {

namespace {

struct OutArc {
    Symbol to;
    std::size_t remaining;
};

class TrailSearch {
public:
    TrailSearch(const Multigraph& graph, std::optional<std::size_t> limit)
        : out_(graph.vertex_count()), total_(graph.arc_count()), limit_(limit) {
        // std::map iterates arcs by (from, to), so each list is sorted by target.
        for (const auto& [arc, count] : graph.arcs()) out_[arc.from].push_back({arc.to, count});
    }

    std::vector<Trail> run(Symbol start) {
        path_.assign(1, start);
        visit(start);
        return std::move(found_);
    }

private:
    bool done() const { return limit_ && found_.size() >= *limit_; }

    void visit(Symbol v) {
        if (path_.size() == total_ + 1) {
            found_.emplace_back(path_);
            return;
        }
        for (auto& arc : out_[v]) {
            if (arc.remaining == 0) continue;
            --arc.remaining;
            path_.push_back(arc.to);
            visit(arc.to);
            path_.pop_back();
            ++arc.remaining;
            if (done()) return;
        }
    }

    std::vector<std::vector<OutArc>> out_;
    std::size_t total_;
    std::optional<std::size_t> limit_;
    std::vector<Symbol> path_;
    std::vector<Trail> found_;
};

}  // namespace

std::vector<Trail> enumerate_trails(const Multigraph& graph, Symbol start,
                                    std::optional<std::size_t> limit) {
    if (start >= graph.vertex_count()) throw std::out_of_range("start vertex outside graph");
    if (limit && *limit == 0) return {};
    return TrailSearch(graph, limit).run(start);
}

bool is_unique_trail(std::span<const Symbol> trail) {
    if (trail.empty()) return true;
    const auto trails =
        enumerate_trails(induced_graph(trail, min_alphabet_size(trail)), trail.front(), 2);
    // The input is always one of the trails, so a lone result must be it.
    if (trails.empty() || (trails.size() == 1 && !std::ranges::equal(trails.front(), trail))) {
        throw std::logic_error("enumeration lost the input trail");
    }
    return trails.size() == 1;
}

}  // namespace unitrail
