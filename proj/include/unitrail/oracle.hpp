#pragma once

// Ground truth by exhaustive search over Eulerian trails.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "unitrail/core.hpp"

namespace unitrail {

/// Every Eulerian trail of `graph` that starts at `start`, in lexicographic
/// order, found by depth-first backtracking over remaining arc multiplicities.
/// Stops after `limit` trails when one is given. A graph without arcs yields
/// the single trail [start].
std::vector<Trail> enumerate_trails(const Multigraph& graph, Symbol start,
                                    std::optional<std::size_t> limit = std::nullopt);

/// True when `trail` is the only Eulerian trail of its induced graph from its
/// first vertex. The empty trail counts as unique.
bool is_unique_trail(std::span<const Symbol> trail);

}  // namespace unitrail
