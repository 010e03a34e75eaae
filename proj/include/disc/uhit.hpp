#pragma once

#include "disc/types.hpp"

#include <vector>

namespace disc {

struct UHitResult {
    IndexSet chosen;              // candidate indices, sorted
    std::size_t greedy_size = 0;  // size before local search
    std::size_t swaps = 0;        // improving swaps applied
};

/// Repeatedly takes the candidate hitting the most unhit rectangles (ties: lowest index).
/// Throws Infeasible with the rectangle index when some rectangle holds no candidate.
IndexSet greedy_hitting_set(const std::vector<Rect>& rects, const std::vector<Point2>& candidates);

/// Greedy start, then swaps that trade r <= k chosen points for at most r - 1 candidates
/// until none applies.
UHitResult uhit_local_search(const std::vector<Rect>& rects, const std::vector<Point2>& candidates,
                             std::size_t swap_size = 3);

/// True when every rectangle contains a chosen candidate.
bool hits_all(const std::vector<Rect>& rects, const std::vector<Point2>& candidates, const IndexSet& chosen);

} // namespace disc
