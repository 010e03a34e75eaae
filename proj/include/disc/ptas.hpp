#pragma once

#include "disc/instance.hpp"

#include <limits>
#include <vector>

namespace disc {

/// Half-open run [begin, end) of point indices.
struct PointRun {
    std::size_t begin = 0;
    std::size_t end = 0;

    [[nodiscard]] bool empty() const { return begin == end; }
    [[nodiscard]] std::size_t size() const { return end - begin; }
    [[nodiscard]] bool contains(std::size_t p) const { return begin <= p && p < end; }
};

struct GroupRange {
    std::size_t reference = 0;  // point index
    std::size_t first = 0;      // interval through the reference with the leftmost left end
    std::size_t second = 0;     // ... and with the rightmost right end
    Coord lo = 0;
    Coord hi = 0;
};

struct Decomposition {
    std::size_t step_first = 0;   // ceil(2/eps)
    std::size_t step = 0;         // ceil(4/eps)
    std::vector<GroupRange> groups;
    std::vector<PointRun> blocks;        // B_1..B_l
    std::vector<IndexSet> block_groups;  // group indices merged into each block
    std::vector<PointRun> free_regions;  // F_0..F_l, possibly empty
    /// Consecutive pairs (t, t+1), named by t, whose separation is charged to each block.
    std::vector<IndexSet> block_pairs;
};

/// Requires unit intervals (length == scale) and eps in (0, 1]. Reference points are the
/// ceil(2/eps)-th point and every ceil(4/eps)-th point after it (1-based).
Decomposition decompose(const Instance1D& inst, double eps);

/// Intervals containing at least one point of the run.
IndexSet touching_intervals(const Instance1D& inst, PointRun region);

/// Every subset of `touching` that covers the region and separates its consecutive pairs.
/// Throws InputError when `touching` exceeds `cap`.
std::vector<IndexSet> enumerate_free_region_codes(const Instance1D& inst, PointRun region,
                                                  const IndexSet& touching, std::size_t cap = 20);

inline constexpr std::size_t infinite_cost = std::numeric_limits<std::size_t>::max();

struct BlockCost {
    std::size_t theta = 0;   // infinite_cost when some pair cannot be separated
    IndexSet intervals;
};

/// Minimum edge cover over the block's pairs left unseparated by d, d' and the block's own
/// reference intervals; intervals touching a single such pair act as half-edges.
BlockCost block_edge_cost(const Instance1D& inst, const Decomposition& dec, std::size_t block,
                          const IndexSet& d, const IndexSet& d_next);

struct PtasOptions {
    double eps = 0.5;
    std::size_t cap = 20;
};

struct PtasResult {
    IndexSet chosen;                  // original interval indices
    std::size_t path_weight = 0;      // shortest s-t path in the layered graph
    std::size_t references = 0;
    std::vector<std::size_t> layer_sizes;
    Decomposition decomposition;      // over the pruned instance
};

/// Throws InputError for non-unit intervals, Infeasible when not twin-free.
PtasResult ptas_solve(const Instance1D& inst, const PtasOptions& options = {});

/// One unit window per realizable nonempty point run, placed at the middle of its feasible range.
/// The result is expressed at twice the input scale.
Instance1D continuous_to_discrete_1d(const std::vector<Coord>& points, Coord scale);

} // namespace disc
