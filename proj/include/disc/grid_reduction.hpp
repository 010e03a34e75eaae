#pragma once

#include "disc/instance.hpp"
#include "disc/sat_reduction.hpp"

#include <json.hpp>

#include <array>
#include <vector>

namespace disc {

/// Vertices on the integer lattice; two vertices are adjacent at distance 1.
struct GridGraph {
    std::vector<Point2> vertices;

    [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

/// `{"vertices": [[x,y],...]}`; throws InputError on repeated vertices.
GridGraph grid_from_json(const nlohmann::json& j);

/// Rotates by 45 degrees and scales by sqrt(2): (x, y) -> (x - y, x + y), at scale 2. With
/// `discrete`, adds the square centered between the images of each edge's endpoints.
Instance2D grid_to_2d(const GridGraph& g, bool discrete = false);

/// Largest number of points one closed unit square can hold (checked over all triples; returns
/// 3 as soon as a triple fits).
std::size_t max_points_per_square(const Instance2D& inst);

using P3 = std::array<std::size_t, 3>;  // (end, middle, end)

/// Reads a P3-partition off a code of exactly 2|V|/3 squares whose centers are given at
/// `centers_scale`. Throws ExtractionError when the code is invalid or not made of P3 pairs.
std::vector<P3> extract_p3_partition(const GridGraph& g, const Instance2D& inst, Coord centers_scale,
                                     const std::vector<Point2>& centers);

} // namespace disc
