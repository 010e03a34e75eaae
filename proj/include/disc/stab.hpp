#pragma once

#include "disc/cover_lp.hpp"
#include "disc/instance.hpp"

#include <optional>
#include <vector>

namespace disc {

// All 2D machinery runs in a working frame at 4x the instance scale: a unit square then has
// even half-width 2*scale, every region edge is an even coordinate, and midpoints between
// distinct edges are integers that never lie on an edge.
inline constexpr Coord working_factor = 4;

struct WorkingFrame {
    Coord scale = 4;  // working scale; also the side of a unit square
    std::vector<Point2> points;

    [[nodiscard]] Coord half() const { return scale / 2; }
    [[nodiscard]] static WorkingFrame from(const Instance2D& inst);
};

/// Set of centers whose closed unit square contains `p`.
Rect center_region(Point2 p, Coord half);

/// One side of a stab object: a unit-height part (type A) and a unit-width part (type B).
/// A full square is stored as type A.
struct LShape {
    std::optional<Rect> type_a;
    std::optional<Rect> type_b;

    [[nodiscard]] bool contains(Point2 c) const {
        return (type_a && type_a->contains(c)) || (type_b && type_b->contains(c));
    }
    [[nodiscard]] bool empty() const { return !type_a && !type_b; }
    [[nodiscard]] std::vector<Rect> rects() const;
};

enum class StabShape { two_squares, slab_pair, l_pair };

/// Centers whose square holds exactly one endpoint of the segment ab:
/// region_a = D(a) \ D(b), region_b = D(b) \ D(a).
struct StabObject {
    Point2 a;
    Point2 b;
    LShape region_a;
    LShape region_b;
    StabShape shape = StabShape::two_squares;

    [[nodiscard]] bool contains(Point2 c) const { return region_a.contains(c) || region_b.contains(c); }
    [[nodiscard]] std::vector<Rect> rects() const;
};

StabObject stab_region(Point2 a, Point2 b, Coord half);

/// All unordered pairs (i, j), i < j.
std::vector<std::pair<std::size_t, std::size_t>> build_segments(std::size_t n);
std::vector<StabObject> stab_objects(const WorkingFrame& frame);

/// One representative per distinct nonempty containment signature, taken at grid-cell midpoints
/// of the distinct rectangle edges. `hits[q]` is the signature of `points[q]` over the input.
struct CandidateSet {
    std::vector<Point2> points;
    std::vector<Bitset> hits;
};

/// Edge coordinates must be even (true in the working frame).
CandidateSet candidate_points(const std::vector<Rect>& rects);

/// Centers realizing every distinct nonempty subset of points coverable by one closed unit
/// square, including degenerate faces (edges and vertices of the arrangement).
std::vector<Point2> face_candidates(const WorkingFrame& frame);

/// Two-level LP rounding that turns symmetric-difference objects into one family of unit-height
/// rectangles (type A) and one of unit-width rectangles (type B).
struct CascadeResult {
    std::vector<StabObject> objects;
    std::vector<Point2> candidates;   // Q: LP variables
    CoverLP z0;
    LPSolution z0_solution;
    std::vector<Side> sides;          // per object
    CoverLP z1;                       // one constraint per chosen region
    LPSolution z1_solution;
    std::vector<Rect> family_a;       // unit height
    std::vector<Rect> family_b;       // unit width (original orientation)
    bool z1_doubling_feasible = false;    // min(2 x0, 1) feasible for Z1
    bool z2_doubling_feasible = false;    // min(2 x1, 1) feasible for both families
};

/// `candidates` empty selects the continuous candidate set (cells of all object rectangles).
/// Throws std::logic_error if a doubling check fails.
CascadeResult cascade_round(const WorkingFrame& frame, std::vector<Point2> candidates = {});

} // namespace disc
