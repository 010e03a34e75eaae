#pragma once

#include "disc/cover_lp.hpp"
#include "disc/exact_oracle.hpp"
#include "disc/stab.hpp"

#include <optional>
#include <vector>

namespace disc {

/// Unit-height rectangles crossed by the horizontal line y = lambda, with candidate points.
struct LineProblem {
    Coord lambda = 0;
    std::vector<Rect> rects;
    std::vector<Point2> points;
};

/// Lines y = y0 + i*unit, offset so no rectangle edge lies on a line; each rectangle goes to
/// the one line inside its open y-range. Candidates outside every rectangle of a line are dropped.
/// Throws InputError for a rectangle whose height is not `unit`.
std::vector<LineProblem> line_decompose(const std::vector<Rect>& rects, const std::vector<Point2>& candidates,
                                        Coord unit);

/// Rectangles clipped to one side of the line and reflected if needed so that every rectangle
/// rests on the line from above.
struct AnchoredProblem {
    Coord lambda = 0;
    std::vector<Rect> rects;
    IndexSet rect_ids;        // into LineProblem::rects
    std::vector<Point2> points;
    IndexSet point_ids;       // into LineProblem::points
};

struct LineSplit {
    CoverLP lp;
    LPSolution solution;
    std::vector<Side> sides;  // a: above, b: below
    AnchoredProblem above;
    AnchoredProblem below;    // reflected through the line
};

/// Throws Infeasible (witness.first = rectangle) for a rectangle holding no candidate.
LineSplit split_above_below(const LineProblem& line);

/// Maximum set of pairwise disjoint anchored rectangles, left to right (earliest right end first).
IndexSet anchored_mis(const std::vector<Rect>& rects);

/// Lowest point (ties: smaller x, then index) inside each region; nullopt when empty.
std::optional<std::size_t> lowest_point(const std::vector<Point2>& points, const Rect& region);

enum class ResidualClass { r1, r2, r3, middle };

struct Residual {
    std::size_t rect = 0;
    ResidualClass cls = ResidualClass::r1;
    std::size_t left_slab = 0;
    std::size_t right_slab = 0;
    Rect left_part;
    Rect right_part;
};

struct AnchoredReport {
    IndexSet mis;
    IndexSet seeds;            // point indices, members then strips
    std::vector<Residual> residuals;
    std::size_t left_count = 0;
    std::size_t right_count = 0;
    IndexSet solution;         // point indices into AnchoredProblem::points
};

/// Seeds from the independent set and its strips, residual classification, the left/right LP
/// split and one staircase pass per slab.
AnchoredReport solve_anchored(const AnchoredProblem& problem);

/// Drops parts whose candidate set contains another's, then repeatedly takes the remaining part
/// with the leftmost left edge and hits it with its rightmost candidate.
/// Throws Infeasible (witness.first = part) for a part holding no candidate.
IndexSet staircase_greedy(const std::vector<Rect>& parts, const std::vector<Point2>& candidates);

struct LineSolution {
    IndexSet points;           // into LineProblem::points, sorted
    std::size_t above_rects = 0;
    std::size_t below_rects = 0;
    double lp_objective = 0.0;
};

LineSolution solve_line(const LineProblem& line);

struct DiscreteOptions {
    double eps = 0.5;
    bool fallback = true;
    OracleBudget budget;
};

struct LineReport {
    char family = 'A';         // 'B' lines live in transposed coordinates
    LineProblem problem;
    LineSolution solution;
};

struct DiscreteResult {
    IndexSet chosen;           // square indices
    bool exact = false;
    std::optional<double> z0_objective;
    std::optional<double> z1_objective;
    std::vector<LineReport> lines;
    bool cover_added = false;
};

/// Throws Infeasible when the instance is not twin-free.
DiscreteResult discrete_disc_code(const Instance2D& inst, const DiscreteOptions& options = {});

} // namespace disc
