#pragma once

#include "disc/exact_oracle.hpp"
#include "disc/stab.hpp"
#include "disc/uhit.hpp"

#include <optional>

namespace disc {

struct ContinuousOptions {
    double eps = 0.5;
    std::size_t swap = 3;
    /// Solve exactly when n <= 2^(1/eps) and the oracle finishes within `budget`.
    bool fallback = true;
    OracleBudget budget;
};

struct ContinuousResult {
    Coord scale = 4;                // scale of `centers` (4x the instance scale)
    std::vector<Point2> centers;
    bool exact = false;             // produced by the small-instance fallback
    std::optional<double> z0_objective;
    std::optional<double> z1_objective;
    std::size_t family_a = 0;       // rectangles in each family
    std::size_t family_b = 0;
    std::size_t hits_a = 0;         // U-HIT solution sizes
    std::size_t hits_b = 0;
    bool cover_added = false;       // one square added for the last uncovered point
};

/// Squares (in the working frame) giving each pair a square that holds exactly one of them.
bool stabs_all(const WorkingFrame& frame, const std::vector<Point2>& centers);

/// Throws std::logic_error if a pipeline invariant fails.
ContinuousResult continuous_disc_code(const Instance2D& inst, const ContinuousOptions& options = {});

} // namespace disc
