#pragma once

#include "disc/types.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace disc {

struct Interval {
    Coord left = 0;
    Coord right = 0;

    bool operator==(const Interval&) const = default;
};

/// Points on a line and closed intervals, all in units of `scale`.
struct Instance1D {
    Coord scale = 1;
    std::vector<Coord> points;      // strictly increasing
    std::vector<Interval> intervals;

    [[nodiscard]] std::size_t n() const { return points.size(); }
    [[nodiscard]] std::size_t m() const { return intervals.size(); }
};

/// Points in the plane with unit squares (side == scale). Without a square list the
/// instance is continuous: squares may be placed anywhere.
struct Instance2D {
    Coord scale = 1;
    std::vector<Point2> points;
    std::optional<std::vector<Point2>> squares;  // centers

    [[nodiscard]] std::size_t n() const { return points.size(); }
    [[nodiscard]] bool discrete() const { return squares.has_value(); }
    /// Same geometry with every coordinate and the scale multiplied by `factor`.
    [[nodiscard]] Instance2D rescaled(Coord factor) const;
};

/// Throws InputError on a malformed instance; returns warnings for inputs that are valid but
/// not in general position (closed containment then decides boundary cases).
std::vector<std::string> validate(const Instance1D& inst);
std::vector<std::string> validate(const Instance2D& inst);

// ---- containment -----------------------------------------------------------------------

/// A coordinate tagged with the scale it is expressed in.
struct Scaled1 {
    Coord value = 0;
    Coord scale = 1;
};
struct ScaledInterval {
    Interval interval;
    Coord scale = 1;
};
struct Scaled2 {
    Point2 value;
    Coord scale = 1;
};
struct ScaledSquare {
    Point2 center;
    Coord scale = 1;
};

/// Closed containment. Throws InputError when the scales differ.
bool contains(const ScaledInterval& object, Scaled1 point);
bool contains(const ScaledSquare& object, Scaled2 point);

inline bool interval_contains(const Interval& s, Coord x) { return s.left <= x && x <= s.right; }
/// |dx| <= side/2 and |dy| <= side/2, evaluated without division.
inline bool square_contains(Point2 center, Coord side, Point2 p) {
    Coord dx = p.x - center.x;
    Coord dy = p.y - center.y;
    if (dx < 0) dx = -dx;
    if (dy < 0) dy = -dy;
    return 2 * dx <= side && 2 * dy <= side;
}

// ---- codes -----------------------------------------------------------------------------

/// Sorted indices of the chosen objects containing a point.
using Code = std::vector<std::size_t>;

/// Point-by-object containment table; row i holds the objects containing point i.
class Incidence {
public:
    Incidence() = default;
    Incidence(std::size_t points, std::size_t objects);

    [[nodiscard]] std::size_t points() const { return rows_.size(); }
    [[nodiscard]] std::size_t objects() const { return objects_; }
    [[nodiscard]] const Bitset& row(std::size_t p) const { return rows_[p]; }
    [[nodiscard]] bool contains(std::size_t object, std::size_t point) const { return rows_[point][object]; }
    void set(std::size_t object, std::size_t point) { rows_[point].set(object); }

private:
    std::size_t objects_ = 0;
    std::vector<Bitset> rows_;
};

Incidence incidence(const Instance1D& inst);
/// Discrete instances use their square list; pass explicit centers for continuous solutions.
Incidence incidence(const Instance2D& inst);
Incidence incidence(const Instance2D& inst, const std::vector<Point2>& centers);

Code code_of(const Incidence& inc, const IndexSet& chosen, std::size_t point);
Code code_of(const Instance1D& inst, const IndexSet& chosen, std::size_t point);

struct DiscCheck {
    bool ok = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return ok; }
};

/// Every point gets a nonempty code and all codes are pairwise distinct.
DiscCheck is_disc_code(const Incidence& inc, const IndexSet& chosen);
DiscCheck is_disc_code(const Instance1D& inst, const IndexSet& chosen);
DiscCheck is_disc_code(const Instance2D& inst, const IndexSet& chosen);
/// Continuous 2D: squares centered at `centers`, expressed in the instance scale.
DiscCheck is_disc_code(const Instance2D& inst, const std::vector<Point2>& centers);

/// Twin-free test by sorting full-set code signatures.
DiscCheck check_twin_free(const Incidence& inc);
DiscCheck check_twin_free(const Instance1D& inst);
DiscCheck check_twin_free(const Instance2D& inst);

// ---- 1D preprocessing -------------------------------------------------------------------

/// Open gap between consecutive points; `left`/`right` absent means unbounded.
struct Gap {
    std::optional<Coord> left;
    std::optional<Coord> right;

    bool operator==(const Gap&) const = default;
};
using GapList = std::vector<Gap>;

GapList gaps(const std::vector<Coord>& points);

/// Gap index (0..n) holding the left end of an interval: number of points strictly left of it.
std::size_t left_gap(const std::vector<Coord>& points, Coord left);
/// Gap index holding the right end: number of points at or left of it.
std::size_t right_gap(const std::vector<Coord>& points, Coord right);

struct PruneEntry {
    enum class Reason { useless, redundant };
    std::size_t index = 0;       // original index of the removed interval
    Reason reason = Reason::useless;
    std::optional<std::size_t> kept;  // for redundant removals: the surviving original index
};

struct PrunedInstance {
    Instance1D instance;
    std::vector<std::size_t> original;  // pruned index -> original index
    std::vector<PruneEntry> removed;

    [[nodiscard]] IndexSet to_original(const IndexSet& pruned) const;
};

/// Drops intervals covering no point and keeps the lowest-index interval of each gap pair.
PrunedInstance prune_1d(const Instance1D& inst);

} // namespace disc
