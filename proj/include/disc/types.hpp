#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace disc {

/// Coordinates are integers in units of an instance-wide scale (a power of two).
using Coord = std::int64_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;
using IndexSet = std::vector<std::size_t>;

inline constexpr Coord coord_min = std::numeric_limits<Coord>::min() / 4;
inline constexpr Coord coord_max = std::numeric_limits<Coord>::max() / 4;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point that no object covers, or a pair of points that cannot be told apart.
struct Witness {
    std::size_t first = 0;
    std::optional<std::size_t> second;

    [[nodiscard]] bool is_pair() const { return second.has_value(); }
    [[nodiscard]] std::string describe() const;
};

class Infeasible : public std::runtime_error {
public:
    Infeasible(const std::string& what, Witness w) : std::runtime_error(what), witness_(w) {}
    [[nodiscard]] const Witness& witness() const { return witness_; }

private:
    Witness witness_;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point2 {
    Coord x = 0;
    Coord y = 0;

    auto operator<=>(const Point2&) const = default;
};

/// One axis of a rectilinear region; each end may be open or closed.
struct Range {
    Coord lo = 0;
    Coord hi = 0;
    bool lo_closed = true;
    bool hi_closed = true;

    [[nodiscard]] static Range closed(Coord lo, Coord hi) { return {lo, hi, true, true}; }
    [[nodiscard]] static Range everything() { return {coord_min, coord_max, false, false}; }

    [[nodiscard]] bool contains(Coord v) const {
        return (lo_closed ? v >= lo : v > lo) && (hi_closed ? v <= hi : v < hi);
    }
    [[nodiscard]] bool empty() const {
        return lo > hi || (lo == hi && !(lo_closed && hi_closed));
    }
    /// Non-strict containment of `other` in `*this` as point sets (empty ranges are contained).
    [[nodiscard]] bool covers(const Range& other) const;
    [[nodiscard]] Range intersect(const Range& other) const;
    [[nodiscard]] bool overlaps(const Range& other) const { return !intersect(other).empty(); }
    [[nodiscard]] Range mirrored() const { return {-hi, -lo, hi_closed, lo_closed}; }

    bool operator==(const Range&) const = default;
};

struct Rect {
    Range x;
    Range y;

    [[nodiscard]] bool contains(Point2 p) const { return x.contains(p.x) && y.contains(p.y); }
    [[nodiscard]] bool empty() const { return x.empty() || y.empty(); }
    [[nodiscard]] bool covers(const Rect& o) const {
        return o.empty() || (x.covers(o.x) && y.covers(o.y));
    }
    [[nodiscard]] Rect intersect(const Rect& o) const { return {x.intersect(o.x), y.intersect(o.y)}; }
    [[nodiscard]] Rect transposed() const { return {y, x}; }

    bool operator==(const Rect&) const = default;
};

[[nodiscard]] IndexSet to_indices(const Bitset& b);
[[nodiscard]] Bitset from_indices(const IndexSet& idx, std::size_t size);

} // namespace disc
