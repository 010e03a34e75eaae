#include "disc/instance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace disc {

std::string Witness::describe() const {
    std::ostringstream out;
    if (second)
        out << "points " << first << " and " << *second << " share a code";
    else
        out << "point " << first << " is not covered";
    return out.str();
}

bool Range::covers(const Range& o) const {
    if (o.empty())
        return true;
    bool lo_ok = lo < o.lo || (lo == o.lo && (lo_closed || !o.lo_closed));
    bool hi_ok = hi > o.hi || (hi == o.hi && (hi_closed || !o.hi_closed));
    return lo_ok && hi_ok;
}

Range Range::intersect(const Range& o) const {
    Range r;
    if (lo > o.lo) {
        r.lo = lo;
        r.lo_closed = lo_closed;
    } else if (lo < o.lo) {
        r.lo = o.lo;
        r.lo_closed = o.lo_closed;
    } else {
        r.lo = lo;
        r.lo_closed = lo_closed && o.lo_closed;
    }
    if (hi < o.hi) {
        r.hi = hi;
        r.hi_closed = hi_closed;
    } else if (hi > o.hi) {
        r.hi = o.hi;
        r.hi_closed = o.hi_closed;
    } else {
        r.hi = hi;
        r.hi_closed = hi_closed && o.hi_closed;
    }
    return r;
}

IndexSet to_indices(const Bitset& b) {
    IndexSet out;
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
        out.push_back(i);
    return out;
}

Bitset from_indices(const IndexSet& idx, std::size_t size) {
    Bitset b(size);
    for (auto i : idx)
        b.set(i);
    return b;
}

Instance2D Instance2D::rescaled(Coord factor) const {
    Instance2D out;
    out.scale = scale * factor;
    for (auto p : points)
        out.points.push_back({p.x * factor, p.y * factor});
    if (squares) {
        out.squares.emplace();
        for (auto c : *squares)
            out.squares->push_back({c.x * factor, c.y * factor});
    }
    return out;
}

namespace {

bool is_power_of_two(Coord v) { return v > 0 && (v & (v - 1)) == 0; }

} // namespace

std::vector<std::string> validate(const Instance1D& inst) {
    if (!is_power_of_two(inst.scale))
        throw InputError("scale must be a positive power of two");
    for (std::size_t i = 1; i < inst.points.size(); ++i)
        if (inst.points[i] <= inst.points[i - 1])
            throw InputError("points must be strictly increasing (index " + std::to_string(i) + ")");
    for (std::size_t i = 0; i < inst.intervals.size(); ++i)
        if (inst.intervals[i].left >= inst.intervals[i].right)
            throw InputError("interval " + std::to_string(i) + " has left >= right");

    std::vector<std::string> warnings;
    std::vector<Coord> all(inst.points);
    for (const auto& s : inst.intervals) {
        all.push_back(s.left);
        all.push_back(s.right);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        warnings.emplace_back("coordinates are not pairwise distinct; boundary cases use closed containment");
    return warnings;
}

std::vector<std::string> validate(const Instance2D& inst) {
    if (!is_power_of_two(inst.scale))
        throw InputError("scale must be a positive power of two");
    std::set<Point2> seen(inst.points.begin(), inst.points.end());
    if (seen.size() != inst.points.size())
        throw InputError("points must be pairwise distinct");
    if (inst.squares && inst.squares->empty())
        throw InputError("discrete instance needs at least one square");

    std::vector<std::string> warnings;
    if (inst.squares) {
        // A point on a square's boundary is a tie.
        for (auto c : *inst.squares)
            for (auto p : inst.points) {
                Coord dx = 2 * std::abs(p.x - c.x);
                Coord dy = 2 * std::abs(p.y - c.y);
                if ((dx == inst.scale && dy <= inst.scale) || (dy == inst.scale && dx <= inst.scale)) {
                    warnings.emplace_back("a point lies on a square boundary; closed containment applies");
                    return warnings;
                }
            }
    }
    return warnings;
}

bool contains(const ScaledInterval& object, Scaled1 point) {
    if (object.scale != point.scale)
        throw InputError("scale mismatch between interval and point");
    return interval_contains(object.interval, point.value);
}

bool contains(const ScaledSquare& object, Scaled2 point) {
    if (object.scale != point.scale)
        throw InputError("scale mismatch between square and point");
    return square_contains(object.center, object.scale, point.value);
}

Incidence::Incidence(std::size_t points, std::size_t objects)
    : objects_(objects), rows_(points, Bitset(objects)) {}

Incidence incidence(const Instance1D& inst) {
    Incidence inc(inst.n(), inst.m());
    for (std::size_t j = 0; j < inst.m(); ++j) {
        const auto& s = inst.intervals[j];
        auto first = std::lower_bound(inst.points.begin(), inst.points.end(), s.left);
        for (auto it = first; it != inst.points.end() && *it <= s.right; ++it)
            inc.set(j, static_cast<std::size_t>(it - inst.points.begin()));
    }
    return inc;
}

Incidence incidence(const Instance2D& inst, const std::vector<Point2>& centers) {
    Incidence inc(inst.n(), centers.size());
    for (std::size_t j = 0; j < centers.size(); ++j)
        for (std::size_t i = 0; i < inst.n(); ++i)
            if (square_contains(centers[j], inst.scale, inst.points[i]))
                inc.set(j, i);
    return inc;
}

Incidence incidence(const Instance2D& inst) {
    if (!inst.squares)
        throw InputError("continuous instance has no square list");
    return incidence(inst, *inst.squares);
}

Code code_of(const Incidence& inc, const IndexSet& chosen, std::size_t point) {
    Code code;
    for (auto j : chosen)
        if (inc.contains(j, point))
            code.push_back(j);
    std::sort(code.begin(), code.end());
    code.erase(std::unique(code.begin(), code.end()), code.end());
    return code;
}

Code code_of(const Instance1D& inst, const IndexSet& chosen, std::size_t point) {
    Code code;
    for (auto j : chosen)
        if (interval_contains(inst.intervals[j], inst.points[point]))
            code.push_back(j);
    std::sort(code.begin(), code.end());
    code.erase(std::unique(code.begin(), code.end()), code.end());
    return code;
}

namespace {

/// Sort point indices by code signature and report the first uncovered point or equal pair.
DiscCheck check_signatures(const std::vector<Bitset>& codes) {
    for (std::size_t i = 0; i < codes.size(); ++i)
        if (codes[i].none())
            return {false, Witness{i, std::nullopt}};

    std::vector<std::size_t> order(codes.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> hashes(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i)
        hashes[i] = boost::hash_value(codes[i]);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (hashes[a] != hashes[b])
            return hashes[a] < hashes[b];
        if (codes[a] != codes[b])
            return codes[a] < codes[b];
        return a < b;
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        auto a = order[k - 1];
        auto b = order[k];
        if (hashes[a] == hashes[b] && codes[a] == codes[b])
            return {false, Witness{std::min(a, b), std::max(a, b)}};
    }
    return {};
}

} // namespace

DiscCheck is_disc_code(const Incidence& inc, const IndexSet& chosen) {
    Bitset mask(inc.objects());
    for (auto j : chosen) {
        if (j >= inc.objects())
            throw InputError("chosen index " + std::to_string(j) + " out of range");
        mask.set(j);
    }
    std::vector<Bitset> codes;
    codes.reserve(inc.points());
    for (std::size_t i = 0; i < inc.points(); ++i)
        codes.push_back(inc.row(i) & mask);
    return check_signatures(codes);
}

DiscCheck is_disc_code(const Instance1D& inst, const IndexSet& chosen) {
    return is_disc_code(incidence(inst), chosen);
}

DiscCheck is_disc_code(const Instance2D& inst, const IndexSet& chosen) {
    return is_disc_code(incidence(inst), chosen);
}

DiscCheck is_disc_code(const Instance2D& inst, const std::vector<Point2>& centers) {
    auto inc = incidence(inst, centers);
    IndexSet all(centers.size());
    std::iota(all.begin(), all.end(), 0);
    return is_disc_code(inc, all);
}

DiscCheck check_twin_free(const Incidence& inc) {
    std::vector<Bitset> codes;
    codes.reserve(inc.points());
    for (std::size_t i = 0; i < inc.points(); ++i)
        codes.push_back(inc.row(i));
    return check_signatures(codes);
}

DiscCheck check_twin_free(const Instance1D& inst) { return check_twin_free(incidence(inst)); }
DiscCheck check_twin_free(const Instance2D& inst) {
    if (inst.discrete())
        return check_twin_free(incidence(inst));
    // A free unit square can always hold one of two distinct points and miss the other.
    for (std::size_t a = 0; a < inst.n(); ++a)
        for (std::size_t b = a + 1; b < inst.n(); ++b)
            if (inst.points[a] == inst.points[b])
                return {false, Witness{a, b}};
    return {true, std::nullopt};
}

GapList gaps(const std::vector<Coord>& points) {
    GapList out;
    out.reserve(points.size() + 1);
    std::optional<Coord> prev;
    for (auto p : points) {
        out.push_back({prev, p});
        prev = p;
    }
    out.push_back({prev, std::nullopt});
    return out;
}

std::size_t left_gap(const std::vector<Coord>& points, Coord left) {
    return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), left) - points.begin());
}

std::size_t right_gap(const std::vector<Coord>& points, Coord right) {
    return static_cast<std::size_t>(std::upper_bound(points.begin(), points.end(), right) - points.begin());
}

IndexSet PrunedInstance::to_original(const IndexSet& pruned) const {
    IndexSet out;
    out.reserve(pruned.size());
    for (auto j : pruned)
        out.push_back(original.at(j));
    std::sort(out.begin(), out.end());
    return out;
}

PrunedInstance prune_1d(const Instance1D& inst) {
    PrunedInstance out;
    out.instance.scale = inst.scale;
    out.instance.points = inst.points;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_gaps;  // gap pair -> original index
    for (std::size_t j = 0; j < inst.m(); ++j) {
        const auto& s = inst.intervals[j];
        auto a = left_gap(inst.points, s.left);
        auto b = right_gap(inst.points, s.right);
        if (a == b) {
            out.removed.push_back({j, PruneEntry::Reason::useless, std::nullopt});
            continue;
        }
        auto [it, inserted] = by_gaps.try_emplace({a, b}, j);
        if (!inserted) {
            out.removed.push_back({j, PruneEntry::Reason::redundant, it->second});
            continue;
        }
        out.instance.intervals.push_back(s);
        out.original.push_back(j);
    }
    return out;
}

} // namespace disc
