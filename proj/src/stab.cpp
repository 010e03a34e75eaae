#include "disc/stab.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace disc {

namespace {

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return boost::hash_value(b); }
};

/// Xa \ Xb on one axis for overlapping closed ranges [a-h, a+h], [b-h, b+h].
std::optional<Range> axis_difference(Coord a, Coord b, Coord half) {
    if (b > a)
        return Range{a - half, b - half, true, false};
    if (b < a)
        return Range{b + half, a + half, false, true};
    return std::nullopt;
}

LShape one_side(Point2 a, Point2 b, Coord half, bool disjoint) {
    Rect da = center_region(a, half);
    LShape out;
    if (disjoint) {
        out.type_a = da;
        return out;
    }
    if (auto xs = axis_difference(a.x, b.x, half))
        out.type_a = Rect{*xs, da.y};
    if (auto ys = axis_difference(a.y, b.y, half))
        out.type_b = Rect{da.x, *ys};
    return out;
}

std::vector<Coord> sorted_unique(std::vector<Coord> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Coord> cell_midpoints(const std::vector<Coord>& edges) {
    std::vector<Coord> mids;
    for (std::size_t i = 1; i < edges.size(); ++i) {
        Coord s = edges[i - 1] + edges[i];
        if (s % 2 != 0)
            throw InputError("candidate_points needs even edge coordinates");
        mids.push_back(s / 2);
    }
    return mids;
}

IndexSet members(const std::vector<Point2>& pts, const auto& region) {
    IndexSet out;
    for (std::size_t q = 0; q < pts.size(); ++q)
        if (region.contains(pts[q]))
            out.push_back(q);
    return out;
}

void push_unique(std::vector<Rect>& v, const Rect& r) {
    if (std::find(v.begin(), v.end(), r) == v.end())
        v.push_back(r);
}

} // namespace

WorkingFrame WorkingFrame::from(const Instance2D& inst) {
    WorkingFrame f;
    f.scale = inst.scale * working_factor;
    for (auto p : inst.points)
        f.points.push_back({p.x * working_factor, p.y * working_factor});
    return f;
}

Rect center_region(Point2 p, Coord half) {
    return {Range::closed(p.x - half, p.x + half), Range::closed(p.y - half, p.y + half)};
}

std::vector<Rect> LShape::rects() const {
    std::vector<Rect> out;
    if (type_a)
        out.push_back(*type_a);
    if (type_b)
        out.push_back(*type_b);
    return out;
}

std::vector<Rect> StabObject::rects() const {
    auto out = region_a.rects();
    auto more = region_b.rects();
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

StabObject stab_region(Point2 a, Point2 b, Coord half) {
    if (a == b)
        throw InputError("stab_region needs distinct endpoints");
    Coord dx = std::abs(a.x - b.x);
    Coord dy = std::abs(a.y - b.y);
    bool disjoint = dx > 2 * half || dy > 2 * half;
    StabObject obj{a, b, one_side(a, b, half, disjoint), one_side(b, a, half, disjoint), StabShape::two_squares};
    if (!disjoint)
        obj.shape = (dx != 0 && dy != 0) ? StabShape::l_pair : StabShape::slab_pair;
    return obj;
}

std::vector<std::pair<std::size_t, std::size_t>> build_segments(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.emplace_back(i, j);
    return out;
}

std::vector<StabObject> stab_objects(const WorkingFrame& frame) {
    std::vector<StabObject> out;
    for (auto [i, j] : build_segments(frame.points.size()))
        out.push_back(stab_region(frame.points[i], frame.points[j], frame.half()));
    return out;
}

CandidateSet candidate_points(const std::vector<Rect>& rects) {
    std::vector<Coord> xs, ys;
    for (const auto& r : rects) {
        if (r.empty())
            continue;
        xs.push_back(r.x.lo);
        xs.push_back(r.x.hi);
        ys.push_back(r.y.lo);
        ys.push_back(r.y.hi);
    }
    auto mx = cell_midpoints(sorted_unique(std::move(xs)));
    auto my = cell_midpoints(sorted_unique(std::move(ys)));

    CandidateSet out;
    std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
    for (auto x : mx)
        for (auto y : my) {
            Point2 c{x, y};
            Bitset sig(rects.size());
            for (std::size_t k = 0; k < rects.size(); ++k)
                if (rects[k].contains(c))
                    sig.set(k);
            if (sig.none() || seen.count(sig))
                continue;
            seen.emplace(sig, out.points.size());
            out.points.push_back(c);
            out.hits.push_back(std::move(sig));
        }
    return out;
}

std::vector<Point2> face_candidates(const WorkingFrame& frame) {
    Coord h = frame.half();
    auto axis_values = [&](auto coord) {
        std::vector<Coord> edges;
        for (auto p : frame.points) {
            edges.push_back(coord(p) - h);
            edges.push_back(coord(p) + h);
        }
        edges = sorted_unique(std::move(edges));
        auto values = edges;
        for (auto m : cell_midpoints(edges))
            values.push_back(m);
        return sorted_unique(std::move(values));
    };
    auto xs = axis_values([](Point2 p) { return p.x; });
    auto ys = axis_values([](Point2 p) { return p.y; });

    std::vector<Point2> out;
    std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
    for (auto x : xs)
        for (auto y : ys) {
            Point2 c{x, y};
            Bitset sig(frame.points.size());
            for (std::size_t i = 0; i < frame.points.size(); ++i)
                if (square_contains(c, frame.scale, frame.points[i]))
                    sig.set(i);
            if (sig.none() || seen.count(sig))
                continue;
            seen.emplace(sig, out.size());
            out.push_back(c);
        }
    return out;
}

CascadeResult cascade_round(const WorkingFrame& frame, std::vector<Point2> candidates) {
    constexpr double half_mass = 0.5 - 1e-7;
    CascadeResult res;
    res.objects = stab_objects(frame);
    if (candidates.empty()) {
        std::vector<Rect> all;
        for (const auto& o : res.objects)
            for (const auto& r : o.rects())
                all.push_back(r);
        candidates = candidate_points(all).points;
    }
    res.candidates = std::move(candidates);
    const auto& q = res.candidates;
    auto segments = build_segments(frame.points.size());

    res.z0.variables = q.size();
    for (std::size_t k = 0; k < res.objects.size(); ++k) {
        const auto& o = res.objects[k];
        CoverConstraint c{members(q, o.region_a), members(q, o.region_b)};
        if (c.side_a.empty() && c.side_b.empty())
            throw Infeasible("no candidate separates a point pair",
                             Witness{segments[k].first, segments[k].second});
        res.z0.constraints.push_back(std::move(c));
    }
    res.z0_solution = solve_lp(res.z0);

    struct Chosen {
        const LShape* region;
    };
    std::vector<Chosen> chosen;
    for (std::size_t k = 0; k < res.objects.size(); ++k) {
        Side s = side_split(res.z0_solution, k);
        res.sides.push_back(s);
        if (s != Side::b)
            chosen.push_back({&res.objects[k].region_a});
        if (s != Side::a)
            chosen.push_back({&res.objects[k].region_b});
    }

    res.z1.variables = q.size();
    std::vector<IndexSet> z1_sets;
    std::vector<IndexSet> in_a, in_b;
    for (const auto& ch : chosen) {
        IndexSet a = ch.region->type_a ? members(q, *ch.region->type_a) : IndexSet{};
        IndexSet b = ch.region->type_b ? members(q, *ch.region->type_b) : IndexSet{};
        IndexSet b_only;
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(b_only));
        IndexSet all = members(q, *ch.region);
        if (all.empty())
            throw std::logic_error("chosen region holds no candidate");
        res.z1.constraints.push_back({a, b_only});
        z1_sets.push_back(std::move(all));
        in_a.push_back(std::move(a));
        in_b.push_back(std::move(b));
    }
    res.z1_doubling_feasible = covers_all(doubled(res.z0_solution.values), z1_sets);
    if (!res.z1_doubling_feasible)
        throw std::logic_error("doubled Z0 solution is not feasible for Z1");
    res.z1_solution = solve_lp(res.z1);

    const auto& x1 = res.z1_solution.values;
    std::vector<IndexSet> family_sets;
    for (std::size_t r = 0; r < chosen.size(); ++r) {
        const auto& region = *chosen[r].region;
        bool placed = false;
        if (region.type_a && sigma(x1, in_a[r]) >= half_mass) {
            push_unique(res.family_a, *region.type_a);
            family_sets.push_back(in_a[r]);
            placed = true;
        }
        if (region.type_b && sigma(x1, in_b[r]) >= half_mass) {
            push_unique(res.family_b, *region.type_b);
            family_sets.push_back(in_b[r]);
            placed = true;
        }
        if (!placed)
            throw std::logic_error("neither half of a chosen region carries half the LP mass");
    }
    res.z2_doubling_feasible = covers_all(doubled(x1), family_sets);
    if (!res.z2_doubling_feasible)
        throw std::logic_error("doubled Z1 solution is not feasible for the rectangle families");
    return res;
}

} // namespace disc
