#include "disc/discrete2d.hpp"

#include "disc/continuous2d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace disc {

namespace {

/// Orders left ends: a closed end starts before an open end at the same coordinate.
std::pair<Coord, int> left_key(const Range& r) { return {r.lo, r.lo_closed ? 0 : 1}; }
/// Orders right ends: an open end finishes before a closed end at the same coordinate.
std::pair<Coord, int> right_key(const Range& r) { return {r.hi, r.hi_closed ? 1 : 0}; }

IndexSet points_in(const std::vector<Point2>& pts, const Rect& r) {
    IndexSet out;
    for (std::size_t q = 0; q < pts.size(); ++q)
        if (r.contains(pts[q]))
            out.push_back(q);
    return out;
}

Rect mirrored_x(const Rect& r) { return {r.x.mirrored(), r.y}; }

void append(IndexSet& to, const IndexSet& from) { to.insert(to.end(), from.begin(), from.end()); }

void normalize(IndexSet& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::vector<LineProblem> line_decompose(const std::vector<Rect>& rects, const std::vector<Point2>& candidates,
                                        Coord unit) {
    if (rects.empty())
        return {};
    std::vector<Coord> residues;
    Coord bottom = rects.front().y.lo;
    for (const auto& r : rects) {
        if (r.y.hi - r.y.lo != unit)
            throw InputError("line decomposition needs rectangles of unit height");
        residues.push_back(((r.y.lo % unit) + unit) % unit);
        bottom = std::min(bottom, r.y.lo);
    }
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    Coord gap = unit - residues.back() + residues.front();
    for (std::size_t i = 1; i < residues.size(); ++i)
        gap = std::min(gap, residues[i] - residues[i - 1]);
    if (gap < 2)
        throw std::logic_error("rectangle edges too close for an integer line offset");
    const Coord y0 = bottom - gap / 2;

    std::map<Coord, LineProblem> lines;
    for (const auto& r : rects) {
        Coord lambda = y0 + ((r.y.lo - y0) / unit + 1) * unit;
        if (!(r.y.lo < lambda && lambda < r.y.hi))
            throw std::logic_error("line assignment failed");
        auto& line = lines[lambda];
        line.lambda = lambda;
        line.rects.push_back(r);
    }
    std::vector<LineProblem> out;
    for (auto& [lambda, line] : lines) {
        for (auto c : candidates)
            if (std::any_of(line.rects.begin(), line.rects.end(), [&](const Rect& r) { return r.contains(c); }))
                line.points.push_back(c);
        out.push_back(std::move(line));
    }
    return out;
}

LineSplit split_above_below(const LineProblem& line) {
    const Coord lambda = line.lambda;
    LineSplit split;
    split.lp.variables = line.points.size();
    for (std::size_t r = 0; r < line.rects.size(); ++r) {
        CoverConstraint c;
        for (auto q : points_in(line.points, line.rects[r]))
            (line.points[q].y >= lambda ? c.side_a : c.side_b).push_back(q);
        if (c.side_a.empty() && c.side_b.empty())
            throw Infeasible("rectangle holds no candidate", Witness{r, std::nullopt});
        split.lp.constraints.push_back(std::move(c));
    }
    split.solution = solve_lp(split.lp);
    if (!covers_all(doubled(split.solution.values), [&] {
            std::vector<IndexSet> one_sided;
            for (std::size_t r = 0; r < line.rects.size(); ++r) {
                Side s = side_split(split.solution, r);
                one_sided.push_back(s == Side::b ? split.lp.constraints[r].side_b : split.lp.constraints[r].side_a);
            }
            return one_sided;
        }()))
        throw std::logic_error("doubled line LP solution is not feasible for the one-sided problems");

    split.above.lambda = split.below.lambda = lambda;
    for (std::size_t r = 0; r < line.rects.size(); ++r) {
        Side s = side_split(split.solution, r);
        split.sides.push_back(s);
        const Rect& rect = line.rects[r];
        if (s != Side::b) {
            split.above.rects.push_back({rect.x, {lambda, rect.y.hi, true, rect.y.hi_closed}});
            split.above.rect_ids.push_back(r);
        }
        if (s != Side::a) {
            split.below.rects.push_back({rect.x, {lambda, 2 * lambda - rect.y.lo, false, rect.y.lo_closed}});
            split.below.rect_ids.push_back(r);
        }
    }
    for (std::size_t q = 0; q < line.points.size(); ++q) {
        Point2 p = line.points[q];
        if (p.y >= lambda) {
            if (std::any_of(split.above.rects.begin(), split.above.rects.end(), [&](const Rect& r) { return r.contains(p); })) {
                split.above.points.push_back(p);
                split.above.point_ids.push_back(q);
            }
        } else {
            Point2 m{p.x, 2 * lambda - p.y};
            if (std::any_of(split.below.rects.begin(), split.below.rects.end(), [&](const Rect& r) { return r.contains(m); })) {
                split.below.points.push_back(m);
                split.below.point_ids.push_back(q);
            }
        }
    }
    return split;
}

IndexSet anchored_mis(const std::vector<Rect>& rects) {
    IndexSet order(rects.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return right_key(rects[a].x) < right_key(rects[b].x); });
    IndexSet out;
    for (auto i : order)
        if (out.empty() || !rects[out.back()].x.overlaps(rects[i].x))
            out.push_back(i);
    return out;
}

std::optional<std::size_t> lowest_point(const std::vector<Point2>& points, const Rect& region) {
    std::optional<std::size_t> best;
    for (std::size_t q = 0; q < points.size(); ++q) {
        if (!region.contains(points[q]))
            continue;
        if (!best || std::pair{points[q].y, points[q].x} < std::pair{points[*best].y, points[*best].x})
            best = q;
    }
    return best;
}

IndexSet staircase_greedy(const std::vector<Rect>& parts, const std::vector<Point2>& candidates) {
    std::vector<Bitset> hit(parts.size(), Bitset(candidates.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (auto q : points_in(candidates, parts[i]))
            hit[i].set(q);
        if (hit[i].none())
            throw Infeasible("part holds no candidate", Witness{i, std::nullopt});
    }
    std::vector<bool> alive(parts.size(), true);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size() && alive[i]; ++j)
            if (j != i && alive[j] && hit[j].is_subset_of(hit[i]) && (hit[j] != hit[i] || j < i))
                alive[i] = false;

    IndexSet chosen;
    for (;;) {
        std::optional<std::size_t> next;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!alive[i])
                continue;
            if (!next || std::pair{left_key(parts[i].x), right_key(parts[i].y)} <
                             std::pair{left_key(parts[*next].x), right_key(parts[*next].y)})
                next = i;
        }
        if (!next)
            break;
        std::size_t pick = hit[*next].find_first();
        for (auto q = hit[*next].find_next(pick); q != Bitset::npos; q = hit[*next].find_next(q)) {
            const auto& a = candidates[q];
            const auto& b = candidates[pick];
            if (a.x > b.x || (a.x == b.x && a.y < b.y))
                pick = q;
        }
        chosen.push_back(pick);
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (alive[i] && hit[i][pick])
                alive[i] = false;
    }
    normalize(chosen);
    return chosen;
}

AnchoredReport solve_anchored(const AnchoredProblem& problem) {
    AnchoredReport rep;
    const auto& rects = problem.rects;
    const auto& pts = problem.points;
    if (rects.empty())
        return rep;

    rep.mis = anchored_mis(rects);

    // Slabs left to right: strip, member, strip, ..., member, strip.
    std::vector<Range> slabs;
    Range strip = Range::everything();
    for (auto m : rep.mis) {
        const Range& x = rects[m].x;
        strip.hi = x.lo;
        strip.hi_closed = !x.lo_closed;
        slabs.push_back(strip);
        slabs.push_back(x);
        strip = Range::everything();
        strip.lo = x.hi;
        strip.lo_closed = !x.hi_closed;
    }
    slabs.push_back(strip);

    for (auto m : rep.mis) {
        auto seed = lowest_point(pts, rects[m]);
        if (!seed)
            throw std::logic_error("independent rectangle holds no candidate");
        rep.seeds.push_back(*seed);
    }
    for (std::size_t s = 0; s < slabs.size(); s += 2)
        if (auto seed = lowest_point(pts, {slabs[s], Range::everything()}))
            rep.seeds.push_back(*seed);

    for (std::size_t r = 0; r < rects.size(); ++r) {
        const Rect& rho = rects[r];
        if (std::any_of(rep.seeds.begin(), rep.seeds.end(), [&](auto q) { return rho.contains(pts[q]); }))
            continue;
        Residual res;
        res.rect = r;
        bool first = true;
        for (std::size_t s = 0; s < slabs.size(); ++s)
            if (rho.x.overlaps(slabs[s])) {
                if (first)
                    res.left_slab = s;
                res.right_slab = s;
                first = false;
            }
        res.left_part = {rho.x.intersect(slabs[res.left_slab]), rho.y};
        res.right_part = {rho.x.intersect(slabs[res.right_slab]), rho.y};
        bool spans = false;
        for (auto m : rep.mis)
            spans = spans || rho.x.covers(rects[m].x);
        if (points_in(pts, res.left_part).empty() && points_in(pts, res.right_part).empty())
            res.cls = ResidualClass::middle;
        else if (spans)
            res.cls = ResidualClass::r3;
        else if (res.right_slab % 2 == 1)
            res.cls = ResidualClass::r1;
        else
            res.cls = ResidualClass::r2;
        rep.residuals.push_back(res);
    }

    CoverLP v;
    v.variables = pts.size();
    IndexSet ends;
    for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
        const auto& res = rep.residuals[i];
        if (res.cls == ResidualClass::middle)
            continue;
        CoverConstraint c{points_in(pts, res.left_part), IndexSet{}};
        if (res.right_slab != res.left_slab)
            c.side_b = points_in(pts, res.right_part);
        v.constraints.push_back(std::move(c));
        ends.push_back(i);
    }
    std::map<std::size_t, std::vector<Rect>> left_groups, right_groups;
    std::vector<Rect> middle;
    if (!v.constraints.empty()) {
        auto sol = solve_lp(v);
        for (std::size_t c = 0; c < ends.size(); ++c) {
            const auto& res = rep.residuals[ends[c]];
            auto [s1, s2] = sol.sigma[c];
            if (s1 >= s2 - lp_tolerance) {
                left_groups[res.left_slab].push_back(res.left_part);
                ++rep.left_count;
            } else {
                right_groups[res.right_slab].push_back(mirrored_x(res.right_part));
                ++rep.right_count;
            }
        }
    }
    for (const auto& res : rep.residuals)
        if (res.cls == ResidualClass::middle)
            middle.push_back(rects[res.rect]);

    IndexSet sol = rep.seeds;
    for (const auto& [slab, parts] : left_groups)
        append(sol, staircase_greedy(parts, pts));
    std::vector<Point2> mirrored = pts;
    for (auto& p : mirrored)
        p.x = -p.x;
    for (const auto& [slab, parts] : right_groups)
        append(sol, staircase_greedy(parts, mirrored));
    if (!middle.empty())
        append(sol, staircase_greedy(middle, pts));
    normalize(sol);

    for (std::size_t r = 0; r < rects.size(); ++r)
        if (std::none_of(sol.begin(), sol.end(), [&](auto q) { return rects[r].contains(pts[q]); }))
            throw std::logic_error("anchored solution misses a rectangle");
    rep.solution = std::move(sol);
    return rep;
}

LineSolution solve_line(const LineProblem& line) {
    LineSolution out;
    if (line.rects.empty())
        return out;
    auto split = split_above_below(line);
    out.lp_objective = split.solution.objective;
    out.above_rects = split.above.rects.size();
    out.below_rects = split.below.rects.size();
    for (const auto* side : {&split.above, &split.below}) {
        auto rep = solve_anchored(*side);
        for (auto q : rep.solution)
            out.points.push_back(side->point_ids[q]);
    }
    normalize(out.points);
    for (std::size_t r = 0; r < line.rects.size(); ++r)
        if (std::none_of(out.points.begin(), out.points.end(),
                         [&](auto q) { return line.rects[r].contains(line.points[q]); }))
            throw std::logic_error("line solution misses a rectangle");
    return out;
}

DiscreteResult discrete_disc_code(const Instance2D& inst, const DiscreteOptions& options) {
    if (!inst.discrete())
        throw InputError("discrete pipeline needs a square list");
    if (!(options.eps > 0.0))
        throw InputError("eps must be positive");
    if (auto tf = check_twin_free(inst); !tf)
        throw Infeasible("instance is not twin-free", *tf.witness);

    DiscreteResult res;
    const auto& squares = *inst.squares;
    if (inst.n() == 0)
        return res;
    if (inst.n() == 1) {
        auto inc = incidence(inst);
        res.chosen.push_back(inc.row(0).find_first());
        return res;
    }
    if (options.fallback && static_cast<double>(inst.n()) <= std::pow(2.0, 1.0 / options.eps)) {
        auto exact = min_disc_code_exact(inst, options.budget);
        if (exact.result.optimal()) {
            res.chosen = exact.result.chosen;
            res.exact = true;
            return res;
        }
    }

    auto frame = WorkingFrame::from(inst);
    std::map<Point2, std::size_t> index_of;
    for (std::size_t j = 0; j < squares.size(); ++j)
        index_of.emplace(Point2{squares[j].x * working_factor, squares[j].y * working_factor}, j);
    std::vector<Point2> centers;
    for (const auto& [c, j] : index_of)
        centers.push_back(c);

    auto cascade = cascade_round(frame, centers);
    res.z0_objective = cascade.z0_solution.objective;
    res.z1_objective = cascade.z1_solution.objective;

    std::vector<Point2> picked;
    for (auto& line : line_decompose(cascade.family_a, centers, frame.scale)) {
        auto sol = solve_line(line);
        for (auto q : sol.points)
            picked.push_back(line.points[q]);
        res.lines.push_back({'A', std::move(line), std::move(sol)});
    }
    std::vector<Rect> family_b;
    for (const auto& r : cascade.family_b)
        family_b.push_back(r.transposed());
    std::vector<Point2> centers_t = centers;
    for (auto& c : centers_t)
        std::swap(c.x, c.y);
    for (auto& line : line_decompose(family_b, centers_t, frame.scale)) {
        auto sol = solve_line(line);
        for (auto q : sol.points)
            picked.push_back({line.points[q].y, line.points[q].x});
        res.lines.push_back({'B', std::move(line), std::move(sol)});
    }
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    if (!stabs_all(frame, picked))
        throw std::logic_error("discrete stabbing solution misses a segment");

    for (auto c : picked)
        res.chosen.push_back(index_of.at(c));
    auto inc = incidence(inst);
    Bitset mask(squares.size());
    for (auto j : res.chosen)
        mask.set(j);
    IndexSet bare;
    for (std::size_t p = 0; p < inst.n(); ++p)
        if ((inc.row(p) & mask).none())
            bare.push_back(p);
    if (bare.size() > 1)
        throw std::logic_error("more than one point uncovered after stabbing");
    if (!bare.empty()) {
        res.chosen.push_back(inc.row(bare.front()).find_first());
        res.cover_added = true;
    }
    normalize(res.chosen);
    if (auto ok = is_disc_code(inst, res.chosen); !ok)
        throw std::logic_error("discrete pipeline produced an invalid code: " + ok.witness->describe());
    return res;
}

} // namespace disc
