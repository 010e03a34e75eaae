#pragma once

// Brute-force references for the tests. Deliberately naive: direct containment, subset
// enumeration in size order, exhaustive matchings. Nothing here calls the library's solvers.

#include "disc/instance.hpp"
#include "disc/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace brute {

using disc::Coord;
using disc::Point2;
using disc::Rect;

using Signature = std::vector<bool>;

inline Signature code_1d(const disc::Instance1D& inst, const std::vector<std::size_t>& chosen, std::size_t p) {
    Signature s(chosen.size());
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        const auto& iv = inst.intervals[chosen[k]];
        s[k] = iv.left <= inst.points[p] && inst.points[p] <= iv.right;
    }
    return s;
}

inline bool in_square(Point2 c, Coord side, Point2 p) {
    // |p - c| <= side / 2 on both axes, compared as doubled integers.
    return std::abs(2 * (p.x - c.x)) <= side && std::abs(2 * (p.y - c.y)) <= side;
}

inline Signature code_2d(const std::vector<Point2>& pts, Coord side, const std::vector<Point2>& centers,
                         std::size_t p) {
    Signature s(centers.size());
    for (std::size_t k = 0; k < centers.size(); ++k)
        s[k] = in_square(centers[k], side, pts[p]);
    return s;
}

inline bool nonempty(const Signature& s) { return std::find(s.begin(), s.end(), true) != s.end(); }

/// Every code nonempty and all codes pairwise different, by direct pairwise comparison.
template <class CodeFn>
bool all_distinct_nonempty(std::size_t n, CodeFn code) {
    std::vector<Signature> codes;
    for (std::size_t p = 0; p < n; ++p) {
        codes.push_back(code(p));
        if (!nonempty(codes.back()))
            return false;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (codes[a] == codes[b])
                return false;
    return true;
}

inline bool is_code_1d(const disc::Instance1D& inst, const std::vector<std::size_t>& chosen) {
    return all_distinct_nonempty(inst.n(), [&](std::size_t p) { return code_1d(inst, chosen, p); });
}

inline bool is_code_2d(const std::vector<Point2>& pts, Coord side, const std::vector<Point2>& centers) {
    return all_distinct_nonempty(pts.size(), [&](std::size_t p) { return code_2d(pts, side, centers, p); });
}

inline std::vector<std::size_t> all_of(std::size_t m) {
    std::vector<std::size_t> v(m);
    for (std::size_t i = 0; i < m; ++i)
        v[i] = i;
    return v;
}

/// Calls `visit` on every k-subset of 0..m-1 in lexicographic order until it returns true.
inline bool for_each_subset(std::size_t m, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (k > m)
        return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        if (visit(idx))
            return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1)
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

/// Smallest k for which some k-subset satisfies `ok`; nullopt if none does.
inline std::optional<std::size_t> min_subset(std::size_t m, const std::function<bool(const std::vector<std::size_t>&)>& ok) {
    for (std::size_t k = 0; k <= m; ++k)
        if (for_each_subset(m, k, ok))
            return k;
    return std::nullopt;
}

inline std::optional<std::size_t> min_code_1d(const disc::Instance1D& inst) {
    return min_subset(inst.m(), [&](const auto& s) { return is_code_1d(inst, s); });
}

inline std::optional<std::size_t> min_code_2d(const disc::Instance2D& inst) {
    const auto& sq = *inst.squares;
    return min_subset(sq.size(), [&](const auto& s) {
        std::vector<Point2> c;
        for (auto j : s)
            c.push_back(sq[j]);
        return is_code_2d(inst.points, inst.scale, c);
    });
}

inline bool twin_free_1d(const disc::Instance1D& inst) { return is_code_1d(inst, all_of(inst.m())); }

inline bool hits(const Rect& r, Point2 p) { return r.contains(p); }

inline std::optional<std::size_t> min_hitting(const std::vector<Rect>& rects, const std::vector<Point2>& cands) {
    return min_subset(cands.size(), [&](const auto& s) {
        return std::all_of(rects.begin(), rects.end(), [&](const Rect& r) {
            return std::any_of(s.begin(), s.end(), [&](std::size_t q) { return hits(r, cands[q]); });
        });
    });
}

/// Maximum matching size by exhaustive branching on the lowest undecided vertex.
inline std::size_t max_matching_size(const disc::Graph& g) {
    std::vector<std::vector<std::size_t>> adj(g.vertices);
    for (const auto& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<bool> used(g.vertices, false);
    std::function<std::size_t(std::size_t)> go = [&](std::size_t v) -> std::size_t {
        while (v < g.vertices && used[v])
            ++v;
        if (v >= g.vertices)
            return 0;
        used[v] = true;
        std::size_t best = go(v + 1);
        for (auto w : adj[v])
            if (!used[w]) {
                used[w] = true;
                best = std::max(best, 1 + go(v + 1));
                used[w] = false;
            }
        used[v] = false;
        return best;
    };
    return go(0);
}

/// Smallest edge set touching every vertex, by enumeration.
inline std::optional<std::size_t> min_edge_cover_size(const disc::Graph& g) {
    return min_subset(g.edges.size(), [&](const auto& s) {
        std::vector<bool> touched(g.vertices, false);
        for (auto e : s)
            touched[g.edges[e].u] = touched[g.edges[e].v] = true;
        return std::all_of(touched.begin(), touched.end(), [](bool b) { return b; });
    });
}

/// Minimum number of free unit squares separating every pair of points (one square holds exactly
/// one of the two). Centers range over a grid fine enough to realize every face of the
/// arrangement of the squares D(p): coordinates p +- half and the midpoints between them.
inline std::optional<std::size_t> min_stab_continuous(const std::vector<Point2>& pts, Coord side) {
    // At 4x scale every square edge 4p +- 2 side is even, so midpoints between edges are integral.
    std::vector<Point2> p4;
    for (auto p : pts)
        p4.push_back({4 * p.x, 4 * p.y});
    const Coord s4 = 4 * side;
    std::set<Coord> xs, ys;
    for (auto p : p4) {
        xs.insert({p.x - s4 / 2, p.x + s4 / 2});
        ys.insert({p.y - s4 / 2, p.y + s4 / 2});
    }
    auto refine = [](const std::set<Coord>& v) {
        std::vector<Coord> out(v.begin(), v.end());
        const std::size_t k = out.size();
        for (std::size_t i = 0; i + 1 < k; ++i)
            out.push_back((out[i] + out[i + 1]) / 2);
        return out;
    };
    std::map<Signature, Point2> faces;
    for (auto x : refine(xs))
        for (auto y : refine(ys)) {
            Signature sig(p4.size());
            for (std::size_t i = 0; i < p4.size(); ++i)
                sig[i] = in_square({x, y}, s4, p4[i]);
            if (nonempty(sig))
                faces.emplace(sig, Point2{x, y});
        }
    std::vector<Signature> sigs;
    for (const auto& [sig, c] : faces)
        sigs.push_back(sig);
    const std::size_t n = pts.size();
    return min_subset(sigs.size(), [&](const auto& s) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (std::none_of(s.begin(), s.end(), [&](std::size_t k) { return sigs[k][a] != sigs[k][b]; }))
                    return false;
        return true;
    });
}

// ---- random inputs --------------------------------------------------------------------

using Rng = std::mt19937_64;

inline Coord pick(Rng& rng, Coord lo, Coord hi) {
    return lo + static_cast<Coord>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline disc::Graph random_graph(Rng& rng, std::size_t max_vertices) {
    disc::Graph g;
    g.vertices = static_cast<std::size_t>(pick(rng, 1, static_cast<Coord>(max_vertices)));
    const Coord density = pick(rng, 1, 7);
    for (std::size_t u = 0; u < g.vertices; ++u)
        for (std::size_t v = u + 1; v < g.vertices; ++v)
            if (pick(rng, 0, 9) < density)
                g.edges.push_back({u, v});
    return g;
}

} // namespace brute
