#include "disc/grid_reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace disc {

bool GridGraph::adjacent(std::size_t a, std::size_t b) const {
    Coord dx = std::abs(vertices[a].x - vertices[b].x);
    Coord dy = std::abs(vertices[a].y - vertices[b].y);
    return dx + dy == 1;
}

std::vector<std::pair<std::size_t, std::size_t>> GridGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b)
            if (adjacent(a, b))
                out.emplace_back(a, b);
    return out;
}

GridGraph grid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw InputError("grid file needs a \"vertices\" array");
    GridGraph g;
    std::set<Point2> seen;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            throw InputError("grid vertex must be [x, y] with integer coordinates");
        Point2 p{v[0].get<Coord>(), v[1].get<Coord>()};
        if (!seen.insert(p).second)
            throw InputError("repeated grid vertex");
        g.vertices.push_back(p);
    }
    return g;
}

Instance2D grid_to_2d(const GridGraph& g, bool discrete) {
    Instance2D inst;
    inst.scale = 2;
    for (auto v : g.vertices)
        inst.points.push_back({(v.x - v.y) * 2, (v.x + v.y) * 2});
    if (discrete) {
        std::vector<Point2> squares;
        for (auto [a, b] : g.edges()) {
            Point2 pa = inst.points[a], pb = inst.points[b];
            squares.push_back({(pa.x + pb.x) / 2, (pa.y + pb.y) / 2});
        }
        inst.squares = std::move(squares);
    }
    return inst;
}

std::size_t max_points_per_square(const Instance2D& inst) {
    const auto& p = inst.points;
    const Coord side = inst.scale;
    std::size_t best = p.empty() ? 0 : 1;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b) {
            if (std::abs(p[a].x - p[b].x) > side || std::abs(p[a].y - p[b].y) > side)
                continue;
            best = std::max<std::size_t>(best, 2);
            for (std::size_t c = b + 1; c < p.size(); ++c) {
                Coord w = std::max({p[a].x, p[b].x, p[c].x}) - std::min({p[a].x, p[b].x, p[c].x});
                Coord h = std::max({p[a].y, p[b].y, p[c].y}) - std::min({p[a].y, p[b].y, p[c].y});
                if (w <= side && h <= side)
                    return 3;
            }
        }
    return best;
}

std::vector<P3> extract_p3_partition(const GridGraph& g, const Instance2D& inst, Coord centers_scale,
                                     const std::vector<Point2>& centers) {
    const std::size_t n = g.vertices.size();
    if (n != inst.n())
        throw ExtractionError("grid and instance sizes differ");
    if (n % 3 != 0 || centers.size() != 2 * n / 3)
        throw ExtractionError("code has " + std::to_string(centers.size()) + " squares, expected 2|V|/3");
    if (centers_scale % inst.scale != 0)
        throw ExtractionError("center scale is not a multiple of the instance scale");
    Instance2D work = inst.rescaled(centers_scale / inst.scale);
    work.squares.reset();
    if (auto ok = is_disc_code(work, centers); !ok)
        throw ExtractionError("not a discriminating code: " + ok.witness->describe());

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    };
    std::vector<IndexSet> holds;
    for (auto c : centers) {
        IndexSet in;
        for (std::size_t v = 0; v < n; ++v)
            if (square_contains(c, work.scale, work.points[v]))
                in.push_back(v);
        if (in.empty() || in.size() > 2)
            throw ExtractionError("a square holds " + std::to_string(in.size()) + " points");
        if (in.size() == 2)
            parent[find(in[0])] = find(in[1]);
        holds.push_back(std::move(in));
    }

    std::map<std::size_t, std::vector<std::size_t>> squares_of;
    for (std::size_t s = 0; s < holds.size(); ++s)
        squares_of[find(holds[s][0])].push_back(s);
    std::vector<P3> out;
    std::vector<bool> used(n, false);
    for (const auto& [root, sq] : squares_of) {
        if (sq.size() != 2 || holds[sq[0]].size() != 2 || holds[sq[1]].size() != 2)
            throw ExtractionError("squares do not pair up into paths of three vertices");
        const auto& a = holds[sq[0]];
        const auto& b = holds[sq[1]];
        std::size_t mid = (a[0] == b[0] || a[0] == b[1]) ? a[0] : a[1];
        std::size_t end1 = a[0] == mid ? a[1] : a[0];
        std::size_t end2 = b[0] == mid ? b[1] : b[0];
        if ((b[0] != mid && b[1] != mid) || end1 == end2 || !g.adjacent(end1, mid) || !g.adjacent(mid, end2))
            throw ExtractionError("square pair does not form a path of three vertices");
        for (auto v : {end1, mid, end2}) {
            if (used[v])
                throw ExtractionError("vertex used twice");
            used[v] = true;
        }
        out.push_back({end1, mid, end2});
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw ExtractionError("some vertex lies in no path");
    return out;
}

} // namespace disc
