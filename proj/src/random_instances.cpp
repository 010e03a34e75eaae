#include "disc/random_instances.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace disc {

namespace {

constexpr int max_attempts = 100000;

Instance1D sample_1d(Rng& rng, const Random1DSpec& spec) {
    Instance1D inst;
    inst.scale = spec.scale;
    const Coord span = std::max<Coord>(spec.scale, spec.scale * static_cast<Coord>(spec.n) / 2);
    std::set<Coord> pts;
    while (pts.size() < spec.n)
        pts.insert(2 * uniform(rng, 0, span / 2));
    inst.points.assign(pts.begin(), pts.end());

    // Intervals may overhang the points; the window grows with m so 2m distinct odd ends exist.
    const Coord pad = spec.scale + std::max<Coord>(0, 4 * static_cast<Coord>(spec.m) - span / 2);
    std::set<Coord> ends;
    auto odd = [&](Coord lo, Coord hi) { return 2 * uniform(rng, lo / 2, hi / 2) + 1; };
    while (inst.intervals.size() < spec.m) {
        Interval s;
        if (spec.unit) {
            s.left = odd(-pad, span + pad - spec.scale);
            s.right = s.left + spec.scale;
        } else {
            Coord a = odd(-pad, span + pad);
            Coord b = odd(-pad, span + pad);
            if (a == b)
                continue;
            s = {std::min(a, b), std::max(a, b)};
        }
        if (ends.count(s.left) || ends.count(s.right))
            continue;
        ends.insert(s.left);
        ends.insert(s.right);
        inst.intervals.push_back(s);
    }
    return inst;
}

Instance2D sample_2d(Rng& rng, const Random2DSpec& spec) {
    Instance2D inst;
    inst.scale = spec.scale;
    const Coord side = spec.scale * (1 + static_cast<Coord>(std::ceil(std::sqrt(static_cast<double>(spec.n)))));
    std::set<Point2> pts;
    while (pts.size() < spec.n)
        pts.insert({2 * uniform(rng, 0, side / 2), 2 * uniform(rng, 0, side / 2)});
    inst.points.assign(pts.begin(), pts.end());
    // Shuffle so index order carries no geometry.
    for (std::size_t i = inst.points.size(); i > 1; --i)
        std::swap(inst.points[i - 1], inst.points[static_cast<std::size_t>(uniform(rng, 0, static_cast<Coord>(i - 1)))]);
    if (spec.squares) {
        std::vector<Point2> centers;
        // Odd offsets put every square edge on an odd coordinate, away from the even points.
        const Coord h = spec.scale / 4;
        auto offset = [&] { return 2 * uniform(rng, -h, h - 1) + 1; };
        for (std::size_t j = 0; j < *spec.squares; ++j) {
            Point2 p = inst.points[static_cast<std::size_t>(uniform(rng, 0, static_cast<Coord>(spec.n) - 1))];
            centers.push_back({p.x + offset(), p.y + offset()});
        }
        inst.squares = std::move(centers);
    }
    return inst;
}

} // namespace

Coord uniform(Rng& rng, Coord lo, Coord hi) {
    if (hi < lo)
        throw std::invalid_argument("uniform: empty range");
    auto width = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Coord>(rng() % width);
}

Instance1D random_1d(Rng& rng, const Random1DSpec& spec) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto inst = sample_1d(rng, spec);
        if (!spec.twin_free || check_twin_free(inst))
            return inst;
    }
    throw std::runtime_error("no twin-free 1D sample found");
}

Instance2D random_2d(Rng& rng, const Random2DSpec& spec) {
    if (spec.n == 0 || (spec.squares && *spec.squares == 0))
        throw std::invalid_argument("random_2d needs points and, when discrete, squares");
    if (spec.scale < 4)
        throw std::invalid_argument("random_2d needs scale >= 4");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto inst = sample_2d(rng, spec);
        if (!spec.twin_free || check_twin_free(inst))
            return inst;
    }
    throw std::runtime_error("no twin-free 2D sample found");
}

} // namespace disc
