#include "disc/continuous2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace disc {

namespace {

std::vector<Point2> transposed(std::vector<Point2> pts) {
    for (auto& p : pts)
        std::swap(p.x, p.y);
    return pts;
}

std::vector<Rect> transposed(const std::vector<Rect>& rects) {
    std::vector<Rect> out;
    for (const auto& r : rects)
        out.push_back(r.transposed());
    return out;
}

/// U-HIT over a family with its own cell candidates; returns the chosen points.
std::vector<Point2> hit_family(const std::vector<Rect>& family, std::size_t swap) {
    if (family.empty())
        return {};
    auto cands = candidate_points(family).points;
    auto sol = uhit_local_search(family, cands, swap);
    std::vector<Point2> out;
    for (auto q : sol.chosen)
        out.push_back(cands[q]);
    return out;
}

} // namespace

bool stabs_all(const WorkingFrame& frame, const std::vector<Point2>& centers) {
    const auto& pts = frame.points;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            bool ok = std::any_of(centers.begin(), centers.end(), [&](Point2 c) {
                return square_contains(c, frame.scale, pts[i]) != square_contains(c, frame.scale, pts[j]);
            });
            if (!ok)
                return false;
        }
    return true;
}

ContinuousResult continuous_disc_code(const Instance2D& inst, const ContinuousOptions& options) {
    if (inst.discrete())
        throw InputError("continuous pipeline needs an instance without a square list");
    if (!(options.eps > 0.0))
        throw InputError("eps must be positive");
    auto frame = WorkingFrame::from(inst);
    ContinuousResult res;
    res.scale = frame.scale;
    if (frame.points.empty())
        return res;
    if (frame.points.size() == 1) {
        res.centers.push_back(frame.points.front());
        return res;
    }

    if (options.fallback && static_cast<double>(inst.n()) <= std::pow(2.0, 1.0 / options.eps)) {
        auto exact = min_disc_code_exact(inst, options.budget);
        if (exact.result.optimal()) {
            res.centers = exact.centers;
            res.exact = true;
            return res;
        }
    }

    auto cascade = cascade_round(frame);
    res.z0_objective = cascade.z0_solution.objective;
    res.z1_objective = cascade.z1_solution.objective;
    res.family_a = cascade.family_a.size();
    res.family_b = cascade.family_b.size();

    auto a = hit_family(cascade.family_a, options.swap);
    auto b = transposed(hit_family(transposed(cascade.family_b), options.swap));
    res.hits_a = a.size();
    res.hits_b = b.size();
    std::vector<Point2> centers = a;
    centers.insert(centers.end(), b.begin(), b.end());
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());

    if (!stabs_all(frame, centers))
        throw std::logic_error("stabbing solution misses a segment");

    IndexSet bare;
    for (std::size_t i = 0; i < frame.points.size(); ++i)
        if (std::none_of(centers.begin(), centers.end(),
                         [&](Point2 c) { return square_contains(c, frame.scale, frame.points[i]); }))
            bare.push_back(i);
    if (bare.size() > 1)
        throw std::logic_error("more than one point uncovered after stabbing");
    if (!bare.empty()) {
        centers.push_back(frame.points[bare.front()]);
        res.cover_added = true;
    }

    Instance2D work{frame.scale, frame.points, std::nullopt};
    if (auto ok = is_disc_code(work, centers); !ok)
        throw std::logic_error("continuous pipeline produced an invalid code: " + ok.witness->describe());
    res.centers = std::move(centers);
    return res;
}

} // namespace disc
