#include "disc/uhit.hpp"

#include <algorithm>

namespace disc {

namespace {

struct HitTable {
    std::vector<Bitset> by_candidate;   // rectangles hit by each candidate
    std::vector<IndexSet> by_rect;      // candidates inside each rectangle

    HitTable(const std::vector<Rect>& rects, const std::vector<Point2>& candidates)
        : by_candidate(candidates.size(), Bitset(rects.size())), by_rect(rects.size()) {
        for (std::size_t r = 0; r < rects.size(); ++r)
            for (std::size_t q = 0; q < candidates.size(); ++q)
                if (rects[r].contains(candidates[q])) {
                    by_candidate[q].set(r);
                    by_rect[r].push_back(q);
                }
        for (std::size_t r = 0; r < rects.size(); ++r)
            if (by_rect[r].empty())
                throw Infeasible("rectangle " + std::to_string(r) + " holds no candidate", Witness{r, std::nullopt});
    }
};

/// At most `budget` candidates hitting every rectangle in `open`, appended to `out`.
bool cover_within(const HitTable& t, const Bitset& open, std::size_t budget, const std::vector<bool>& banned,
                  IndexSet& out) {
    auto r = open.find_first();
    if (r == Bitset::npos)
        return true;
    if (budget == 0)
        return false;
    for (auto q : t.by_rect[r]) {
        if (banned[q])
            continue;
        out.push_back(q);
        if (cover_within(t, open - t.by_candidate[q], budget - 1, banned, out))
            return true;
        out.pop_back();
    }
    return false;
}

/// Next r-combination of {0..n-1} in lexicographic order.
bool next_combination(IndexSet& c, std::size_t n) {
    std::size_t r = c.size();
    for (std::size_t i = r; i-- > 0;) {
        if (c[i] < n - r + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < r; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// One improving swap, if any; modifies `chosen` in place.
bool improve(const HitTable& t, std::size_t rects, IndexSet& chosen, std::size_t k) {
    for (std::size_t r = 1; r <= std::min(k, chosen.size()); ++r) {
        IndexSet pos(r);
        for (std::size_t i = 0; i < r; ++i)
            pos[i] = i;
        do {
            std::vector<bool> removed(chosen.size(), false);
            for (auto i : pos)
                removed[i] = true;
            Bitset hit(rects);
            std::vector<bool> banned(t.by_candidate.size(), false);
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                banned[chosen[i]] = true;
                if (!removed[i])
                    hit |= t.by_candidate[chosen[i]];
            }
            Bitset open = ~hit;
            IndexSet added;
            if (cover_within(t, open, r - 1, banned, added)) {
                IndexSet next;
                for (std::size_t i = 0; i < chosen.size(); ++i)
                    if (!removed[i])
                        next.push_back(chosen[i]);
                next.insert(next.end(), added.begin(), added.end());
                std::sort(next.begin(), next.end());
                chosen = std::move(next);
                return true;
            }
        } while (next_combination(pos, chosen.size()));
    }
    return false;
}

IndexSet greedy(const HitTable& t, std::size_t rects) {
    Bitset open(rects);
    open.set();
    IndexSet chosen;
    while (open.any()) {
        std::size_t best = 0, best_gain = 0;
        for (std::size_t q = 0; q < t.by_candidate.size(); ++q) {
            std::size_t gain = (t.by_candidate[q] & open).count();
            if (gain > best_gain) {
                best = q;
                best_gain = gain;
            }
        }
        chosen.push_back(best);
        open -= t.by_candidate[best];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace

IndexSet greedy_hitting_set(const std::vector<Rect>& rects, const std::vector<Point2>& candidates) {
    return greedy(HitTable(rects, candidates), rects.size());
}

UHitResult uhit_local_search(const std::vector<Rect>& rects, const std::vector<Point2>& candidates,
                             std::size_t swap_size) {
    HitTable t(rects, candidates);
    UHitResult res;
    res.chosen = greedy(t, rects.size());
    res.greedy_size = res.chosen.size();
    while (improve(t, rects.size(), res.chosen, swap_size))
        ++res.swaps;
    return res;
}

bool hits_all(const std::vector<Rect>& rects, const std::vector<Point2>& candidates, const IndexSet& chosen) {
    return std::all_of(rects.begin(), rects.end(), [&](const Rect& r) {
        return std::any_of(chosen.begin(), chosen.end(), [&](auto q) { return r.contains(candidates[q]); });
    });
}

} // namespace disc
