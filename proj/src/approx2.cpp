#include "disc/approx2.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace disc {

namespace {

Bitset selection_mask(const IndexSet& chosen, std::size_t m) {
    Bitset mask(m);
    for (auto i : chosen)
        mask.set(i);
    return mask;
}

std::map<Bitset, IndexSet> group_by_code(const Incidence& inc, const Bitset& mask, const IndexSet& pts) {
    std::map<Bitset, IndexSet> groups;
    for (auto p : pts)
        groups[inc.row(p) & mask].push_back(p);
    return groups;
}

IndexSet all_points(std::size_t n) {
    IndexSet v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = i;
    return v;
}

} // namespace

std::vector<IndexSet> PointClassification::all_classes() const {
    std::vector<IndexSet> out;
    if (!uncovered.empty())
        out.push_back(uncovered);
    out.insert(out.end(), classes.begin(), classes.end());
    return out;
}

PointClassification classify_points(const Instance1D& inst, const IndexSet& chosen) {
    auto inc = incidence(inst);
    auto groups = group_by_code(inc, selection_mask(chosen, inst.m()), all_points(inst.n()));
    PointClassification cls;
    for (auto& [code, pts] : groups) {
        if (code.none())
            cls.uncovered = pts;
        else if (pts.size() == 1)
            cls.unique.push_back(pts.front());
        else
            cls.classes.push_back(pts);
    }
    std::sort(cls.unique.begin(), cls.unique.end());
    std::sort(cls.classes.begin(), cls.classes.end());

    auto all = cls.all_classes();
    std::size_t bound = 1;
    for (const auto& q : all) {
        bound += q.size() - 1;
        for (std::size_t i = 1; i < q.size(); ++i)
            if (q[i] == q[i - 1] + 1)
                throw std::logic_error("consecutive points " + std::to_string(q[i - 1]) + " and " +
                                       std::to_string(q[i]) + " share a code");
    }
    cls.lemma3_bound = bound;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = 0; b < all.size(); ++b) {
            if (a == b)
                continue;
            auto a1 = all[a].front(), a2 = all[a].back();
            auto b1 = all[b].front(), b2 = all[b].back();
            if (a1 < b1 && b1 < a2 && a2 < b2)
                throw std::logic_error("class spans cross");
        }
    return cls;
}

IndexSet augment(const Instance1D& inst, const IndexSet& chosen, const PointClassification& cls) {
    auto inc = incidence(inst);
    Bitset mask = selection_mask(chosen, inst.m());
    auto everyone = all_points(inst.n());

    auto split_score = [&](std::size_t interval) {
        std::size_t score = 0;
        for (const auto& [code, pts] : group_by_code(inc, mask, everyone)) {
            std::size_t in = 0;
            for (auto p : pts)
                in += inc.contains(interval, p);
            score += in * (pts.size() - in);
        }
        return score;
    };

    for (const auto& q : cls.all_classes()) {
        for (;;) {
            auto groups = group_by_code(inc, mask, q);
            auto it = std::find_if(groups.begin(), groups.end(), [](const auto& g) { return g.second.size() > 1; });
            if (it == groups.end())
                break;
            std::size_t a = it->second[0], b = it->second[1];
            std::size_t best = inst.m(), best_score = 0;
            for (std::size_t i = 0; i < inst.m(); ++i) {
                if (mask[i] || inc.contains(i, a) == inc.contains(i, b))
                    continue;
                std::size_t s = split_score(i);
                if (best == inst.m() || s > best_score) {
                    best = i;
                    best_score = s;
                }
            }
            if (best == inst.m())
                throw Infeasible("no interval separates the pair", Witness{a, b});
            mask.set(best);
        }
    }

    IndexSet left;
    for (auto p : everyone)
        if ((inc.row(p) & mask).none())
            left.push_back(p);
    if (left.size() > 1)
        throw std::logic_error("more than one point left uncovered after splitting the classes");
    if (!left.empty()) {
        std::size_t p = left.front();
        auto cover = inc.row(p).find_first();
        if (cover == Bitset::npos)
            throw Infeasible("point is covered by no interval", Witness{p, std::nullopt});
        mask.set(cover);
    }
    return to_indices(mask);
}

Approx2Result approx2(const Instance1D& inst) {
    if (auto tf = check_twin_free(inst); !tf)
        throw Infeasible("instance is not twin-free", *tf.witness);

    auto pruned = prune_1d(inst);
    const auto& work = pruned.instance;
    auto graph = build_gap_graph(work);
    IndexSet s_prime = min_edge_cover(graph);
    auto cls = classify_points(work, s_prime);
    IndexSet final_set = augment(work, s_prime, cls);

    if (auto ok = is_disc_code(work, final_set); !ok)
        throw std::logic_error("2-approximation produced an invalid code: " + ok.witness->describe());
    if (s_prime.size() < cls.lemma3_bound || final_set.size() > 2 * s_prime.size())
        throw std::logic_error("edge-cover bound violated");

    Approx2Result res;
    res.chosen = pruned.to_original(final_set);
    res.s_prime = pruned.to_original(s_prime);
    res.classification = std::move(cls);
    res.certificate = {s_prime.size(), res.classification.lemma3_bound, final_set.size()};
    res.pruned_intervals = pruned.removed.size();
    return res;
}

} // namespace disc
