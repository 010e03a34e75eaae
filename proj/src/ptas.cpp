#include "disc/ptas.hpp"

#include "disc/matching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace disc {

namespace {

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return boost::hash_value(b); }
};

std::size_t ceil_div(double num, double eps) {
    return static_cast<std::size_t>(std::ceil(num / eps - 1e-9));
}

bool separates(const Instance1D& inst, std::size_t interval, std::size_t t) {
    const auto& s = inst.intervals[interval];
    return interval_contains(s, inst.points[t]) != interval_contains(s, inst.points[t + 1]);
}

void require_unit(const Instance1D& inst) {
    for (std::size_t i = 0; i < inst.m(); ++i)
        if (inst.intervals[i].right - inst.intervals[i].left != inst.scale)
            throw InputError("interval " + std::to_string(i) + " is not of unit length");
}

} // namespace

Decomposition decompose(const Instance1D& inst, double eps) {
    if (!(eps > 0.0 && eps <= 1.0))
        throw InputError("eps must lie in (0, 1]");
    require_unit(inst);
    Decomposition dec;
    dec.step_first = ceil_div(2.0, eps);
    dec.step = ceil_div(4.0, eps);
    const std::size_t n = inst.n();

    for (std::size_t q = dec.step_first - 1; q < n; q += dec.step) {
        GroupRange g;
        g.reference = q;
        bool found = false;
        for (std::size_t i = 0; i < inst.m(); ++i) {
            const auto& s = inst.intervals[i];
            if (!interval_contains(s, inst.points[q]))
                continue;
            if (!found || s.left < inst.intervals[g.first].left)
                g.first = i;
            if (!found || s.right > inst.intervals[g.second].right)
                g.second = i;
            found = true;
        }
        if (!found)
            throw Infeasible("reference point is covered by no interval", Witness{q, std::nullopt});
        g.lo = inst.intervals[g.first].left;
        g.hi = inst.intervals[g.second].right;
        dec.groups.push_back(g);
    }

    IndexSet order(dec.groups.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return dec.groups[a].lo < dec.groups[b].lo; });
    std::vector<std::pair<Coord, Coord>> spans;
    for (auto g : order) {
        if (!spans.empty() && dec.groups[g].lo <= spans.back().second) {
            spans.back().second = std::max(spans.back().second, dec.groups[g].hi);
            dec.block_groups.back().push_back(g);
        } else {
            spans.emplace_back(dec.groups[g].lo, dec.groups[g].hi);
            dec.block_groups.push_back({g});
        }
    }

    const auto& pts = inst.points;
    std::size_t cursor = 0;
    for (auto [lo, hi] : spans) {
        std::size_t b = std::lower_bound(pts.begin(), pts.end(), lo) - pts.begin();
        std::size_t e = std::upper_bound(pts.begin(), pts.end(), hi) - pts.begin();
        dec.free_regions.push_back({cursor, b});
        dec.blocks.push_back({b, e});
        cursor = e;
    }
    dec.free_regions.push_back({cursor, n});

    // Region of each point: blocks as (index), free regions as (index | flag).
    std::vector<std::pair<bool, std::size_t>> region(n);
    for (std::size_t b = 0; b < dec.blocks.size(); ++b)
        for (auto p = dec.blocks[b].begin; p < dec.blocks[b].end; ++p)
            region[p] = {true, b};
    for (std::size_t f = 0; f < dec.free_regions.size(); ++f)
        for (auto p = dec.free_regions[f].begin; p < dec.free_regions[f].end; ++p)
            region[p] = {false, f};

    for (std::size_t i = 0; i < inst.m(); ++i) {
        std::size_t touched = 0;
        for (const auto& f : dec.free_regions)
            for (auto p = f.begin; p < f.end; ++p)
                if (interval_contains(inst.intervals[i], pts[p])) {
                    ++touched;
                    break;
                }
        if (touched > 1)
            throw std::logic_error("an interval reaches two free regions");
    }

    dec.block_pairs.assign(dec.blocks.size(), {});
    for (std::size_t t = 0; t + 1 < n; ++t) {
        auto [lb, li] = region[t];
        auto [rb, ri] = region[t + 1];
        if (!lb && !rb && li == ri)
            continue;
        dec.block_pairs[lb ? li : ri].push_back(t);
    }
    return dec;
}

IndexSet touching_intervals(const Instance1D& inst, PointRun region) {
    IndexSet out;
    for (std::size_t i = 0; i < inst.m(); ++i)
        for (auto p = region.begin; p < region.end; ++p)
            if (interval_contains(inst.intervals[i], inst.points[p])) {
                out.push_back(i);
                break;
            }
    return out;
}

std::vector<IndexSet> enumerate_free_region_codes(const Instance1D& inst, PointRun region,
                                                  const IndexSet& touching, std::size_t cap) {
    if (region.empty())
        return {IndexSet{}};
    if (touching.size() > cap)
        throw InputError("free region touches " + std::to_string(touching.size()) + " intervals (cap " +
                         std::to_string(cap) + "); use a larger eps");
    if (region.size() > 63)
        throw InputError("free region too large; use a larger eps");

    const std::size_t k = touching.size();
    std::vector<std::uint64_t> cover(k, 0), split(k, 0);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t p = 0; p < region.size(); ++p) {
            if (interval_contains(inst.intervals[touching[j]], inst.points[region.begin + p]))
                cover[j] |= std::uint64_t{1} << p;
            if (p + 1 < region.size() && separates(inst, touching[j], region.begin + p))
                split[j] |= std::uint64_t{1} << p;
        }
    const std::uint64_t all_points = (std::uint64_t{1} << region.size()) - 1;
    const std::uint64_t all_pairs = (std::uint64_t{1} << (region.size() - 1)) - 1;

    std::vector<IndexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::uint64_t c = 0, s = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (mask >> j & 1) {
                c |= cover[j];
                s |= split[j];
            }
        if (c != all_points || s != all_pairs)
            continue;
        IndexSet d;
        for (std::size_t j = 0; j < k; ++j)
            if (mask >> j & 1)
                d.push_back(touching[j]);
        out.push_back(std::move(d));
    }
    return out;
}

BlockCost block_edge_cost(const Instance1D& inst, const Decomposition& dec, std::size_t block,
                          const IndexSet& d, const IndexSet& d_next) {
    IndexSet pre = d;
    pre.insert(pre.end(), d_next.begin(), d_next.end());
    for (auto g : dec.block_groups.at(block)) {
        pre.push_back(dec.groups[g].first);
        pre.push_back(dec.groups[g].second);
    }

    IndexSet needed;
    for (auto t : dec.block_pairs[block])
        if (std::none_of(pre.begin(), pre.end(), [&](auto i) { return separates(inst, i, t); }))
            needed.push_back(t);
    if (needed.empty())
        return {};

    Graph g;
    g.vertices = needed.size();
    IndexSet edge_interval;
    std::vector<std::size_t> lowest(needed.size(), infinite_cost);
    for (std::size_t i = 0; i < inst.m(); ++i) {
        IndexSet hit;
        for (std::size_t v = 0; v < needed.size(); ++v)
            if (separates(inst, i, needed[v]))
                hit.push_back(v);
        for (auto v : hit)
            lowest[v] = std::min(lowest[v], i);
        if (hit.size() == 2) {
            g.edges.push_back({hit[0], hit[1]});
            edge_interval.push_back(i);
        } else if (hit.size() > 2) {
            throw std::logic_error("a unit interval separates more than two pairs");
        }
    }
    if (std::any_of(lowest.begin(), lowest.end(), [](auto i) { return i == infinite_cost; }))
        return {infinite_cost, {}};

    auto matching = max_matching(g);
    BlockCost out;
    out.theta = needed.size() - matching.size();
    std::vector<bool> covered(needed.size(), false);
    for (auto e : matching) {
        out.intervals.push_back(edge_interval[e]);
        covered[g.edges[e].u] = covered[g.edges[e].v] = true;
    }
    for (std::size_t v = 0; v < needed.size(); ++v)
        if (!covered[v])
            out.intervals.push_back(lowest[v]);
    std::sort(out.intervals.begin(), out.intervals.end());
    out.intervals.erase(std::unique(out.intervals.begin(), out.intervals.end()), out.intervals.end());
    return out;
}

PtasResult ptas_solve(const Instance1D& inst, const PtasOptions& options) {
    require_unit(inst);
    if (auto tf = check_twin_free(inst); !tf)
        throw Infeasible("instance is not twin-free", *tf.witness);
    auto pruned = prune_1d(inst);
    const auto& work = pruned.instance;

    PtasResult res;
    res.decomposition = decompose(work, options.eps);
    const auto& dec = res.decomposition;
    res.references = dec.groups.size();
    const std::size_t layers = dec.free_regions.size();

    // Keep the smallest code per pattern of separated block pairs: codes with equal patterns
    // are interchangeable for every block cost.
    std::vector<std::vector<IndexSet>> layer(layers);
    for (std::size_t f = 0; f < layers; ++f) {
        IndexSet watched;
        if (f > 0)
            watched = dec.block_pairs[f - 1];
        if (f < dec.blocks.size())
            watched.insert(watched.end(), dec.block_pairs[f].begin(), dec.block_pairs[f].end());
        auto region = dec.free_regions[f];
        auto codes = enumerate_free_region_codes(work, region, touching_intervals(work, region), options.cap);
        std::unordered_map<Bitset, std::size_t, BitsetHash> best;
        for (auto& d : codes) {
            Bitset sig(watched.size());
            for (std::size_t w = 0; w < watched.size(); ++w)
                if (std::any_of(d.begin(), d.end(), [&](auto i) { return separates(work, i, watched[w]); }))
                    sig.set(w);
            auto it = best.find(sig);
            if (it == best.end())
                best.emplace(std::move(sig), layer[f].size()), layer[f].push_back(std::move(d));
            else if (d.size() < layer[f][it->second].size())
                layer[f][it->second] = std::move(d);
        }
        if (layer[f].empty())
            throw Infeasible("a free region admits no code", Witness{region.begin, std::nullopt});
        res.layer_sizes.push_back(layer[f].size());
    }

    std::vector<std::vector<std::size_t>> chi(layers), pred(layers);
    for (const auto& d : layer[0])
        chi[0].push_back(d.size());
    pred[0].assign(layer[0].size(), 0);
    for (std::size_t f = 1; f < layers; ++f) {
        chi[f].assign(layer[f].size(), infinite_cost);
        pred[f].assign(layer[f].size(), 0);
        for (std::size_t a = 0; a < layer[f - 1].size(); ++a) {
            if (chi[f - 1][a] == infinite_cost)
                continue;
            for (std::size_t b = 0; b < layer[f].size(); ++b) {
                auto cost = block_edge_cost(work, dec, f - 1, layer[f - 1][a], layer[f][b]);
                if (cost.theta == infinite_cost)
                    continue;
                std::size_t total = chi[f - 1][a] + cost.theta + layer[f][b].size();
                if (total < chi[f][b]) {
                    chi[f][b] = total;
                    pred[f][b] = a;
                }
            }
        }
    }
    auto last = std::min_element(chi.back().begin(), chi.back().end());
    if (*last == infinite_cost)
        throw Infeasible("no path through the layered graph", Witness{0, std::nullopt});
    res.path_weight = *last;

    std::vector<std::size_t> pick(layers);
    pick[layers - 1] = static_cast<std::size_t>(last - chi.back().begin());
    for (std::size_t f = layers - 1; f > 0; --f)
        pick[f - 1] = pred[f][pick[f]];

    IndexSet chosen;
    for (std::size_t f = 0; f < layers; ++f) {
        const auto& d = layer[f][pick[f]];
        chosen.insert(chosen.end(), d.begin(), d.end());
        if (f > 0) {
            auto cost = block_edge_cost(work, dec, f - 1, layer[f - 1][pick[f - 1]], d);
            chosen.insert(chosen.end(), cost.intervals.begin(), cost.intervals.end());
        }
    }
    for (const auto& g : dec.groups) {
        chosen.push_back(g.first);
        chosen.push_back(g.second);
    }
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

    if (auto ok = is_disc_code(work, chosen); !ok)
        throw std::logic_error("PTAS produced an invalid code: " + ok.witness->describe());
    res.chosen = pruned.to_original(chosen);
    return res;
}

Instance1D continuous_to_discrete_1d(const std::vector<Coord>& points, Coord scale) {
    Instance1D out;
    out.scale = 2 * scale;
    for (auto p : points)
        out.points.push_back(2 * p);
    const auto& q = out.points;
    const Coord s = out.scale;
    const std::size_t n = q.size();

    struct Bound {
        Coord value;
        bool closed;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n && q[j] - q[i] <= s; ++j) {
            // Window [t, t+s] holds exactly points i..j.
            Bound lo{q[j] - s, true};
            if (i > 0 && q[i - 1] >= lo.value)
                lo = {q[i - 1], false};
            Bound hi{q[i], true};
            if (j + 1 < n && q[j + 1] - s <= hi.value)
                hi = {q[j + 1] - s, false};
            if (lo.value > hi.value || (lo.value == hi.value && !(lo.closed && hi.closed)))
                continue;
            Coord t = (lo.value + hi.value) / 2;
            out.intervals.push_back({t, t + s});
        }
    return out;
}

} // namespace disc
