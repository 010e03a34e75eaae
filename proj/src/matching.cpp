#include "disc/matching.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace disc {

GapGraph build_gap_graph(const Instance1D& pruned) {
    GapGraph g;
    g.vertices = pruned.n() + 1;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
    for (std::size_t i = 0; i < pruned.m(); ++i) {
        const auto& s = pruned.intervals[i];
        std::size_t a = left_gap(pruned.points, s.left);
        std::size_t b = right_gap(pruned.points, s.right);
        if (a == b)
            throw InputError("interval " + std::to_string(i) + " is useless; prune the instance first");
        auto [it, fresh] = seen.emplace(std::pair{a, b}, i);
        if (!fresh)
            throw InputError("interval " + std::to_string(i) + " is redundant with interval " +
                             std::to_string(it->second) + "; prune the instance first");
        g.edges.push_back({a, b});
    }
    return g;
}

namespace {

constexpr std::size_t none = static_cast<std::size_t>(-1);

class Blossom {
public:
    explicit Blossom(const Graph& g) : n_(g.vertices), adj_(g.vertices), match_(g.vertices, none) {
        for (const auto& e : g.edges)
            if (e.u != e.v) {
                adj_[e.u].push_back(e.v);
                adj_[e.v].push_back(e.u);
            }
    }

    std::vector<std::size_t> run() {
        for (std::size_t root = 0; root < n_; ++root) {
            if (match_[root] != none)
                continue;
            std::size_t v = find_path(root);
            while (v != none) {
                std::size_t pv = parent_[v];
                std::size_t ppv = match_[pv];
                match_[v] = pv;
                match_[pv] = v;
                v = ppv;
            }
        }
        return match_;
    }

private:
    std::size_t lca(std::size_t a, std::size_t b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == none)
                break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b])
                return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(std::size_t v, std::size_t b, std::size_t child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    std::size_t find_path(std::size_t root) {
        used_.assign(n_, false);
        parent_.assign(n_, none);
        base_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i)
            base_[i] = i;
        used_[root] = true;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to)
                    continue;
                if (to == root || (match_[to] != none && parent_[match_[to]] != none)) {
                    std::size_t b = lca(v, to);
                    in_blossom_.assign(n_, false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (std::size_t i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] == none) {
                    parent_[to] = v;
                    if (match_[to] == none)
                        return to;
                    used_[match_[to]] = true;
                    queue.push_back(match_[to]);
                }
            }
        }
        return none;
    }

    std::size_t n_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

} // namespace

IndexSet max_matching(const Graph& g) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto [u, v] = g.edges[i];
        edge_of.emplace(std::minmax(u, v), i);
    }
    auto match = Blossom(g).run();
    IndexSet out;
    for (std::size_t v = 0; v < g.vertices; ++v)
        if (match[v] != none && v < match[v])
            out.push_back(edge_of.at(std::minmax(v, match[v])));
    std::sort(out.begin(), out.end());
    return out;
}

IndexSet min_edge_cover(const Graph& g) {
    std::vector<std::size_t> first_edge(g.vertices, none);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        for (auto v : {g.edges[i].u, g.edges[i].v})
            if (first_edge[v] == none)
                first_edge[v] = i;
    for (std::size_t v = 0; v < g.vertices; ++v)
        if (first_edge[v] == none)
            throw Infeasible("gap " + std::to_string(v) + " has no incident interval; the points beside it "
                             "cannot be told apart",
                             Witness{v, std::nullopt});

    IndexSet cover = max_matching(g);
    std::vector<bool> covered(g.vertices, false);
    for (auto i : cover)
        covered[g.edges[i].u] = covered[g.edges[i].v] = true;
    for (std::size_t v = 0; v < g.vertices; ++v)
        if (!covered[v]) {
            std::size_t i = first_edge[v];
            cover.push_back(i);
            covered[g.edges[i].u] = covered[g.edges[i].v] = true;
        }
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    return cover;
}

} // namespace disc
