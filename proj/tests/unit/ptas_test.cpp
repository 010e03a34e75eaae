#include "disc/ptas.hpp"
#include "disc/random_instances.hpp"

#include "../support/brute.hpp"

#include <doctest.h>

using namespace disc;

namespace {

bool splits(const Instance1D& inst, std::size_t i, std::size_t t) {
    const auto& s = inst.intervals[i];
    bool a = s.left <= inst.points[t] && inst.points[t] <= s.right;
    bool b = s.left <= inst.points[t + 1] && inst.points[t + 1] <= s.right;
    return a != b;
}

Instance1D random_unit(Rng& rng, std::size_t n) {
    Random1DSpec spec;
    spec.unit = true;
    spec.n = n;
    spec.m = 2 * n + 2;
    return prune_1d(random_1d(rng, spec)).instance;
}

} // namespace

TEST_CASE("decompose reference spacing") {
    Rng rng(47);
    auto inst = random_unit(rng, 8);
    auto dec = decompose(inst, 1.0);
    CHECK(dec.step_first == 2);
    CHECK(dec.step == 4);
    REQUIRE(dec.groups.size() == 2);
    CHECK(dec.groups[0].reference == 1);
    CHECK(dec.groups[1].reference == 5);

    auto few = random_unit(rng, 3);
    auto none = decompose(few, 0.5);
    CHECK(none.groups.empty());
    CHECK(none.blocks.empty());
    REQUIRE(none.free_regions.size() == 1);
    CHECK(none.free_regions[0].size() == 3);

    Instance1D wide = few;
    wide.intervals.push_back({wide.points.front() - 1, wide.points.front() + 3 * wide.scale});
    CHECK_THROWS_AS(decompose(wide, 0.5), InputError);
}

TEST_CASE("decomposition structure") {
    Rng rng(53);
    for (int t = 0; t < 120; ++t) {
        auto inst = random_unit(rng, static_cast<std::size_t>(uniform(rng, 4, 14)));
        double eps = t % 3 == 0 ? 1.0 : 0.5;
        auto dec = decompose(inst, eps);
        REQUIRE(dec.free_regions.size() == dec.blocks.size() + 1);

        // Every point in exactly one block or free region, in order.
        std::vector<int> owner(inst.n(), 0);
        for (const auto& b : dec.blocks)
            for (auto p = b.begin; p < b.end; ++p)
                ++owner[p];
        for (const auto& f : dec.free_regions)
            for (auto p = f.begin; p < f.end; ++p)
                ++owner[p];
        for (auto o : owner)
            CHECK(o == 1);

        // Group pairs cover their block.
        for (std::size_t b = 0; b < dec.blocks.size(); ++b)
            for (auto p = dec.blocks[b].begin; p < dec.blocks[b].end; ++p) {
                bool covered = false;
                for (auto g : dec.block_groups[b])
                    for (auto i : {dec.groups[g].first, dec.groups[g].second})
                        covered |= interval_contains(inst.intervals[i], inst.points[p]);
                CHECK(covered);
            }

        // No interval reaches two free regions.
        for (const auto& s : inst.intervals) {
            int regions = 0;
            for (const auto& f : dec.free_regions) {
                bool any = false;
                for (auto p = f.begin; p < f.end; ++p)
                    any |= interval_contains(s, inst.points[p]);
                regions += any;
            }
            CHECK(regions <= 1);
        }
    }
}

TEST_CASE("free region codes") {
    Instance1D inst;
    inst.scale = 4;
    inst.points = {8};
    inst.intervals = {{5, 9}, {7, 11}};
    auto empty = enumerate_free_region_codes(inst, {0, 0}, {});
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
    auto codes = enumerate_free_region_codes(inst, {0, 1}, touching_intervals(inst, {0, 1}));
    CHECK(codes.size() == 3);

    IndexSet many(21);
    for (std::size_t i = 0; i < many.size(); ++i)
        many[i] = 0;
    CHECK_THROWS_AS(enumerate_free_region_codes(inst, {0, 1}, many), InputError);

    Rng rng(59);
    for (int t = 0; t < 40; ++t) {
        auto u = random_unit(rng, 6);
        PointRun all{0, u.n()};
        auto touching = touching_intervals(u, all);
        for (const auto& code : enumerate_free_region_codes(u, all, touching)) {
            for (std::size_t p = 0; p < u.n(); ++p)
                CHECK(brute::nonempty(brute::code_1d(u, code, p)));
            for (std::size_t p = 0; p + 1 < u.n(); ++p)
                CHECK(brute::code_1d(u, code, p) != brute::code_1d(u, code, p + 1));
        }
    }
}

TEST_CASE("block edge cost against enumeration") {
    Rng rng(61);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 60; ++t) {
        auto inst = random_unit(rng, static_cast<std::size_t>(uniform(rng, 6, 12)));
        auto dec = decompose(inst, 1.0);
        for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
            auto left = enumerate_free_region_codes(inst, dec.free_regions[b],
                                                    touching_intervals(inst, dec.free_regions[b]));
            auto right = enumerate_free_region_codes(inst, dec.free_regions[b + 1],
                                                     touching_intervals(inst, dec.free_regions[b + 1]));
            if (left.empty() || right.empty())
                continue;
            const auto& d = left.front();
            const auto& e = right.back();
            auto cost = block_edge_cost(inst, dec, b, d, e);

            IndexSet pre = d;
            pre.insert(pre.end(), e.begin(), e.end());
            for (auto g : dec.block_groups[b])
                pre.insert(pre.end(), {dec.groups[g].first, dec.groups[g].second});
            IndexSet needed;
            for (auto p : dec.block_pairs[b])
                if (std::none_of(pre.begin(), pre.end(), [&](auto i) { return splits(inst, i, p); }))
                    needed.push_back(p);
            auto best = brute::min_subset(inst.m(), [&](const auto& s) {
                return std::all_of(needed.begin(), needed.end(), [&](auto p) {
                    return std::any_of(s.begin(), s.end(), [&](auto i) { return splits(inst, i, p); });
                });
            });
            if (!best) {
                CHECK(cost.theta == infinite_cost);
                continue;
            }
            CHECK(cost.theta == *best);
            CHECK(cost.intervals.size() == cost.theta);
            for (auto p : needed)
                CHECK(std::any_of(cost.intervals.begin(), cost.intervals.end(),
                                  [&](auto i) { return splits(inst, i, p); }));
            ++checked;
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("ptas against the exact optimum") {
    Rng rng(67);
    for (int t = 0; t < 60; ++t) {
        Random1DSpec spec;
        spec.unit = true;
        spec.n = static_cast<std::size_t>(uniform(rng, 1, 11));
        spec.m = static_cast<std::size_t>(uniform(rng, static_cast<Coord>(spec.n), 16));
        auto inst = random_1d(rng, spec);
        auto r = ptas_solve(inst, {0.5, 20});
        CHECK(brute::is_code_1d(inst, r.chosen));
        auto opt = brute::min_code_1d(inst);
        REQUIRE(opt);
        CHECK(r.path_weight <= *opt);
        CHECK(static_cast<double>(r.chosen.size()) <= 1.5 * static_cast<double>(*opt) + 1e-9);
        CHECK(r.chosen.size() <= r.path_weight + 2 * r.references);
        if (r.references == 0)
            CHECK(r.chosen.size() == *opt);
    }
}

TEST_CASE("covering plus consecutive separation suffices for unit intervals") {
    Rng rng(71);
    for (int t = 0; t < 200; ++t) {
        Random1DSpec spec;
        spec.unit = true;
        spec.n = static_cast<std::size_t>(uniform(rng, 2, 10));
        spec.m = static_cast<std::size_t>(uniform(rng, 2, 14));
        spec.twin_free = false;
        auto inst = random_1d(rng, spec);
        IndexSet pick;
        for (std::size_t i = 0; i < inst.m(); ++i)
            if (rng() % 2)
                pick.push_back(i);
        bool local = true;
        for (std::size_t p = 0; p < inst.n(); ++p)
            local &= brute::nonempty(brute::code_1d(inst, pick, p));
        for (std::size_t p = 0; p + 1 < inst.n(); ++p)
            local &= brute::code_1d(inst, pick, p) != brute::code_1d(inst, pick, p + 1);
        if (local)
            CHECK(brute::is_code_1d(inst, pick));
    }
}

TEST_CASE("continuous 1D candidates") {
    // Two points more than a unit apart: two singleton windows.
    auto far = continuous_to_discrete_1d({0, 12}, 4);
    CHECK(far.scale == 8);
    CHECK(far.m() == 2);
    auto near = continuous_to_discrete_1d({0, 2}, 4);
    CHECK(near.m() == 3);

    Rng rng(73);
    for (int t = 0; t < 50; ++t) {
        std::set<Coord> s;
        auto n = static_cast<std::size_t>(uniform(rng, 1, 8));
        while (s.size() < n)
            s.insert(uniform(rng, 0, 40));
        std::vector<Coord> pts(s.begin(), s.end());
        const Coord unit = 8;
        auto inst = continuous_to_discrete_1d(pts, unit);
        CHECK(inst.m() <= 2 * n - 1);
        std::set<std::vector<bool>> sigs;
        for (const auto& w : inst.intervals) {
            CHECK(w.right - w.left == inst.scale);
            std::vector<bool> v(n);
            for (std::size_t p = 0; p < n; ++p)
                v[p] = interval_contains(w, inst.points[p]);
            CHECK(sigs.insert(v).second);
        }
        // A run i..j fits a closed unit window avoiding both neighbours iff it spans at most a
        // unit and the neighbours span more than one.
        std::size_t runs = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                if (pts[j] - pts[i] > unit)
                    continue;
                if (i > 0 && j + 1 < n && pts[j + 1] - pts[i - 1] <= unit)
                    continue;
                std::vector<bool> v(n, false);
                for (auto p = i; p <= j; ++p)
                    v[p] = true;
                CHECK(sigs.count(v) == 1);
                ++runs;
            }
        CHECK(runs == inst.m());
    }
}
