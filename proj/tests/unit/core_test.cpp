#include "disc/instance.hpp"
#include "disc/instance_io.hpp"
#include "disc/random_instances.hpp"

#include "../support/brute.hpp"

#include <doctest.h>

using namespace disc;

namespace {

// Half-unit coordinates at scale 2.
Instance1D line(std::vector<Coord> pts, std::vector<Interval> ivs, Coord scale = 2) {
    Instance1D inst;
    inst.scale = scale;
    inst.points = std::move(pts);
    inst.intervals = std::move(ivs);
    return inst;
}

} // namespace

TEST_CASE("closed containment") {
    CHECK(contains(ScaledInterval{{0, 2}, 1}, Scaled1{1, 1}));
    CHECK(contains(ScaledInterval{{0, 2}, 1}, Scaled1{2, 1}));
    // Center (0,0), point (1/2, 1/2) at scale 4.
    CHECK(contains(ScaledSquare{{0, 0}, 4}, Scaled2{{2, 2}, 4}));
    CHECK_FALSE(contains(ScaledSquare{{0, 0}, 4}, Scaled2{{3, 0}, 4}));
    CHECK_THROWS_AS(contains(ScaledInterval{{0, 2}, 1}, Scaled1{1, 2}), InputError);
}

TEST_CASE("containment is symmetric under reflection") {
    brute::Rng rng(11);
    for (int t = 0; t < 500; ++t) {
        Point2 c{brute::pick(rng, -20, 20), brute::pick(rng, -20, 20)};
        Point2 p{brute::pick(rng, -20, 20), brute::pick(rng, -20, 20)};
        bool in = square_contains(c, 8, p);
        CHECK(in == square_contains({-c.x, c.y}, 8, {-p.x, p.y}));
        CHECK(in == square_contains({c.x, -c.y}, 8, {p.x, -p.y}));
        CHECK(in == square_contains({c.y, c.x}, 8, {p.y, p.x}));
        Interval s{c.x - 4, c.x + 4};
        CHECK(interval_contains(s, p.x) == interval_contains({-s.right, -s.left}, -p.x));
    }
}

TEST_CASE("code_of") {
    // points {1,2}, A=[0,1.5], B=[0,3]
    auto inst = line({2, 4}, {{0, 3}, {0, 6}});
    CHECK(code_of(inst, {0, 1}, 0) == Code{0, 1});
    CHECK(code_of(inst, {0, 1}, 1) == Code{1});
    CHECK(code_of(inst, {}, 0).empty());
    CHECK(code_of(inst, {1, 0, 1}, 0) == Code{0, 1});
}

TEST_CASE("is_disc_code") {
    // points {1,2,3}, A=[0.5,2.5], B=[1.5,3.5]
    auto inst = line({2, 4, 6}, {{1, 5}, {3, 7}});
    CHECK(is_disc_code(inst, {0, 1}));
    auto bad = is_disc_code(line({2, 4}, {{0, 6}}), {0});
    REQUIRE_FALSE(bad);
    CHECK(bad.witness->first == 0);
    CHECK(bad.witness->second == std::optional<std::size_t>{1});
    CHECK(bad.witness->describe() == "points 0 and 1 share a code");

    auto uncovered = is_disc_code(inst, {0});
    REQUIRE_FALSE(uncovered);
    CHECK_FALSE(uncovered.witness->is_pair());
    CHECK(uncovered.witness->first == 2);
    CHECK_THROWS_AS(is_disc_code(inst, {5}), InputError);
}

TEST_CASE("check_twin_free examples") {
    auto twins = check_twin_free(line({2, 4, 8}, {{0, 6}, {1, 9}}));
    REQUIRE_FALSE(twins);
    CHECK(*twins.witness->second == 1);
    auto lonely = check_twin_free(line({2, 4, 20}, {{0, 3}, {3, 5}}));
    REQUIRE_FALSE(lonely);
    CHECK(lonely.witness->first == 2);
    CHECK_FALSE(lonely.witness->is_pair());

    Instance2D cont;
    cont.scale = 4;
    cont.points = {{0, 0}, {1, 1}};
    CHECK(check_twin_free(cont));
}

TEST_CASE("check_twin_free agrees with full-set code comparison") {
    Rng rng(3);
    for (int t = 0; t < 300; ++t) {
        Random1DSpec spec;
        spec.n = static_cast<std::size_t>(uniform(rng, 1, 10));
        spec.m = static_cast<std::size_t>(uniform(rng, 0, 12));
        spec.twin_free = false;
        auto inst = random_1d(rng, spec);
        CHECK(static_cast<bool>(check_twin_free(inst)) == brute::twin_free_1d(inst));
    }
}

TEST_CASE("gaps") {
    auto g = gaps({1, 3});
    REQUIRE(g.size() == 3);
    CHECK(g[0] == Gap{std::nullopt, 1});
    CHECK(g[1] == Gap{1, 3});
    CHECK(g[2] == Gap{3, std::nullopt});
    CHECK(gaps({5}).size() == 2);
    auto none = gaps({});
    REQUIRE(none.size() == 1);
    CHECK(none[0] == Gap{});
    CHECK(left_gap({1, 3, 5}, 2) == 1);
    CHECK(right_gap({1, 3, 5}, 5) == 3);
}

TEST_CASE("prune_1d") {
    SUBCASE("useless") {
        // points {1,3,5} at scale 10, interval (3.2, 4.8)
        auto p = prune_1d(line({10, 30, 50}, {{32, 48}}, 8));
        CHECK(p.instance.m() == 0);
        REQUIRE(p.removed.size() == 1);
        CHECK(p.removed[0].reason == PruneEntry::Reason::useless);
    }
    SUBCASE("redundant keeps the lower index") {
        auto p = prune_1d(line({10, 30, 50}, {{25, 60}, {26, 65}}, 8));
        REQUIRE(p.instance.m() == 1);
        CHECK(p.original == std::vector<std::size_t>{0});
        REQUIRE(p.removed.size() == 1);
        CHECK(p.removed[0].index == 1);
        CHECK(p.removed[0].kept == std::optional<std::size_t>{0});
    }
    SUBCASE("to_original") {
        auto p = prune_1d(line({10, 30, 50}, {{32, 48}, {25, 60}, {5, 15}}, 8));
        CHECK(p.to_original({1, 0}) == IndexSet{1, 2});
    }
}

TEST_CASE("prune_1d keeps one interval per gap pair") {
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        Random1DSpec spec;
        spec.n = static_cast<std::size_t>(uniform(rng, 1, 9));
        spec.m = static_cast<std::size_t>(uniform(rng, 1, 15));
        spec.twin_free = false;
        auto inst = random_1d(rng, spec);
        auto p = prune_1d(inst);
        std::set<std::pair<std::size_t, std::size_t>> kept;
        for (const auto& s : p.instance.intervals) {
            auto key = std::pair{left_gap(inst.points, s.left), right_gap(inst.points, s.right)};
            CHECK(key.first != key.second);
            CHECK(kept.insert(key).second);
        }
        for (const auto& r : p.removed) {
            const auto& s = inst.intervals[r.index];
            auto key = std::pair{left_gap(inst.points, s.left), right_gap(inst.points, s.right)};
            if (r.reason == PruneEntry::Reason::useless)
                CHECK(key.first == key.second);
            else
                CHECK(kept.count(key) == 1);
        }
        // Same discrimination power as the full set.
        CHECK(static_cast<bool>(check_twin_free(inst)) == static_cast<bool>(check_twin_free(p.instance)));
        CHECK(p.instance.m() <= (inst.n() + 1) * inst.n() / 2);
    }
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(validate(line({2, 2}, {})), InputError);
    CHECK_THROWS_AS(validate(line({2}, {{3, 1}})), InputError);
    CHECK_THROWS_AS(validate(line({2}, {}, 3)), InputError);
    CHECK(validate(line({2}, {{2, 4}})).size() == 1);
    Instance2D d;
    d.scale = 4;
    d.points = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(validate(d), InputError);
    d.points = {{0, 0}};
    d.squares = std::vector<Point2>{};
    CHECK_THROWS_AS(validate(d), InputError);
}

TEST_CASE("json round trip") {
    auto inst = line({2, 4, 6}, {{1, 5}, {3, 7}});
    auto back = std::get<Instance1D>(instance_from_json(to_json(inst)));
    CHECK(back.points == inst.points);
    CHECK(back.intervals == inst.intervals);
    CHECK(to_json(inst)["format"] == 1);

    Instance2D d;
    d.scale = 8;
    d.points = {{0, 0}, {5, 3}};
    d.squares = std::vector<Point2>{{1, 1}};
    auto d2 = std::get<Instance2D>(instance_from_json(to_json(d)));
    CHECK(d2.points == d.points);
    CHECK(d2.squares == d.squares);
    d.squares.reset();
    CHECK_FALSE(std::get<Instance2D>(instance_from_json(to_json(d))).discrete());

    CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(R"({"points": 3})")), InputError);
    CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(R"({"format": 2, "points": []})")), InputError);
}

TEST_CASE("random generators are reproducible and in general position") {
    Rng a(99), b(99);
    Random2DSpec spec;
    spec.n = 6;
    spec.squares = 10;
    auto x = random_2d(a, spec);
    auto y = random_2d(b, spec);
    CHECK(x.points == y.points);
    CHECK(x.squares == y.squares);
    CHECK(validate(x).empty());
    CHECK(check_twin_free(x));
    Rng c(1);
    auto one = random_1d(c, {});
    CHECK(validate(one).empty());
    CHECK(check_twin_free(one));
}
