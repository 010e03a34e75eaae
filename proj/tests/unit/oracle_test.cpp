#include "disc/exact_oracle.hpp"
#include "disc/random_instances.hpp"

#include "../support/brute.hpp"

#include <doctest.h>

using namespace disc;

namespace {

std::uint64_t binom(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("lower bound") {
    CHECK(disc_code_lower_bound(1) == 1);
    CHECK(disc_code_lower_bound(3) == 2);
    CHECK(disc_code_lower_bound(4) == 3);
    CHECK(disc_code_lower_bound(7) == 3);
    CHECK(disc_code_lower_bound(8) == 4);
}

TEST_CASE("min_disc_code_exact examples") {
    Instance1D inst;
    inst.scale = 2;
    inst.points = {2, 4, 6};
    inst.intervals = {{1, 5}, {3, 7}};
    auto r = min_disc_code_exact(inst, {});
    REQUIRE(r.optimal());
    CHECK(r.chosen.size() == 2);
    CHECK(r.stats.start_size == 2);

    inst.intervals = {{1, 5}};
    auto twin = min_disc_code_exact(inst, {});
    CHECK(twin.status == OracleStatus::infeasible);
    REQUIRE(twin.witness);

    OracleBudget tiny;
    tiny.max_subset_size = 1;
    inst.intervals = {{1, 5}, {3, 7}};
    CHECK(min_disc_code_exact(inst, tiny).status == OracleStatus::budget_exceeded);
}

TEST_CASE("1D oracle matches enumeration and respects the lower bound") {
    Rng rng(17);
    for (int t = 0; t < 120; ++t) {
        Random1DSpec spec;
        spec.n = static_cast<std::size_t>(uniform(rng, 1, 8));
        spec.m = static_cast<std::size_t>(uniform(rng, static_cast<Coord>(spec.n), 12));
        spec.unit = t % 2 == 0;
        auto inst = random_1d(rng, spec);
        auto r = min_disc_code_exact(inst, {});
        REQUIRE(r.optimal());
        CHECK(brute::is_code_1d(inst, r.chosen));
        CHECK(r.chosen.size() == brute::min_code_1d(inst));
        CHECK(r.chosen.size() >= disc_code_lower_bound(inst.n()));
    }
}

TEST_CASE("exhausted sizes account for every subset") {
    Rng rng(23);
    for (int t = 0; t < 40; ++t) {
        Random1DSpec spec;
        spec.n = static_cast<std::size_t>(uniform(rng, 3, 8));
        spec.m = static_cast<std::size_t>(uniform(rng, static_cast<Coord>(spec.n), 12));
        auto inst = random_1d(rng, spec);
        auto r = min_disc_code_exact(inst, {});
        REQUIRE(r.optimal());
        for (auto [k, count] : r.stats.accounted) {
            CHECK(k < r.chosen.size());
            CHECK(count == binom(r.stats.elements, k));
        }
        CHECK(r.stats.accounted.size() == r.chosen.size() - r.stats.start_size);
    }
}

TEST_CASE("2D discrete oracle matches enumeration") {
    Rng rng(29);
    for (int t = 0; t < 40; ++t) {
        Random2DSpec spec;
        spec.n = static_cast<std::size_t>(uniform(rng, 1, 5));
        spec.squares = static_cast<std::size_t>(uniform(rng, static_cast<Coord>(spec.n), 9));
        auto inst = random_2d(rng, spec);
        auto r = min_disc_code_exact(inst, {});
        REQUIRE(r.result.optimal());
        CHECK(r.result.chosen.size() == brute::min_code_2d(inst));
        CHECK(is_disc_code(inst, r.result.chosen));
    }
}

TEST_CASE("continuous 2D oracle returns a code at 4x scale") {
    Instance2D inst;
    inst.scale = 4;
    inst.points = {{0, 0}, {4, 4}, {8, 8}};
    auto r = min_disc_code_exact(inst, {});
    REQUIRE(r.result.optimal());
    CHECK(r.scale == 16);
    CHECK(r.centers.size() == 2);
    CHECK(brute::is_code_2d({{0, 0}, {16, 16}, {32, 32}}, 16, r.centers));
}

TEST_CASE("hitting set oracle") {
    std::vector<Point2> cands{{1, 1}, {2, 2}, {3, 1}, {10, 10}};
    Rect box{Range::closed(0, 4), Range::closed(0, 4)};
    Rect far{Range::closed(9, 11), Range::closed(9, 11)};
    auto one = min_hitting_set_exact(std::vector<std::vector<Rect>>{{box}}, cands, {});
    REQUIRE(one.optimal());
    CHECK(one.chosen.size() == 1);
    auto two = min_hitting_set_exact(std::vector<std::vector<Rect>>{{box}, {far}}, cands, {});
    CHECK(two.chosen.size() == 2);
    Rect empty{Range::closed(20, 21), Range::closed(20, 21)};
    auto none = min_hitting_set_exact(std::vector<std::vector<Rect>>{{box}, {empty}}, cands, {});
    CHECK(none.status == OracleStatus::infeasible);
    CHECK(none.witness->first == 1);

    brute::Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        std::vector<Point2> pts;
        for (int q = 0; q < 12; ++q)
            pts.push_back({brute::pick(rng, 0, 30), brute::pick(rng, 0, 30)});
        std::vector<std::vector<Rect>> objs;
        std::vector<Rect> flat;
        while (objs.size() < 8) {
            Coord x = brute::pick(rng, 0, 24), y = brute::pick(rng, 0, 24);
            Rect r{Range::closed(x, x + brute::pick(rng, 2, 10)), Range::closed(y, y + brute::pick(rng, 2, 10))};
            if (std::none_of(pts.begin(), pts.end(), [&](Point2 p) { return r.contains(p); }))
                continue;
            objs.push_back({r});
            flat.push_back(r);
        }
        auto r = min_hitting_set_exact(objs, pts, {});
        REQUIRE(r.optimal());
        CHECK(r.chosen.size() == brute::min_hitting(flat, pts));
    }
}

TEST_CASE("min_stab_exact") {
    Instance2D far;
    far.scale = 4;
    far.points = {{0, 0}, {12, 12}};
    auto a = min_stab_exact(far, {});
    REQUIRE(a.result.optimal());
    CHECK(a.centers.size() == 1);

    Instance2D path;
    path.scale = 2;
    path.points = {{0, 0}, {2, 2}, {4, 4}};
    auto b = min_stab_exact(path, {});
    REQUIRE(b.result.optimal());
    CHECK(b.centers.size() == 2);

    Rng rng(37);
    for (int t = 0; t < 25; ++t) {
        Random2DSpec spec;
        spec.n = static_cast<std::size_t>(uniform(rng, 2, 5));
        auto inst = random_2d(rng, spec);
        auto r = min_stab_exact(inst, {});
        REQUIRE(r.result.optimal());
        CHECK(r.centers.size() == brute::min_stab_continuous(inst.points, inst.scale));
    }
}
