#include "disc/approx2.hpp"
#include "disc/random_instances.hpp"

#include "../support/brute.hpp"

#include <doctest.h>

using namespace disc;

namespace {

Instance1D make(std::vector<Coord> pts, std::vector<Interval> ivs) {
    Instance1D inst;
    inst.scale = 4;
    inst.points = std::move(pts);
    inst.intervals = std::move(ivs);
    return inst;
}

// Five points; intervals 3 and 4 repeat the gap pairs of intervals 1 and 2.
Instance1D with_redundant() {
    return make({4, 8, 12, 16, 20}, {{2, 6}, {6, 10}, {10, 18}, {7, 9}, {11, 19}, {14, 22}});
}

} // namespace

TEST_CASE("classify_points") {
    SUBCASE("all distinct") {
        auto inst = make({4, 8, 12}, {{2, 6}, {6, 10}, {10, 14}});
        auto c = classify_points(inst, {0, 1, 2});
        CHECK(c.unique == IndexSet{0, 1, 2});
        CHECK(c.uncovered.empty());
        CHECK(c.classes.empty());
        CHECK(c.lemma3_bound == 1);
    }
    SUBCASE("one shared class and an uncovered point") {
        // codes: {0}, {0,1}, {0}, {}, {2}
        auto inst = make({4, 8, 12, 16, 20}, {{2, 14}, {6, 10}, {18, 22}});
        auto c = classify_points(inst, {0, 1, 2});
        CHECK(c.unique == IndexSet{1, 4});
        CHECK(c.uncovered == IndexSet{3});
        REQUIRE(c.classes.size() == 1);
        CHECK(c.classes[0] == IndexSet{0, 2});
        CHECK(c.lemma3_bound == 2);
        CHECK(c.all_classes().size() == 2);
    }
    SUBCASE("consecutive points in one class are rejected") {
        auto inst = make({4, 8}, {{2, 10}});
        CHECK_THROWS_AS(classify_points(inst, {0}), std::logic_error);
    }
}

TEST_CASE("augment") {
    auto inst = make({4, 8, 12}, {{2, 14}, {6, 10}, {11, 13}});
    auto c = classify_points(inst, {0, 1});
    REQUIRE(c.classes.size() == 1);
    auto s = augment(inst, {0, 1}, c);
    CHECK(s == IndexSet{0, 1, 2});

    auto distinct = make({4, 8, 12}, {{2, 6}, {6, 10}, {10, 14}});
    auto cd = classify_points(distinct, {0, 1, 2});
    CHECK(augment(distinct, {0, 1, 2}, cd) == IndexSet{0, 1, 2});
}

TEST_CASE("approx2 examples") {
    auto single = make({4}, {{2, 6}, {1, 7}});
    auto r = approx2(single);
    CHECK(r.chosen.size() == 1);

    auto inst = with_redundant();
    auto res = approx2(inst);
    CHECK(res.pruned_intervals == 2);
    CHECK(std::find(res.chosen.begin(), res.chosen.end(), 3) == res.chosen.end());
    CHECK(std::find(res.chosen.begin(), res.chosen.end(), 4) == res.chosen.end());
    CHECK(brute::is_code_1d(inst, res.chosen));
    auto opt = brute::min_code_1d(inst);
    REQUIRE(opt);
    CHECK(res.certificate.s_prime <= *opt);
    CHECK(res.chosen.size() <= 2 * *opt);

    CHECK_THROWS_AS(approx2(make({4, 8}, {{2, 10}})), Infeasible);
}

TEST_CASE("approx2 on random instances") {
    Rng rng(43);
    for (int t = 0; t < 150; ++t) {
        Random1DSpec spec;
        spec.n = static_cast<std::size_t>(uniform(rng, 1, 10));
        spec.m = static_cast<std::size_t>(uniform(rng, static_cast<Coord>(spec.n), 14));
        auto inst = random_1d(rng, spec);
        auto r = approx2(inst);
        CHECK(brute::is_code_1d(inst, r.chosen));
        const auto& cert = r.certificate;
        CHECK(cert.final_size == r.chosen.size());
        CHECK(cert.s_prime == r.s_prime.size());
        CHECK(cert.s_prime >= cert.lemma3_bound);
        CHECK(cert.final_size <= 2 * cert.s_prime);

        // S' separates every consecutive pair.
        for (std::size_t p = 0; p + 1 < inst.n(); ++p)
            CHECK(brute::code_1d(inst, r.s_prime, p) != brute::code_1d(inst, r.s_prime, p + 1));

        // Class spans are disjoint or nested.
        const auto& classes = r.classification.classes;
        for (std::size_t a = 0; a < classes.size(); ++a)
            for (std::size_t b = a + 1; b < classes.size(); ++b) {
                auto lo_a = classes[a].front(), hi_a = classes[a].back();
                auto lo_b = classes[b].front(), hi_b = classes[b].back();
                bool disjoint = hi_a < lo_b || hi_b < lo_a;
                bool nested = (lo_a < lo_b && hi_b < hi_a) || (lo_b < lo_a && hi_a < hi_b);
                CHECK((disjoint || nested));
            }

        auto opt = brute::min_code_1d(inst);
        REQUIRE(opt);
        CHECK(cert.s_prime <= *opt);
        CHECK(cert.final_size <= 2 * *opt);
    }
}
