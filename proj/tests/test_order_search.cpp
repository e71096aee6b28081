#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "snakedim/metric_space.hpp"
#include "snakedim/order_search.hpp"

using namespace snakedim;

TEST_CASE("objective ignores scales where every pair overlaps") {
    const auto s = make_segment(4);
    const auto id = TotalOrder::identity(4);
    CHECK(order_objective(s, id, {{0.3}}) == 1);
    CHECK(order_objective(s, id, {{5.0}}) == 0);       // all balls overlap
    CHECK(order_objective(s, id, {{0.3, 5.0}}) == 1);  // max over defined scales
}

TEST_CASE("exhaustive search on the 4-point segment") {
    const auto s = make_segment(4);
    const auto r = exhaustive_min_snake(s, {{0.3}});
    CHECK(r.exhaustive);
    CHECK(r.explored == 24);
    CHECK(r.best_value == 1);
    // The identity attains the minimum and is lexicographically first.
    CHECK(r.best_order == TotalOrder::identity(4));
}

TEST_CASE("exhaustive search fixtures: circle and tripod") {
    // Pinned by this oracle run: the 6-cycle needs a snake of length 2 at a
    // radius a quarter step beyond the spacing; the small tripod gets away
    // with 1 at radius 1/2.
    const auto circle = make_circle(6);
    const auto rc = exhaustive_min_snake(circle, {{1.25 / 6}});
    CHECK(rc.explored == 720);
    CHECK(rc.best_value == 2);

    const auto tripod = make_tripod(2);
    const auto rt = exhaustive_min_snake(tripod, {{0.5}});
    CHECK(rt.explored == 5040);
    CHECK(rt.best_value == 1);
}

TEST_CASE("exhaustive search refuses large spaces") {
    CHECK_THROWS_AS(exhaustive_min_snake(make_segment(10), {{0.3}}), TooLarge);
    CHECK_NOTHROW(exhaustive_min_snake(make_segment(9), {{2.0}}));
}

TEST_CASE("the natural segment order is optimal up to symmetries") {
    // Enumerate every order of the 6-point segment and collect the
    // minimizers. Pinned: the winners are the natural order and its reversal,
    // each with the two extreme endpoints optionally swapped with their
    // outermost neighbours -- 8 orders in total.
    const auto s = make_segment(6);
    const SearchObjective objective{{1.25 / 5}};
    const int best = exhaustive_min_snake(s, objective).best_value;
    CHECK(best == 1);

    std::vector<std::vector<PointId>> winners;
    std::vector<PointId> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const auto order = TotalOrder::from_permutation(6, perm);
        if (order_objective(s, order, objective) == best) winners.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto contains = [&](std::vector<PointId> seq) {
        return std::find(winners.begin(), winners.end(), seq) != winners.end();
    };
    CHECK(contains({0, 1, 2, 3, 4, 5}));
    CHECK(contains({5, 4, 3, 2, 1, 0}));
    // Closed under reversal.
    for (auto w : winners) {
        std::reverse(w.begin(), w.end());
        CHECK(contains(w));
    }
    CHECK(winners.size() == 8);
}

TEST_CASE("local search") {
    const auto s = make_segment(20);
    const SearchObjective objective{{0.1}};

    SUBCASE("deterministic for a fixed seed") {
        const auto a = local_search_min_snake(s, objective, 7, 200);
        const auto b = local_search_min_snake(s, objective, 7, 200);
        CHECK(a.best_value == b.best_value);
        CHECK(a.best_order == b.best_order);
        CHECK(a.explored == b.explored);
        CHECK_FALSE(a.exhaustive);
    }
    SUBCASE("zero iterations reports the start order") {
        const auto r = local_search_min_snake(s, objective, 7, 0);
        CHECK(r.explored == 1);
        CHECK(r.best_value == order_objective(s, r.best_order, objective));
    }
    SUBCASE("improves the start but plateaus above the natural order") {
        // The natural order certifies that value 1 is reachable; adjacent
        // transpositions from a random start stall earlier. Pinned for this
        // seed as a determinism regression value.
        const auto natural = natural_order(s);
        CHECK(order_objective(s, natural, objective) == 1);
        const auto r = local_search_min_snake(s, objective, 7, 500);
        const int start = order_objective(
            s, local_search_min_snake(s, objective, 7, 0).best_order, objective);
        CHECK(r.best_value >= 1);
        CHECK(r.best_value <= start);
        CHECK(r.best_value == 5);
    }
}

TEST_CASE("local search never beats the exhaustive minimum") {
    const auto s = make_segment(6);
    const SearchObjective objective{{0.25}};
    const int floor_value = exhaustive_min_snake(s, objective).best_value;
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
        const auto r = local_search_min_snake(s, objective, seed, 100);
        CHECK(r.best_value >= floor_value);
    }
}
