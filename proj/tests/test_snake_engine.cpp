#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

#include "snakedim/metric_space.hpp"
#include "snakedim/order.hpp"
#include "snakedim/snake.hpp"

using namespace snakedim;

namespace {

std::vector<PointId> random_subset(std::mt19937_64& rng, int n, double p) {
    std::vector<PointId> out;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (PointId i = 0; i < n; ++i)
        if (coin(rng) < p) out.push_back(i);
    return out;
}

TotalOrder random_order(std::mt19937_64& rng, int n) {
    std::vector<PointId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return TotalOrder::from_permutation(n, perm);
}

} // namespace

TEST_CASE("longest snake on hand-checked set pairs") {
    const auto order = TotalOrder::identity(6);

    SUBCASE("perfect alternation") {
        const auto r = longest_snake(order, {0, 2, 4}, {1, 3, 5});
        CHECK(r.value == 5);
        CHECK(r.witness == std::vector<PointId>{0, 1, 2, 3, 4, 5});
        CHECK(check_witness(order, {0, 2, 4}, {1, 3, 5}, r));
    }
    SUBCASE("second set entirely before the first") {
        const auto r = longest_snake(order, {4}, {1});
        CHECK(r.value == 0);
        CHECK(r.witness == std::vector<PointId>{4});
    }
    SUBCASE("empty first set has no snake") {
        const auto r = longest_snake(order, {}, {1, 3});
        CHECK(r.no_snake());
        CHECK(r.value == SnakeResult::kNoSnake);
        CHECK(r.witness.empty());
    }
    SUBCASE("shared points count once") {
        const auto r = longest_snake(order, {0, 1}, {1, 2});
        CHECK(r.value == 1);
    }
    SUBCASE("reversed order changes the answer") {
        const auto rev = TotalOrder::from_permutation(6, {5, 4, 3, 2, 1, 0});
        CHECK(longest_snake(rev, {0, 2, 4}, {1, 3, 5}).value == 4);
    }
}

TEST_CASE("oracle agrees on the hand-checked pairs") {
    const auto order = TotalOrder::identity(6);
    CHECK(longest_snake_oracle(order, {0, 2, 4}, {1, 3, 5}).value == 5);
    CHECK(longest_snake_oracle(order, {4}, {1}).value == 0);
    CHECK(longest_snake_oracle(order, {}, {1, 3}).no_snake());
    CHECK(longest_snake_oracle(order, {0, 1}, {1, 2}).value == 1);
}

TEST_CASE("greedy scan matches the dynamic program on 10000 random instances") {
    std::mt19937_64 rng(20260824);
    std::uniform_int_distribution<int> size(1, 12);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = size(rng);
        const auto order = random_order(rng, n);
        const auto u1 = random_subset(rng, n, density(rng));
        const auto u2 = random_subset(rng, n, density(rng));
        const auto fast = longest_snake(order, u1, u2);
        const auto slow = longest_snake_oracle(order, u1, u2);
        REQUIRE(fast.value == slow.value);
        REQUIRE(check_witness(order, u1, u2, fast));
        REQUIRE(check_witness(order, u1, u2, slow));
    }
}

TEST_CASE("snake length drops by at most one when the sets swap roles") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const auto order = random_order(rng, n);
        const auto u1 = random_subset(rng, n, 0.5);
        const auto u2 = random_subset(rng, n, 0.5);
        const int a = longest_snake(order, u1, u2).value;
        const int b = longest_snake(order, u2, u1).value;
        if (a >= 0 && b >= 0) CHECK(std::abs(a - b) <= 1);
    }
}

TEST_CASE("snake length is monotone under set inclusion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const auto order = random_order(rng, n);
        auto u1 = random_subset(rng, n, 0.6);
        auto u2 = random_subset(rng, n, 0.6);
        const int full = longest_snake(order, u1, u2).value;
        // Shrink each set independently; the snake can only get shorter.
        auto s1 = random_subset(rng, n, 0.5), s2 = random_subset(rng, n, 0.5);
        std::vector<PointId> v1, v2;
        std::set_intersection(u1.begin(), u1.end(), s1.begin(), s1.end(), std::back_inserter(v1));
        std::set_intersection(u2.begin(), u2.end(), s2.begin(), s2.end(), std::back_inserter(v2));
        CHECK(longest_snake(order, v1, v2).value <= full);
    }
}

TEST_CASE("witness checker rejects tampered witnesses") {
    const auto order = TotalOrder::identity(6);
    auto r = longest_snake(order, {0, 2, 4}, {1, 3, 5});
    SUBCASE("wrong length") {
        r.value = 4;
        CHECK_FALSE(check_witness(order, {0, 2, 4}, {1, 3, 5}, r));
    }
    SUBCASE("broken alternation") {
        r.witness = {0, 1, 3, 2, 4, 5};
        CHECK_FALSE(check_witness(order, {0, 2, 4}, {1, 3, 5}, r));
    }
    SUBCASE("membership violation") {
        r.witness = {1, 0, 2, 3, 4, 5};
        CHECK_FALSE(check_witness(order, {0, 2, 4}, {1, 3, 5}, r));
    }
}

TEST_CASE("snake at scale on the segment") {
    const auto space = make_segment(101);
    const auto order = natural_order(space);
    const auto r = snake_at_scale(space, order, 20, 80, 0.05);
    CHECK_FALSE(r.overlap);
    CHECK(r.snake.value == 1);
    CHECK(check_witness(order, space.ball(20, 0.05), space.ball(80, 0.05), r.snake));

    CHECK(snake_at_scale(space, order, 20, 80, 0.4).overlap);
    CHECK_THROWS_AS(snake_at_scale(space, order, 20, 20, 0.05), SamePoint);
}

TEST_CASE("snake at scale on the glued circle") {
    const auto space = make_circle(100);
    const auto order = natural_order(space);
    // The glue point's ball splits into a low-rank and a high-rank arc, so the
    // antipodal ball threads between them.
    CHECK(snake_at_scale(space, order, 0, 50, 0.1).snake.value == 2);
    CHECK(snake_at_scale(space, order, 50, 0, 0.1).snake.value == 1);
    // Pairs away from the glue point behave like the segment: the lower-rank
    // ball leads with 1, the higher-rank ball cannot even start alternating.
    CHECK(snake_at_scale(space, order, 25, 75, 0.1).snake.value == 1);
    CHECK(snake_at_scale(space, order, 75, 25, 0.1).snake.value == 0);
}

TEST_CASE("pair snake profile") {
    const auto space = make_circle(100);
    const auto order = natural_order(space);
    const std::vector<double> scales = {0.01, 0.05, 0.1, 0.2, 0.3};
    const auto profile = pair_snake_profile(space, order, 0, 50, scales);
    CHECK(profile.scales == scales);
    REQUIRE(profile.values.size() == scales.size());
    for (size_t i = 0; i < 4; ++i) CHECK_FALSE(profile.values[i].overlap);
    // At radius 0.01 each ball is a single point; beyond that the glue
    // point's split ball sustains a length-2 snake.
    CHECK(profile.values[0].snake.value == 1);
    for (size_t i = 1; i < 4; ++i) CHECK(profile.values[i].snake.value == 2);
    CHECK(profile.values[4].overlap);  // radius 0.3 balls meet near 0.25/0.75
    REQUIRE(profile.overlap_at.has_value());
    CHECK(*profile.overlap_at == 0.3);

    // Values are monotone in the radius until the first overlap.
    for (size_t i = 1; i < profile.values.size(); ++i) {
        if (profile.values[i].overlap) break;
        CHECK(profile.values[i].snake.value >= profile.values[i - 1].snake.value);
    }

    CHECK_THROWS_AS(pair_snake_profile(space, order, 0, 50, {0.1, 0.1}), Error);
    CHECK_THROWS_AS(pair_snake_profile(space, order, 0, 50, {-0.1, 0.2}), Error);
}

TEST_CASE("snake number at scale: basics") {
    const auto two = make_space({{0, 1}, {1, 0}});
    const auto id2 = TotalOrder::identity(2);
    const auto r = snake_number_at_scale(two, id2, 0.3);
    CHECK(r.best.value == 1);
    CHECK(r.x == 0);
    CHECK(r.y == 1);
    CHECK(snake_number_at_scale(two, id2, 0.7).best.value == 1);
    CHECK_THROWS_AS(snake_number_at_scale(two, id2, 1.5), NoDisjointPairs);
    CHECK_FALSE(try_snake_number_at_scale(two, id2, 1.5).has_value());
}

TEST_CASE("snake number at scale: segment and circle fixtures") {
    const auto seg = make_segment(101);
    CHECK(snake_number_at_scale(seg, natural_order(seg), 0.05).best.value == 1);

    const auto circle = make_circle(100);
    const auto order = natural_order(circle);
    const auto r = snake_number_at_scale(circle, order, 0.1);
    CHECK(r.best.value == 2);
    CHECK((r.x == 0 || r.y == 0));  // the argmax pair involves the glue point
    CHECK(check_witness(order, circle.ball(r.x, 0.1), circle.ball(r.y, 0.1), r.best));
}

TEST_CASE("snake number is identical across thread counts") {
    const auto space = make_grid(2, 8);
    std::mt19937_64 rng(3);
    const auto order = random_order(rng, space.size());
    for (double eps : {0.1, 0.2, 0.35}) {
        const auto a = snake_number_at_scale(space, order, eps, 1);
        const auto b = snake_number_at_scale(space, order, eps, 4);
        CHECK(a.best.value == b.best.value);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
        CHECK(a.best.witness == b.best.witness);
    }
}

TEST_CASE("argmax matches a brute-force pass over all pairs") {
    const auto space = make_circle(24);
    const auto order = natural_order(space);
    const double eps = 0.09;
    const auto fast = snake_number_at_scale(space, order, eps);
    int best = -1;
    for (PointId x = 0; x < space.size(); ++x)
        for (PointId y = 0; y < space.size(); ++y) {
            if (x == y) continue;
            const auto r = snake_at_scale(space, order, x, y, eps);
            if (!r.overlap) best = std::max(best, r.snake.value);
        }
    CHECK(fast.best.value == best);
}
