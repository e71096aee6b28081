#ifndef SNAKEDIM_SNAKE_HPP
#define SNAKEDIM_SNAKE_HPP

#include <optional>
#include <vector>

#include "snakedim/metric_space.hpp"
#include "snakedim/order.hpp"

namespace snakedim {

// Longest snake of an ordered set pair. value == kNoSnake means u1 was
// empty; otherwise witness lists a_0 < ... < a_s with even indices in u1
// and odd indices in u2.
struct SnakeResult {
    static constexpr int kNoSnake = -1;

    int value = kNoSnake;
    std::vector<PointId> witness;

    bool no_snake() const { return value == kNoSnake; }
};

// Greedy single scan in T-order; exact (see longest_snake_oracle).
SnakeResult longest_snake(const TotalOrder& order, const std::vector<PointId>& u1,
                          const std::vector<PointId>& u2);

// O(k^2) dynamic program over the union; the independent reference for
// longest_snake. Intended for small universes.
SnakeResult longest_snake_oracle(const TotalOrder& order, const std::vector<PointId>& u1,
                                 const std::vector<PointId>& u2);

// Witness validity: ranks strictly increase, memberships alternate,
// and the length matches the value.
bool check_witness(const TotalOrder& order, const std::vector<PointId>& u1,
                   const std::vector<PointId>& u2, const SnakeResult& result);

struct ScaleSnake {
    bool overlap = false;  // the two balls share a point
    SnakeResult snake;     // meaningful only when !overlap
};

ScaleSnake snake_at_scale(const FiniteMetricSpace& space, const TotalOrder& order, PointId x,
                          PointId y, double eps);

struct SnakeProfile {
    PointId x = 0;
    PointId y = 0;
    std::vector<double> scales;
    std::vector<ScaleSnake> values;
    std::optional<double> overlap_at;  // smallest tested radius whose balls intersect
};

SnakeProfile pair_snake_profile(const FiniteMetricSpace& space, const TotalOrder& order, PointId x,
                                PointId y, const std::vector<double>& scales);

struct SnakeNumberResult {
    SnakeResult best;
    PointId x = 0;  // argmax pair, tie-broken by (rank(x), rank(y))
    PointId y = 0;
};

// Max of snake_at_scale over all ordered pairs with disjoint balls.
// Throws NoDisjointPairs when every pair overlaps.
SnakeNumberResult snake_number_at_scale(const FiniteMetricSpace& space, const TotalOrder& order,
                                        double eps, int threads = 1);

// Same, but returns nullopt instead of throwing; used by the order search.
std::optional<SnakeNumberResult> try_snake_number_at_scale(const FiniteMetricSpace& space,
                                                           const TotalOrder& order, double eps,
                                                           int threads = 1);

} // namespace snakedim

#endif
