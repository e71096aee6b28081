#ifndef SNAKEDIM_ORDER_SEARCH_HPP
#define SNAKEDIM_ORDER_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "snakedim/order.hpp"
#include "snakedim/snake.hpp"

namespace snakedim {

// Value of an order = max over scales of the snake number at that scale;
// scales where every ball pair overlaps contribute nothing.
struct SearchObjective {
    std::vector<double> scales;
};

int order_objective(const FiniteMetricSpace& space, const TotalOrder& order,
                    const SearchObjective& objective);

struct SearchResult {
    TotalOrder best_order;
    int best_value = 0;
    long long explored = 0;
    bool exhaustive = false;
};

inline constexpr int kExhaustiveLimit = 9;

// Evaluates every permutation (n <= 9); returns the lexicographically first
// minimizer.
SearchResult exhaustive_min_snake(const FiniteMetricSpace& space, const SearchObjective& objective);

// Hill climbing over adjacent transpositions from a seeded random start.
// `iterations` caps the number of accepted moves; deterministic given the seed.
SearchResult local_search_min_snake(const FiniteMetricSpace& space,
                                    const SearchObjective& objective, std::uint64_t seed,
                                    int iterations);

} // namespace snakedim

#endif
