#include "snakedim/order_search.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace snakedim {

int order_objective(const FiniteMetricSpace& space, const TotalOrder& order,
                    const SearchObjective& objective) {
    int value = 0;
    for (double eps : objective.scales) {
        auto res = try_snake_number_at_scale(space, order, eps);
        if (res) value = std::max(value, res->best.value);
    }
    return value;
}

SearchResult exhaustive_min_snake(const FiniteMetricSpace& space,
                                  const SearchObjective& objective) {
    const int n = space.size();
    if (n > kExhaustiveLimit) throw TooLarge(n, kExhaustiveLimit);

    std::vector<PointId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    SearchResult result;
    result.exhaustive = true;
    result.best_value = -1;
    do {
        TotalOrder order = TotalOrder::from_permutation(n, perm);
        const int value = order_objective(space, order, objective);
        ++result.explored;
        // Strict improvement keeps the lexicographically first minimizer.
        if (result.best_value < 0 || value < result.best_value) {
            result.best_value = value;
            result.best_order = order;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

SearchResult local_search_min_snake(const FiniteMetricSpace& space,
                                    const SearchObjective& objective, std::uint64_t seed,
                                    int iterations) {
    const int n = space.size();
    std::vector<PointId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);

    SearchResult result;
    result.best_order = TotalOrder::from_permutation(n, perm);
    result.best_value = order_objective(space, result.best_order, objective);
    result.explored = 1;

    for (int accepted = 0; accepted < iterations;) {
        bool improved = false;
        for (int k = 0; k + 1 < n; ++k) {
            std::swap(perm[k], perm[k + 1]);
            TotalOrder candidate = TotalOrder::from_permutation(n, perm);
            const int value = order_objective(space, candidate, objective);
            ++result.explored;
            if (value < result.best_value) {
                result.best_value = value;
                result.best_order = candidate;
                improved = true;
                ++accepted;
                break;  // first improving adjacent transposition
            }
            std::swap(perm[k], perm[k + 1]);
        }
        if (!improved) break;
    }
    return result;
}

} // namespace snakedim
