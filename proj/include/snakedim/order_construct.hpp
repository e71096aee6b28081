#ifndef SNAKEDIM_ORDER_CONSTRUCT_HPP
#define SNAKEDIM_ORDER_CONSTRUCT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "snakedim/cover.hpp"
#include "snakedim/order.hpp"
#include "snakedim/snake.hpp"

namespace snakedim {

// Per point, the set indices (U_0(x), ..., U_L(x)) of an f-path through the
// hierarchy, root first.
struct ChainAssignment {
    std::vector<std::vector<int>> chains;
};

// Canonical chain: smallest-index set containing the point at the deepest
// level, then parents upward.
ChainAssignment assign_chains(const CoverHierarchy& h);

// Lexicographic comparison of chains under per-level set orders (default:
// index order); identical full chains tie-broken by point id.
TotalOrder lex_order(const CoverHierarchy& h,
                     const std::vector<std::vector<int>>* level_orders = nullptr);

// Seeded per-level permutations, for probing bound robustness under
// arbitrary level orders.
std::vector<std::vector<int>> random_level_orders(const CoverHierarchy& h, std::uint64_t seed);

struct CertificateResult {
    bool pass = false;
    int bound = 0;  // 2n + 1
    std::array<PointId, 2> worst_pair{0, 0};
    int worst_value = -1;
    std::vector<std::array<PointId, 2>> skipped;  // pairs with no admissible level
};

// For every pair (a,b), picks the first level k with
// 2*mesh_k + 2*margin_k < d(a,b) and evaluates the longest snake of
// (B_r(a), B_r(b)), r = margin_k, in both directions. Pass iff every value
// is <= 2n+1. Pairs too close for even the deepest level are skipped and listed.
CertificateResult theorem_b_certificate(const FiniteMetricSpace& space, const TotalOrder& order,
                                        const CoverHierarchy& h, int n, int threads = 1);

struct SeparatingFamily {
    std::vector<std::vector<PointId>> sets;      // U_0, U_1, ... (each sorted)
    std::vector<std::vector<std::uint8_t>> codes;  // codes[p][i] = (p in U_i)
};

// Family from the single-linkage merge tree: each merge contributes one
// child's point set, ordered from the coarsest split down.
SeparatingFamily separating_family_dendrogram(const FiniteMetricSpace& space);

// Wraps a user-supplied family; throws NotSeparating if two points share codes.
SeparatingFamily separating_family_provided(const FiniteMetricSpace& space,
                                            std::vector<std::vector<PointId>> sets);

// Smallest distance between a family member and its complement.
double family_min_gap(const FiniteMetricSpace& space, const SeparatingFamily& family);

TotalOrder binary_code_order(const SeparatingFamily& family);

// Order interval [min_T(subset), max_T(subset)]; empty for the empty set.
std::vector<PointId> t_convex_hull(const TotalOrder& order, const std::vector<PointId>& subset);

struct ConvexDecomposition {
    std::vector<std::vector<PointId>> classes;        // partition of the exterior
    PointId center = 0;
    double eps = 0;
    std::vector<std::array<int, 2>> class_intervals;  // [min rank, max rank] per class
};

// Partitions {x : d(x0,x) >= r} into classes whose T-convex hulls avoid
// B_eps(x0). Requires 0 < eps <= r.
ConvexDecomposition convex_decomposition(const FiniteMetricSpace& space, const TotalOrder& order,
                                         PointId x0, double r, double eps);

} // namespace snakedim

#endif
