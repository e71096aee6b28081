#include "snakedim/order.hpp"

#include <algorithm>
#include <numeric>

namespace snakedim {

TotalOrder TotalOrder::from_permutation(int n, const std::vector<PointId>& perm) {
    if (static_cast<int>(perm.size()) != n)
        throw NotAPermutation("expected " + std::to_string(n) + " ids, got " +
                              std::to_string(perm.size()));
    std::vector<int> seen(n, 0);
    for (PointId p : perm) {
        if (p < 0 || p >= n) throw NotAPermutation("id " + std::to_string(p) + " out of range");
        if (seen[p]++) throw NotAPermutation("id " + std::to_string(p) + " repeated");
    }
    TotalOrder t;
    t.seq_ = perm;
    t.rank_.assign(n, 0);
    for (int k = 0; k < n; ++k) t.rank_[perm[k]] = k;
    return t;
}

TotalOrder TotalOrder::identity(int n) {
    std::vector<PointId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return from_permutation(n, perm);
}

TotalOrder natural_order(const FiniteMetricSpace& space) {
    const auto& prov = space.provenance();
    if (prov.kind != SpaceKind::Segment && prov.kind != SpaceKind::Circle)
        throw NotGenerated("natural order needs a segment or circle space, got " +
                           prov.describe());
    const int n = space.size();
    std::vector<PointId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Generators emit points in coordinate order with the circle glue point
    // (coordinate 0) first, so identity realizes both natural orders.
    std::stable_sort(perm.begin(), perm.end(), [&](PointId a, PointId b) {
        return prov.coords[a][0] < prov.coords[b][0];
    });
    return TotalOrder::from_permutation(n, perm);
}

TotalOrder bit_reversal_order(int n) {
    if (n < 1 || (n & (n - 1)) != 0) throw BadParams("bit-reversal needs a power-of-two size");
    int bits = 0;
    while ((1 << bits) < n) ++bits;
    std::vector<PointId> perm(n);
    for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int b = 0; b < bits; ++b) r = (r << 1) | ((i >> b) & 1);
        perm[r] = i;  // position r holds the point with bit-reversed index r
    }
    return TotalOrder::from_permutation(n, perm);
}

} // namespace snakedim
