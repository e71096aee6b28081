#ifndef SNAKEDIM_ORDER_HPP
#define SNAKEDIM_ORDER_HPP

#include <vector>

#include "snakedim/metric_space.hpp"

namespace snakedim {

// A strict total order on point ids, stored both ways: rank(p) is the
// position of p, at(k) the point in position k.
class TotalOrder {
public:
    static TotalOrder from_permutation(int n, const std::vector<PointId>& perm);
    static TotalOrder identity(int n);

    int size() const { return static_cast<int>(seq_.size()); }
    int rank(PointId p) const { return rank_[p]; }
    PointId at(int pos) const { return seq_[pos]; }
    bool less(PointId a, PointId b) const { return rank_[a] < rank_[b]; }

    const std::vector<PointId>& sequence() const { return seq_; }
    const std::vector<int>& ranks() const { return rank_; }

    bool operator==(const TotalOrder& o) const { return seq_ == o.seq_; }

private:
    std::vector<PointId> seq_;  // position -> point
    std::vector<int> rank_;     // point -> position
};

// Coordinate order for segments; glue point first then coordinate order for
// circles. Throws NotGenerated for anything else.
TotalOrder natural_order(const FiniteMetricSpace& space);

// Ranks points by bit-reversed index; n must be a power of two.
TotalOrder bit_reversal_order(int n);

} // namespace snakedim

#endif
