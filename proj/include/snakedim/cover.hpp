#ifndef SNAKEDIM_COVER_HPP
#define SNAKEDIM_COVER_HPP

#include <string>
#include <vector>

#include "snakedim/metric_space.hpp"

namespace snakedim {

struct Cover {
    std::vector<std::vector<PointId>> sets;  // each sorted, non-empty
    double mesh = 0;                         // max set diameter
};

// Validates coverage and non-emptiness, sorts the sets, computes the mesh.
Cover make_cover(const FiniteMetricSpace& space, std::vector<std::vector<PointId>> sets);

struct MultiplicityReport {
    int max_point_multiplicity = 0;
    PointId worst_point = 0;
    double margin = 0;  // > 0 iff max_point_multiplicity <= the requested bound
};

MultiplicityReport cover_multiplicity(const FiniteMetricSpace& space, const Cover& cover,
                                      int requested_bound);
MultiplicityReport cover_multiplicity(const FiniteMetricSpace& space, const Cover& cover);

// Largest r such that every open r-ball lies inside some cover member;
// +inf when a member is the whole space.
double lebesgue_number(const FiniteMetricSpace& space, const Cover& cover);

// Largest r such that every open r-ball meets at most m members
// (a ball meets U iff min-distance to U is < r); 0 if some point lies in
// more than m members.
double multiplicity_margin(const FiniteMetricSpace& space, const Cover& cover, int m);

// Staggered brick cover for grid/segment spaces: axis-aligned boxes of the
// given side in a staircase pattern (coordinate c shifts by side/2^j per odd
// index j rows further along), each box enlarged by side/2^(d+2).
// Multiplicity <= d+1 is validated, not assumed.
Cover brick_cover(const FiniteMetricSpace& space, double side);

struct CoverHierarchy {
    std::vector<Cover> levels;             // level 0 = {M}
    std::vector<std::vector<int>> parent;  // parent[i][s]: level-i set s -> level-(i-1) set
    std::vector<double> margins;           // per level; positive, satisfies the mult bound
    int mult_bound = 1;

    int depth() const { return static_cast<int>(levels.size()); }
};

enum class HierarchyBuilder { Brick, Partition };

// Builds `depth` levels with mesh halving, refinement via the parent map,
// and positive multiplicity margins at every level. The deepest level's
// stored margin is capped so that, when its mesh allows, every point pair
// admits a certificate level (see theorem_b_certificate).
CoverHierarchy build_hierarchy(const FiniteMetricSpace& space, HierarchyBuilder builder, int depth,
                               int mult_bound);

struct LevelDiagnostics {
    int level = 0;
    bool refinement_ok = true;
    bool mesh_ok = true;
    bool margin_ok = true;
    double mesh = 0;
    double margin = 0;
    std::string detail;
};

struct HierarchyReport {
    bool ok = true;
    std::vector<LevelDiagnostics> levels;
};

HierarchyReport validate_hierarchy(const FiniteMetricSpace& space, const CoverHierarchy& h,
                                   int mult_bound);

} // namespace snakedim

#endif
