#ifndef SNAKEDIM_METRIC_SPACE_HPP
#define SNAKEDIM_METRIC_SPACE_HPP

#include <string>
#include <vector>

#include "snakedim/errors.hpp"

namespace snakedim {

using PointId = int;

enum class SpaceKind {
    Ingested,
    Segment,
    Circle,
    Grid,
    Tripod,
    TripodProduct,
    Cantor,
};

std::string to_string(SpaceKind kind);
SpaceKind space_kind_from_string(const std::string& s);

// Generator descriptor. `coords` holds per-point coordinates for generated
// spaces (1D position for segment/circle/cantor, lattice position for grid);
// ingested spaces carry none.
struct Provenance {
    SpaceKind kind = SpaceKind::Ingested;
    std::vector<long long> params;
    std::vector<std::vector<double>> coords;

    bool generated() const { return kind != SpaceKind::Ingested; }
    std::string describe() const;
};

// A finite metric space: validated symmetric distance matrix over point ids
// 0..n-1. Immutable after construction.
class FiniteMetricSpace {
public:
    int size() const { return n_; }

    double dist(PointId i, PointId j) const { return d_[static_cast<size_t>(i) * n_ + j]; }

    double diameter() const { return diameter_; }

    // Smallest positive pairwise distance; 0 for a single point.
    double min_distance() const { return min_dist_; }

    const Provenance& provenance() const { return prov_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Open ball { p : dist(center, p) < radius }. radius = 0 gives the empty set.
    std::vector<PointId> ball(PointId center, double radius) const;

    friend FiniteMetricSpace make_space(const std::vector<std::vector<double>>& matrix,
                                        Provenance prov, std::vector<std::string> labels);

private:
    FiniteMetricSpace() = default;

    int n_ = 0;
    std::vector<double> d_;
    Provenance prov_;
    std::vector<std::string> labels_;
    double diameter_ = 0;
    double min_dist_ = 0;
};

// Validates symmetry, positivity and the triangle inequality
// (tolerance 1e-9 * diameter) before returning the space.
FiniteMetricSpace make_space(const std::vector<std::vector<double>>& matrix,
                             Provenance prov = {}, std::vector<std::string> labels = {});

struct GenSpec {
    SpaceKind kind = SpaceKind::Segment;
    int n = 2;        // point count for segment/circle
    int dim = 1;      // grid dimension
    int m = 2;        // grid points per axis / tripod leg length
    int depth = 1;    // cantor depth
    int arity = 1;    // tripod product factor count
    unsigned long long seed = 0;
};

FiniteMetricSpace generate(const GenSpec& spec);

FiniteMetricSpace make_segment(int n);
FiniteMetricSpace make_circle(int n);
FiniteMetricSpace make_grid(int dim, int m);
FiniteMetricSpace make_tripod(int m);
FiniteMetricSpace make_tripod_product(int arity, int m);
FiniteMetricSpace make_cantor(int depth);

} // namespace snakedim

#endif
