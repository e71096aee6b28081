#include "snakedim/cover.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

namespace snakedim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double set_diameter(const FiniteMetricSpace& space, const std::vector<PointId>& set) {
    double d = 0;
    for (size_t a = 0; a < set.size(); ++a)
        for (size_t b = a + 1; b < set.size(); ++b)
            d = std::max(d, space.dist(set[a], set[b]));
    return d;
}

double point_set_dist(const FiniteMetricSpace& space, PointId x, const std::vector<PointId>& set) {
    double d = kInf;
    for (PointId p : set) d = std::min(d, space.dist(x, p));
    return d;
}

} // namespace

Cover make_cover(const FiniteMetricSpace& space, std::vector<std::vector<PointId>> sets) {
    const int n = space.size();
    std::vector<char> covered(n, 0);
    for (auto& s : sets) {
        if (s.empty()) throw BadParams("cover contains an empty set");
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (PointId p : s) {
            if (p < 0 || p >= n) throw BadParams("cover references point " + std::to_string(p));
            covered[p] = 1;
        }
    }
    for (int p = 0; p < n; ++p)
        if (!covered[p]) throw BadParams("point " + std::to_string(p) + " not covered");
    Cover c;
    c.sets = std::move(sets);
    for (const auto& s : c.sets) c.mesh = std::max(c.mesh, set_diameter(space, s));
    return c;
}

MultiplicityReport cover_multiplicity(const FiniteMetricSpace& space, const Cover& cover,
                                      int requested_bound) {
    MultiplicityReport rep;
    for (PointId x = 0; x < space.size(); ++x) {
        int count = 0;
        for (const auto& s : cover.sets)
            if (std::binary_search(s.begin(), s.end(), x)) ++count;
        if (count > rep.max_point_multiplicity) {
            rep.max_point_multiplicity = count;
            rep.worst_point = x;
        }
    }
    rep.margin = rep.max_point_multiplicity <= requested_bound
                     ? multiplicity_margin(space, cover, requested_bound)
                     : 0.0;
    return rep;
}

MultiplicityReport cover_multiplicity(const FiniteMetricSpace& space, const Cover& cover) {
    MultiplicityReport rep = cover_multiplicity(space, cover, space.size());
    rep.margin = multiplicity_margin(space, cover, rep.max_point_multiplicity);
    return rep;
}

double lebesgue_number(const FiniteMetricSpace& space, const Cover& cover) {
    const int n = space.size();
    double result = kInf;
    for (PointId x = 0; x < n; ++x) {
        double depth = 0;
        for (const auto& s : cover.sets) {
            if (!std::binary_search(s.begin(), s.end(), x)) continue;
            // depth(x, U) = min distance from x to any point outside U.
            double d = kInf;
            std::vector<char> member(n, 0);
            for (PointId p : s) member[p] = 1;
            for (PointId p = 0; p < n; ++p)
                if (!member[p]) d = std::min(d, space.dist(x, p));
            depth = std::max(depth, d);
            if (depth == kInf) break;
        }
        result = std::min(result, depth);
    }
    return result;
}

double multiplicity_margin(const FiniteMetricSpace& space, const Cover& cover, int m) {
    if (m < 1) throw BadParams("multiplicity bound must be >= 1");
    double result = kInf;
    std::vector<double> dmins;
    for (PointId x = 0; x < space.size(); ++x) {
        dmins.clear();
        for (const auto& s : cover.sets) dmins.push_back(point_set_dist(space, x, s));
        if (static_cast<int>(dmins.size()) <= m) continue;
        std::nth_element(dmins.begin(), dmins.begin() + m, dmins.end());
        result = std::min(result, dmins[m]);
    }
    return result;
}

namespace {

struct GridGeometry {
    int dim;
    double spacing;
    const std::vector<std::vector<double>>* coords;
};

GridGeometry grid_geometry(const FiniteMetricSpace& space) {
    const auto& prov = space.provenance();
    if (prov.kind == SpaceKind::Grid) {
        const int m = static_cast<int>(prov.params[1]);
        return {static_cast<int>(prov.params[0]), 1.0 / (m - 1), &prov.coords};
    }
    if (prov.kind == SpaceKind::Segment) {
        const int n = static_cast<int>(prov.params[0]);
        return {1, 1.0 / (n - 1), &prov.coords};
    }
    throw BadParams("brick cover needs a grid or segment space, got " + prov.describe());
}

std::vector<std::vector<PointId>> brick_sets(const FiniteMetricSpace& space,
                                             const GridGeometry& g, double side) {
    const int d = g.dim;
    const auto& coords = *g.coords;
    // Coordinates live in [0,1]; two extra index slots absorb the stagger
    // shift and the side/8 enlargement.
    const int lo = -2;
    const int hi = static_cast<int>(std::ceil(1.0 / side)) + 2;
    std::vector<int> idx(d);
    std::set<std::vector<PointId>> seen;
    std::vector<std::vector<PointId>> sets;
    // Staircase brickwork: coordinate c is shifted by side/2^j for each odd
    // index j steps further along, so box boundaries of rows that can meet
    // never align (they stay >= side/2^(d-1) apart). The enlargement
    // side/2^(d+2) is strictly below half that clearance, which keeps the
    // multiplicity at d+1.
    const double enlarge = side / (1 << (d + 2));
    auto box_members = [&](const std::vector<int>& ix) {
        std::vector<PointId> members;
        for (PointId p = 0; p < space.size(); ++p) {
            bool inside = true;
            for (int c = 0; c < d && inside; ++c) {
                double shift = 0;
                for (int j = 1; c + j < d; ++j)
                    if ((((ix[c + j] % 2) + 2) % 2) == 1) shift += side / (1 << j);
                const double origin = ix[c] * side + shift;
                const double x = coords[p][c];
                inside = x >= origin - enlarge && x <= origin + side + enlarge;
            }
            if (inside) members.push_back(p);
        }
        return members;
    };
    std::function<void(int)> recurse = [&](int c) {
        if (c == d) {
            auto members = box_members(idx);
            if (!members.empty() && seen.insert(members).second)
                sets.push_back(std::move(members));
            return;
        }
        for (int i = lo; i <= hi; ++i) {
            idx[c] = i;
            recurse(c + 1);
        }
    };
    recurse(0);
    return sets;
}

} // namespace

Cover brick_cover(const FiniteMetricSpace& space, double side) {
    const GridGeometry g = grid_geometry(space);
    if (!(side > g.spacing))
        throw BadParams("side must exceed the grid spacing " + std::to_string(g.spacing));
    Cover cover = make_cover(space, brick_sets(space, g, side));
    const int bound = g.dim + 1;
    MultiplicityReport rep = cover_multiplicity(space, cover, bound);
    if (rep.max_point_multiplicity > bound)
        throw MultiplicityExceeded(rep.max_point_multiplicity, bound, rep.worst_point);
    return cover;
}

namespace {

// Single-linkage merging constrained to stay within one parent set and below
// the diameter target. Deterministic: edges processed by (length, a, b).
std::vector<std::vector<PointId>> partition_sets(const FiniteMetricSpace& space,
                                                 const Cover& parent_cover, double target) {
    const int n = space.size();
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    std::vector<std::vector<PointId>> members(n);
    std::vector<std::vector<int>> parents(n);
    for (PointId p = 0; p < n; ++p) {
        members[p] = {p};
        for (int s = 0; s < static_cast<int>(parent_cover.sets.size()); ++s)
            if (std::binary_search(parent_cover.sets[s].begin(), parent_cover.sets[s].end(), p))
                parents[p].push_back(s);
    }
    std::function<int(int)> find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };

    struct Edge {
        double d;
        PointId a, b;
    };
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (PointId a = 0; a < n; ++a)
        for (PointId b = a + 1; b < n; ++b) edges.push_back({space.dist(a, b), a, b});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.d, x.a, x.b) < std::tie(y.d, y.a, y.b);
    });

    for (const Edge& e : edges) {
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) continue;
        std::vector<int> common;
        std::set_intersection(parents[ra].begin(), parents[ra].end(), parents[rb].begin(),
                              parents[rb].end(), std::back_inserter(common));
        if (common.empty()) continue;
        double diam = 0;
        for (PointId p : members[ra])
            for (PointId q : members[rb]) diam = std::max(diam, space.dist(p, q));
        if (diam > target) continue;
        if (members[rb].size() > members[ra].size()) std::swap(ra, rb);
        root[rb] = ra;
        members[ra].insert(members[ra].end(), members[rb].begin(), members[rb].end());
        members[rb].clear();
        parents[ra] = std::move(common);
    }

    std::vector<std::vector<PointId>> sets;
    for (PointId p = 0; p < n; ++p)
        if (find(p) == p) {
            std::sort(members[p].begin(), members[p].end());
            sets.push_back(members[p]);
        }
    std::sort(sets.begin(), sets.end());
    return sets;
}

} // namespace

CoverHierarchy build_hierarchy(const FiniteMetricSpace& space, HierarchyBuilder builder, int depth,
                               int mult_bound) {
    if (depth < 1) throw BadParams("depth must be >= 1");
    if (mult_bound < 1) throw BadParams("mult_bound must be >= 1");
    const int n = space.size();

    CoverHierarchy h;
    h.mult_bound = mult_bound;
    std::vector<PointId> all(n);
    std::iota(all.begin(), all.end(), 0);
    h.levels.push_back(make_cover(space, {all}));
    h.parent.push_back({});

    for (int level = 1; level < depth; ++level) {
        const Cover& prev = h.levels.back();
        if (prev.mesh <= 0)
            throw CannotRefine("level " + std::to_string(level - 1) + " already has mesh 0");
        const double leb = lebesgue_number(space, prev);
        const double target = std::min(prev.mesh / 2, leb * (1 - 1e-9));
        if (!(target > 0)) throw CannotRefine("lebesgue number collapsed");

        std::vector<std::vector<PointId>> sets;
        if (builder == HierarchyBuilder::Brick) {
            const GridGeometry g = grid_geometry(space);
            double side = target / (1.25 * std::sqrt(static_cast<double>(g.dim)));
            bool done = false;
            for (int tries = 0; tries < 200 && !done; ++tries) {
                sets = brick_sets(space, g, side);
                Cover candidate = make_cover(space, sets);
                done = candidate.mesh <= prev.mesh / 2 && candidate.mesh < leb &&
                       cover_multiplicity(space, candidate).max_point_multiplicity <= mult_bound;
                if (!done) side *= 0.8;
            }
            if (!done) throw CannotRefine("no brick side fits level " + std::to_string(level));
        } else {
            sets = partition_sets(space, prev, target);
        }

        Cover cover = make_cover(space, std::move(sets));
        if (!(cover.mesh <= prev.mesh / 2) || !(cover.mesh < prev.mesh))
            throw CannotRefine("mesh did not halve at level " + std::to_string(level));

        // Parent map: smallest-index containing set.
        std::vector<int> par(cover.sets.size(), -1);
        for (size_t s = 0; s < cover.sets.size(); ++s) {
            for (size_t t = 0; t < prev.sets.size(); ++t) {
                if (std::includes(prev.sets[t].begin(), prev.sets[t].end(), cover.sets[s].begin(),
                                  cover.sets[s].end())) {
                    par[s] = static_cast<int>(t);
                    break;
                }
            }
            if (par[s] < 0)
                throw CannotRefine("set " + std::to_string(s) + " at level " +
                                   std::to_string(level) + " has no parent");
        }
        h.levels.push_back(std::move(cover));
        h.parent.push_back(std::move(par));
    }

    // Margins: the largest radius satisfying the multiplicity bound, capped at
    // the diameter. The deepest level is additionally capped so that every
    // point pair admits a certificate level whenever its mesh permits.
    for (int level = 0; level < h.depth(); ++level) {
        const Cover& cover = h.levels[level];
        MultiplicityReport rep = cover_multiplicity(space, cover, mult_bound);
        if (rep.max_point_multiplicity > mult_bound)
            throw MultiplicityExceeded(rep.max_point_multiplicity, mult_bound, rep.worst_point);
        double margin = std::min(multiplicity_margin(space, cover, mult_bound), space.diameter());
        if (level == h.depth() - 1) {
            const double dmin = space.min_distance();
            if (dmin > 0 && cover.mesh < dmin / 2)
                margin = std::min(margin, (dmin - 2 * cover.mesh) / 4);
        }
        if (!(margin > 0)) throw MultiplicityExceeded(rep.max_point_multiplicity, mult_bound,
                                                      rep.worst_point);
        h.margins.push_back(margin);
    }

    HierarchyReport report = validate_hierarchy(space, h, mult_bound);
    if (!report.ok) throw CannotRefine("built hierarchy failed validation");
    return h;
}

HierarchyReport validate_hierarchy(const FiniteMetricSpace& space, const CoverHierarchy& h,
                                   int mult_bound) {
    HierarchyReport report;
    for (int level = 0; level < h.depth(); ++level) {
        LevelDiagnostics diag;
        diag.level = level;
        const Cover& cover = h.levels[level];
        diag.mesh = cover.mesh;
        diag.margin = level < static_cast<int>(h.margins.size()) ? h.margins[level] : 0;

        if (level > 0) {
            const Cover& prev = h.levels[level - 1];
            if (!(cover.mesh <= prev.mesh / 2)) {
                diag.mesh_ok = false;
                diag.detail += "mesh does not halve; ";
            }
            const auto& par = h.parent[level];
            if (par.size() != cover.sets.size()) {
                diag.refinement_ok = false;
                diag.detail += "parent map size mismatch; ";
            } else {
                for (size_t s = 0; s < cover.sets.size(); ++s) {
                    const int t = par[s];
                    if (t < 0 || t >= static_cast<int>(prev.sets.size()) ||
                        !std::includes(prev.sets[t].begin(), prev.sets[t].end(),
                                       cover.sets[s].begin(), cover.sets[s].end())) {
                        diag.refinement_ok = false;
                        diag.detail += "set " + std::to_string(s) + " not inside its parent; ";
                        break;
                    }
                }
            }
        }

        const double max_margin = multiplicity_margin(space, cover, mult_bound);
        if (!(diag.margin > 0) || diag.margin > max_margin) {
            diag.margin_ok = false;
            diag.detail += "margin violates the multiplicity bound; ";
        }

        report.ok = report.ok && diag.refinement_ok && diag.mesh_ok && diag.margin_ok;
        report.levels.push_back(std::move(diag));
    }
    return report;
}

} // namespace snakedim
