#include "snakedim/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace snakedim {

std::string to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::Ingested: return "ingested";
        case SpaceKind::Segment: return "segment";
        case SpaceKind::Circle: return "circle";
        case SpaceKind::Grid: return "grid";
        case SpaceKind::Tripod: return "tripod";
        case SpaceKind::TripodProduct: return "tripod_product";
        case SpaceKind::Cantor: return "cantor";
    }
    return "ingested";
}

SpaceKind space_kind_from_string(const std::string& s) {
    if (s == "ingested") return SpaceKind::Ingested;
    if (s == "segment") return SpaceKind::Segment;
    if (s == "circle") return SpaceKind::Circle;
    if (s == "grid") return SpaceKind::Grid;
    if (s == "tripod") return SpaceKind::Tripod;
    if (s == "tripod_product") return SpaceKind::TripodProduct;
    if (s == "cantor") return SpaceKind::Cantor;
    throw BadParams("unknown space kind '" + s + "'");
}

std::string Provenance::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    if (!params.empty()) {
        os << "(";
        for (size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
        os << ")";
    }
    return os.str();
}

std::vector<PointId> FiniteMetricSpace::ball(PointId center, double radius) const {
    std::vector<PointId> out;
    for (PointId p = 0; p < n_; ++p)
        if (dist(center, p) < radius) out.push_back(p);
    return out;
}

FiniteMetricSpace make_space(const std::vector<std::vector<double>>& matrix, Provenance prov,
                             std::vector<std::string> labels) {
    const int n = static_cast<int>(matrix.size());
    if (n < 1) throw BadParams("matrix must have size >= 1");
    for (const auto& row : matrix)
        if (static_cast<int>(row.size()) != n) throw BadParams("matrix is not square");

    FiniteMetricSpace s;
    s.n_ = n;
    s.d_.assign(static_cast<size_t>(n) * n, 0.0);
    double diam = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = matrix[i][j];
            if (!std::isfinite(v)) throw NegativeDistance(i, j);
            if (i == j) {
                if (v != 0.0) throw NegativeDistance(i, j);
            } else if (v <= 0.0) {
                throw NegativeDistance(i, j);
            }
            s.d_[static_cast<size_t>(i) * n + j] = v;
            diam = std::max(diam, v);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (matrix[i][j] != matrix[j][i]) throw AsymmetricMatrix(i, j);

    const double tol = 1e-9 * diam;
    for (int i = 0; i < n; ++i) {
        const double* di = s.d_.data() + static_cast<size_t>(i) * n;
        for (int j = i + 1; j < n; ++j) {
            const double dij = di[j];
            const double* dj = s.d_.data() + static_cast<size_t>(j) * n;
            for (int k = 0; k < n; ++k)
                if (dij > di[k] + dj[k] + tol) throw TriangleViolation(i, j, k);
        }
    }

    s.diameter_ = diam;
    double mind = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) mind = std::min(mind, s.dist(i, j));
    s.min_dist_ = n >= 2 ? mind : 0.0;
    s.prov_ = std::move(prov);
    s.labels_ = std::move(labels);
    return s;
}

namespace {

FiniteMetricSpace from_coords_1d(std::vector<double> xs, SpaceKind kind,
                                 std::vector<long long> params, bool circular) {
    const int n = static_cast<int>(xs.size());
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double d = std::abs(xs[i] - xs[j]);
            if (circular) d = std::min(d, 1.0 - d);
            m[i][j] = d;
        }
    Provenance prov;
    prov.kind = kind;
    prov.params = std::move(params);
    prov.coords.reserve(n);
    for (double x : xs) prov.coords.push_back({x});
    return make_space(m, std::move(prov));
}

} // namespace

FiniteMetricSpace make_segment(int n) {
    if (n < 2) throw BadParams("segment needs n >= 2");
    std::vector<double> xs(n);
    for (int k = 0; k < n; ++k) xs[k] = static_cast<double>(k) / (n - 1);
    return from_coords_1d(std::move(xs), SpaceKind::Segment, {n}, false);
}

FiniteMetricSpace make_circle(int n) {
    if (n < 2) throw BadParams("circle needs n >= 2");
    std::vector<double> xs(n);
    for (int k = 0; k < n; ++k) xs[k] = static_cast<double>(k) / n;
    return from_coords_1d(std::move(xs), SpaceKind::Circle, {n}, true);
}

FiniteMetricSpace make_grid(int dim, int m) {
    if (dim < 1 || m < 2) throw BadParams("grid needs d >= 1 and m >= 2");
    long long total = 1;
    for (int c = 0; c < dim; ++c) {
        total *= m;
        if (total > 200000) throw BadParams("grid too large");
    }
    const int n = static_cast<int>(total);
    std::vector<std::vector<double>> coords(n, std::vector<double>(dim));
    for (int p = 0; p < n; ++p) {
        int rest = p;
        for (int c = dim - 1; c >= 0; --c) {
            coords[p][c] = static_cast<double>(rest % m) / (m - 1);
            rest /= m;
        }
    }
    std::vector<std::vector<double>> mat(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int c = 0; c < dim; ++c) {
                const double d = coords[i][c] - coords[j][c];
                s += d * d;
            }
            mat[i][j] = std::sqrt(s);
        }
    Provenance prov;
    prov.kind = SpaceKind::Grid;
    prov.params = {dim, m};
    prov.coords = std::move(coords);
    return make_space(mat, std::move(prov));
}

namespace {

// Tripod points as (leg, arc position): leg -1 is the center at position 0;
// legs 0..2 carry m points at positions t/m, t = 1..m.
struct TripodGeom {
    std::vector<std::pair<int, double>> pts;
    std::vector<std::string> labels;

    explicit TripodGeom(int m) {
        pts.push_back({-1, 0.0});
        labels.push_back("c");
        for (int leg = 0; leg < 3; ++leg)
            for (int t = 1; t <= m; ++t) {
                pts.push_back({leg, static_cast<double>(t) / m});
                labels.push_back(std::string(1, static_cast<char>('a' + leg)) + std::to_string(t));
            }
    }

    double dist(int i, int j) const {
        const auto& [la, xa] = pts[i];
        const auto& [lb, xb] = pts[j];
        if (la == lb) return std::abs(xa - xb);
        return xa + xb;  // path through the center
    }
};

} // namespace

FiniteMetricSpace make_tripod(int m) {
    if (m < 1) throw BadParams("tripod needs m >= 1");
    TripodGeom geom(m);
    const int n = static_cast<int>(geom.pts.size());
    std::vector<std::vector<double>> mat(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat[i][j] = geom.dist(i, j);
    Provenance prov;
    prov.kind = SpaceKind::Tripod;
    prov.params = {m};
    return make_space(mat, std::move(prov), std::move(geom.labels));
}

FiniteMetricSpace make_tripod_product(int arity, int m) {
    if (arity < 1 || m < 1) throw BadParams("tripod_product needs n >= 1 and m >= 1");
    TripodGeom geom(m);
    const int base = static_cast<int>(geom.pts.size());
    long long total = 1;
    for (int c = 0; c < arity; ++c) {
        total *= base;
        if (total > 100000) throw BadParams("tripod product too large");
    }
    const int n = static_cast<int>(total);
    std::vector<std::vector<int>> factor(n, std::vector<int>(arity));
    for (int p = 0; p < n; ++p) {
        int rest = p;
        for (int c = arity - 1; c >= 0; --c) {
            factor[p][c] = rest % base;
            rest /= base;
        }
    }
    // Max-metric: ball products stay products of balls.
    std::vector<std::vector<double>> mat(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double d = 0;
            for (int c = 0; c < arity; ++c)
                d = std::max(d, geom.dist(factor[i][c], factor[j][c]));
            mat[i][j] = d;
        }
    Provenance prov;
    prov.kind = SpaceKind::TripodProduct;
    prov.params = {arity, m};
    return make_space(mat, std::move(prov));
}

FiniteMetricSpace make_cantor(int depth) {
    if (depth < 1) throw BadParams("cantor needs depth >= 1");
    if (depth > 20) throw BadParams("cantor too deep");
    // Left endpoints of the level-`depth` middle-thirds intervals.
    std::vector<double> xs;
    xs.reserve(1u << depth);
    const int count = 1 << depth;
    for (int code = 0; code < count; ++code) {
        double x = 0, scale = 1.0 / 3.0;
        for (int b = depth - 1; b >= 0; --b) {
            if ((code >> b) & 1) x += 2 * scale;
            scale /= 3;
        }
        xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    return from_coords_1d(std::move(xs), SpaceKind::Cantor, {depth}, false);
}

FiniteMetricSpace generate(const GenSpec& spec) {
    switch (spec.kind) {
        case SpaceKind::Segment: return make_segment(spec.n);
        case SpaceKind::Circle: return make_circle(spec.n);
        case SpaceKind::Grid: return make_grid(spec.dim, spec.m);
        case SpaceKind::Tripod: return make_tripod(spec.m);
        case SpaceKind::TripodProduct: return make_tripod_product(spec.arity, spec.m);
        case SpaceKind::Cantor: return make_cantor(spec.depth);
        case SpaceKind::Ingested: break;
    }
    throw BadParams("cannot generate an ingested space");
}

} // namespace snakedim
