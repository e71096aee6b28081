#include "snakedim/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace snakedim {

using nlohmann::json;

json real_to_json(double v) {
    if (std::isinf(v)) return "inf";
    return v;
}

json space_to_json(const FiniteMetricSpace& space) {
    json j;
    j["n"] = space.size();
    j["metric"] = "matrix";
    json dist = json::array();
    for (int i = 0; i < space.size(); ++i) {
        json row = json::array();
        for (int k = 0; k < space.size(); ++k) row.push_back(space.dist(i, k));
        dist.push_back(std::move(row));
    }
    j["dist"] = std::move(dist);
    if (!space.labels().empty()) j["labels"] = space.labels();
    const auto& prov = space.provenance();
    if (prov.generated()) {
        json p;
        p["kind"] = to_string(prov.kind);
        p["params"] = prov.params;
        if (!prov.coords.empty()) p["coords"] = prov.coords;
        j["provenance"] = std::move(p);
    }
    return j;
}

FiniteMetricSpace space_from_json(const json& j) {
    if (!j.contains("metric")) throw IoError("space file lacks 'metric'");
    const std::string metric = j.at("metric").get<std::string>();

    std::vector<std::vector<double>> matrix;
    if (metric == "matrix") {
        matrix = j.at("dist").get<std::vector<std::vector<double>>>();
    } else if (metric == "points") {
        if (j.value("p", "euclidean") != "euclidean")
            throw IoError("unsupported point metric '" + j.value("p", "") + "'");
        const auto coords = j.at("coords").get<std::vector<std::vector<double>>>();
        const size_t n = coords.size();
        matrix.assign(n, std::vector<double>(n, 0.0));
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                double s = 0;
                for (size_t c = 0; c < coords[a].size(); ++c) {
                    const double d = coords[a][c] - coords[b][c];
                    s += d * d;
                }
                matrix[a][b] = std::sqrt(s);
            }
    } else {
        throw IoError("unknown metric '" + metric + "'");
    }

    Provenance prov;
    if (j.contains("provenance")) {
        const auto& p = j.at("provenance");
        prov.kind = space_kind_from_string(p.at("kind").get<std::string>());
        prov.params = p.at("params").get<std::vector<long long>>();
        if (p.contains("coords"))
            prov.coords = p.at("coords").get<std::vector<std::vector<double>>>();
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return make_space(matrix, std::move(prov), std::move(labels));
}

json order_to_json(const TotalOrder& order) { return json(order.sequence()); }

TotalOrder order_from_json(const json& j, int n) {
    return TotalOrder::from_permutation(n, j.get<std::vector<PointId>>());
}

json hierarchy_to_json(const CoverHierarchy& h) {
    json levels = json::array();
    for (int i = 0; i < h.depth(); ++i) {
        json level;
        level["sets"] = h.levels[i].sets;
        level["mesh"] = h.levels[i].mesh;
        level["margin"] = h.margins[i];
        levels.push_back(std::move(level));
    }
    json j;
    j["levels"] = std::move(levels);
    j["parent"] = h.parent;
    j["mult_bound"] = h.mult_bound;
    return j;
}

CoverHierarchy hierarchy_from_json(const json& j, const FiniteMetricSpace& space) {
    CoverHierarchy h;
    h.mult_bound = j.at("mult_bound").get<int>();
    for (const auto& level : j.at("levels")) {
        Cover cover = make_cover(space, level.at("sets").get<std::vector<std::vector<PointId>>>());
        h.margins.push_back(level.at("margin").get<double>());
        h.levels.push_back(std::move(cover));
    }
    h.parent = j.at("parent").get<std::vector<std::vector<int>>>();
    if (h.parent.size() != h.levels.size()) throw IoError("parent map depth mismatch");
    return h;
}

json profile_to_json(const SnakeProfile& profile) {
    json j;
    j["pair"] = {profile.x, profile.y};
    j["scales"] = profile.scales;
    json values = json::array();
    json witness = json::array();
    for (const auto& v : profile.values) {
        if (v.overlap) {
            values.push_back("overlap");
        } else {
            values.push_back(v.snake.value);
            witness = json(v.snake.witness);  // deepest non-overlap witness
        }
    }
    j["values"] = std::move(values);
    j["witness"] = std::move(witness);
    if (profile.overlap_at) j["overlap_at"] = *profile.overlap_at;
    return j;
}

std::string profile_to_csv(const SnakeProfile& profile) {
    std::ostringstream os;
    os << "scale,value\n";
    os.precision(17);
    for (size_t i = 0; i < profile.scales.size(); ++i) {
        os << profile.scales[i] << ",";
        if (profile.values[i].overlap) os << "overlap";
        else os << profile.values[i].snake.value;
        os << "\n";
    }
    return os.str();
}

json certificate_to_json(const CertificateResult& cert) {
    json j;
    j["pass"] = cert.pass;
    j["bound"] = cert.bound;
    j["worst_pair"] = {cert.worst_pair[0], cert.worst_pair[1]};
    j["worst_value"] = cert.worst_value;
    json skipped = json::array();
    for (const auto& p : cert.skipped) skipped.push_back({p[0], p[1]});
    j["skipped_pairs"] = std::move(skipped);
    return j;
}

json search_to_json(const SearchResult& result) {
    json j;
    j["best_value"] = result.best_value;
    j["explored"] = result.explored;
    j["exhaustive"] = result.exhaustive;
    j["best_order"] = order_to_json(result.best_order);
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw IoError("write failed for " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

json read_json_file(const std::string& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
}

} // namespace snakedim
