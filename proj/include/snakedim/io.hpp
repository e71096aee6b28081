#ifndef SNAKEDIM_IO_HPP
#define SNAKEDIM_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "snakedim/cover.hpp"
#include "snakedim/metric_space.hpp"
#include "snakedim/order.hpp"
#include "snakedim/order_construct.hpp"
#include "snakedim/order_search.hpp"
#include "snakedim/snake.hpp"

namespace snakedim {

// Space file: {"n":int,"metric":"matrix","dist":[[...]]} or
// {"metric":"points","coords":[[...]],"p":"euclidean"}; generated spaces
// additionally carry a "provenance" object so natural orders and brick
// covers survive a round trip.
// Infinite reals (the Lebesgue sentinel) serialize as the string "inf".
nlohmann::json real_to_json(double v);

nlohmann::json space_to_json(const FiniteMetricSpace& space);
FiniteMetricSpace space_from_json(const nlohmann::json& j);

// Order file: point ids in T-increasing sequence.
nlohmann::json order_to_json(const TotalOrder& order);
TotalOrder order_from_json(const nlohmann::json& j, int n);

// Hierarchy file:
// {"levels":[{"sets":[[ids]],"mesh":r,"margin":r}],"parent":[[...]],"mult_bound":k}
nlohmann::json hierarchy_to_json(const CoverHierarchy& h);
CoverHierarchy hierarchy_from_json(const nlohmann::json& j, const FiniteMetricSpace& space);

nlohmann::json profile_to_json(const SnakeProfile& profile);
std::string profile_to_csv(const SnakeProfile& profile);

nlohmann::json certificate_to_json(const CertificateResult& cert);
nlohmann::json search_to_json(const SearchResult& result);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

} // namespace snakedim

#endif
