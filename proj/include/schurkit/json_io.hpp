#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "schurkit/characters.hpp"
#include "schurkit/partition.hpp"

namespace schurkit {

using json = nlohmann::json;

json to_json(const Partition& lambda);
/// Accepts a JSON array of integers; errors as for the Partition constructor.
Partition partition_from_json(const json& j);

/// {"[μ]": c, ...}
json to_json(const std::map<Partition, Coeff>& coeffs);
std::map<Partition, Coeff> coeff_map_from_json(const json& j);

json to_json(const std::vector<Partition>& list);

} // namespace schurkit
