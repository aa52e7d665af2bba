#include "schurkit/json_io.hpp"

#include "schurkit/error.hpp"

namespace schurkit {

json to_json(const Partition& lambda) { return json(lambda.vec()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array())
        throw Error(Errc::ParseError, "partition must be a JSON array: " + j.dump());
    std::vector<int> parts;
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw Error(Errc::ParseError, "partition entries must be integers: " + j.dump());
        parts.push_back(x.get<int>());
    }
    return Partition(std::move(parts));
}

json to_json(const std::map<Partition, Coeff>& coeffs) {
    json out = json::object();
    for (const auto& [mu, c] : coeffs)
        out[mu.str()] = c;
    return out;
}

std::map<Partition, Coeff> coeff_map_from_json(const json& j) {
    if (!j.is_object())
        throw Error(Errc::ParseError, "expected an object of partition keys: " + j.dump());
    std::map<Partition, Coeff> out;
    for (const auto& [key, value] : j.items())
        out.emplace(parse_partition(key), value.get<Coeff>());
    return out;
}

json to_json(const std::vector<Partition>& list) {
    json out = json::array();
    for (const auto& lambda : list)
        out.push_back(to_json(lambda));
    return out;
}

} // namespace schurkit
