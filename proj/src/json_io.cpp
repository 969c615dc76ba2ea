#include "latticecf/json_io.hpp"

#include "latticecf/errors.hpp"

#include <cstdint>
#include <limits>

namespace latticecf {

nlohmann::json integer_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

nlohmann::json sequence_json(const IntSeq& seq) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : seq)
        out.push_back(integer_json(x));
    return out;
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return j.get<std::int64_t>();
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    fail(ErrorKind::parse, "expected an integer, got " + j.dump());
}

} // namespace latticecf
