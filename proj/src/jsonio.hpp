#pragma once

#include <json.hpp>
#include <string>

#include "flag.hpp"
#include "parse.hpp"

namespace fjump {

// Canonical serialization: the reduced Groebner basis as sorted strings.
nlohmann::json ideal_to_json(const Ideal& I);
std::string ideal_to_json_string(const Ideal& I);
Ideal ideal_from_json(const RingPtr& ring, const std::string& json_text);

nlohmann::json trace_to_json(const FlagTrace& t);

}  // namespace fjump
