#include "jsonio.hpp"

namespace fjump {

nlohmann::json ideal_to_json(const Ideal& I) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& g : I.gb()) arr.push_back(g.str());
  return arr;
}

std::string ideal_to_json_string(const Ideal& I) { return ideal_to_json(I).dump(); }

Ideal ideal_from_json(const RingPtr& ring, const std::string& json_text) {
  nlohmann::json v = nlohmann::json::parse(json_text, nullptr, false);
  if (v.is_discarded() || !v.is_array())
    fail_parse("ideal must be a JSON array of polynomial strings");
  std::vector<Poly> gens;
  for (const auto& item : v) {
    if (!item.is_string()) fail_parse("ideal generators must be strings");
    gens.push_back(parse_poly(ring, item.get<std::string>()));
  }
  return Ideal(ring, std::move(gens));
}

nlohmann::json trace_to_json(const FlagTrace& t) {
  nlohmann::json ideals = nlohmann::json::array();
  for (const auto& I : t.ideals) ideals.push_back(ideal_to_json(I));
  return nlohmann::json{
      {"ideals", ideals}, {"stabilization_index", t.stable_index}, {"step", t.step}};
}

}  // namespace fjump
