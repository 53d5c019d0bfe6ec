#include "chordcubic/serialize.hpp"

namespace chordcubic {

nlohmann::ordered_json report_json(const Report& r, bool with_timing) {
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.stats) stats[key] = value;
  nlohmann::ordered_json out{{"claim", r.claim},
                             {"status", std::string(to_string(r.status))},
                             {"witness", r.witness},
                             {"stats", stats}};
  if (with_timing) out["millis"] = r.millis;
  return out;
}

}  // namespace chordcubic
