#include "chutes/json_io.hpp"

#include <stdexcept>
#include <string>

namespace chutes {

namespace {

SegmentKind parse_kind(const std::string& name) {
  if (name == "Belt") return SegmentKind::Belt;
  if (name == "Ladder") return SegmentKind::Ladder;
  if (name == "Chute") return SegmentKind::Chute;
  throw std::invalid_argument("unknown segment kind '" + name + "'");
}

}  // namespace

nlohmann::json path_to_json(const PathWitness& witness, std::uint64_t max_label_chars) {
  nlohmann::json j;
  j["start"] = witness.start.str();
  if (witness.labels.edge_count() <= max_label_chars) j["labels"] = witness.labels.str();
  j["edges"] = std::to_string(witness.labels.edge_count());
  auto segments = nlohmann::json::array();
  for (const auto& s : witness.labels.segments()) {
    segments.push_back({{"kind", std::string(to_string(s.kind))}, {"repeat", std::to_string(s.repeat)}});
  }
  j["segments"] = std::move(segments);
  return j;
}

PathWitness path_from_json(const nlohmann::json& j) {
  try {
    PathWitness out;
    out.start = parse_bigint(j.at("start").get<std::string>());
    if (j.contains("labels")) {
      out.labels = Labels::parse(j.at("labels").get<std::string>());
    } else {
      for (const auto& s : j.at("segments")) {
        const auto repeat = std::stoull(s.at("repeat").get<std::string>());
        out.labels.append(Segment{parse_kind(s.at("kind").get<std::string>()), repeat});
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed path JSON: ") + e.what());
  }
}

}  // namespace chutes
