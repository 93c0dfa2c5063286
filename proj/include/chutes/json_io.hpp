#pragma once

#include "chutes/path.hpp"

#include <json.hpp>

#include <cstdint>

// JSON forms of path witnesses. Integers are decimal strings throughout, since
// vertices routinely exceed what JSON numbers hold exactly.
namespace chutes {

/// {"start": "<int>", "labels": "UDDUD", "edges": "<int>", "segments": [...]}.
/// "labels" is omitted when the path has more than `max_label_chars` edges.
nlohmann::json path_to_json(const PathWitness& witness, std::uint64_t max_label_chars = 1'000'000);

/// Accepts "labels" or, failing that, "segments". Throws std::invalid_argument
/// on malformed input.
PathWitness path_from_json(const nlohmann::json& j);

}  // namespace chutes
