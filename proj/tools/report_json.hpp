#pragma once

#include <string>

#include "json.hpp"
#include "legfront/constructions.hpp"
#include "legfront/front.hpp"
#include "legfront/invariants.hpp"
#include "legfront/moves.hpp"
#include "legfront/obstructions.hpp"

namespace legfront::cli {

// Bumped whenever a report changes shape; see docs/report.schema.json.
inline constexpr const char* kSchemaVersion = "1.0";

nlohmann::ordered_json report_header(const std::string& kind);

nlohmann::ordered_json to_json(const InvariantReport& r);
nlohmann::ordered_json to_json(const MoveInstance& m);
nlohmann::ordered_json to_json(const GenusBound& g, std::size_t component);
nlohmann::ordered_json to_json(const SliceCertificate& c);
nlohmann::ordered_json to_json(const SteinReport& r);

nlohmann::ordered_json invariants_report(const OrientedFront& of);
nlohmann::ordered_json pushoff_report(const PushOffResult& po);

// Serialises with two-space indentation and a trailing newline.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace legfront::cli
