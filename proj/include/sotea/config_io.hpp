#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sotea/engines.hpp"
#include "sotea/growth.hpp"

namespace sotea {

using Json = nlohmann::json;

// Bumped whenever a persisted JSON or CSV layout changes.
inline constexpr int kSchemaVersion = 1;

// Unknown keys and bad enum names throw std::invalid_argument.
Json to_json(const EngineConfig& cfg);
EngineConfig engine_config_from_json(const Json& j);

Json to_json(const GrowthConfig& cfg);
GrowthConfig growth_config_from_json(const Json& j);

// Run metadata and best individual; trace and snapshots are stored apart.
Json record_metadata(const RunRecord& rec, const ProblemSpec& p);
// Rebuilds the record by re-evaluating the stored best genome.
RunRecord record_from_json(const Json& j, std::vector<GenerationRow> trace);

// generation,evals,best,feasible with round-trip precision.
void write_trace_csv(std::ostream& out, const std::vector<GenerationRow>& trace);
std::vector<GenerationRow> read_trace_csv(std::istream& in);

// Reads the output of to_dot. Throws std::invalid_argument on other input.
PopulationGraph graph_from_dot(const std::string& dot);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sotea
